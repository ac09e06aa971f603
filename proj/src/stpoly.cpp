#include "ukin/stpoly.hpp"

#include <sstream>

namespace ukin {

STPoly STPoly::monomial(Monomial m, const PiScalar &c) {
  STPoly p;
  p.add_term(m, c);
  return p;
}

PiScalar STPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? PiScalar() : it->second;
}

STPoly STPoly::homogeneous(int d) const {
  STPoly r;
  for (const auto &[m, c] : terms_)
    if (m.degree() == d)
      r.terms_.emplace(m, c);
  return r;
}

int STPoly::max_degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.degree());
  return d;
}

void STPoly::add_term(Monomial m, const PiScalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

STPoly &STPoly::operator+=(const STPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

STPoly &STPoly::operator-=(const STPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

STPoly &STPoly::operator*=(const PiScalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, v] : terms_)
    v *= c;
  return *this;
}

STPoly operator*(const STPoly &a, const STPoly &b) {
  STPoly r;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      r.add_term({ma.t_exp + mb.t_exp, ma.s_exp + mb.s_exp}, ca * cb);
  return r;
}

STPoly pow(const STPoly &p, int e) {
  STPoly r(1);
  for (int i = 0; i < e; ++i)
    r = r * p;
  return r;
}

// ---------------------------------------------------------------- families

STPoly p_poly(int k) {
  if (k < 0)
    return {};
  STPoly r;
  const long sign_k = (k % 2 == 0) ? 1 : -1;
  for (int i = 0; i <= k / 2; ++i) {
    const long sign = sign_k * ((i % 2 == 0) ? 1 : -1);
    r.add_term({k - 2 * i, i}, PiScalar(binomial(k - i, i) * Rational(sign)));
  }
  return r;
}

STPoly p_poly_recurrence(int k) {
  if (k < 0)
    return {};
  STPoly prev2;    // p_{-1} = 0
  STPoly prev1(1); // p_0
  for (int i = 1; i <= k; ++i) {
    STPoly next = -(STPoly::t() * prev1) - STPoly::s() * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

STPoly q_poly(int k) {
  if (k < 0)
    return {};
  STPoly r;
  const long sign_k = (k % 2 == 0) ? -1 : 1;
  for (int i = 0; i <= k / 2; ++i) {
    const long sign = sign_k * ((i % 2 == 0) ? 1 : -1);
    r.add_term({k - 2 * i, i}, PiScalar(Rational(sign * (i + 1)) * binomial(k + 1 - i, i + 1)));
  }
  return r;
}

STPoly q_poly_cauchy(int k) {
  STPoly r;
  for (int i = 0; i <= k; ++i)
    r -= p_poly(i) * p_poly(k - i);
  return r;
}

STPoly fu_poly(int k) {
  if (k <= 0)
    return {};
  // k f_k = t p_{k-1} + 2 s p_{k-2}
  STPoly r = STPoly::t() * p_poly(k - 1) + PiScalar(2) * STPoly::s() * p_poly(k - 2);
  return r * PiScalar(Rational(1, k));
}

STPoly u_poly() { return PiScalar(4) * STPoly::s() - STPoly::t() * STPoly::t(); }

bool check_fpq_relation(int k) {
  if (k < 1)
    throw std::domain_error("check_fpq_relation: k must be >= 1");
  const STPoly lhs = -(u_poly() * q_poly(k - 1)) + STPoly::t() * p_poly(k);
  const STPoly rhs = fu_poly(k + 1) * PiScalar(static_cast<long>(k + 1) * (k + 1));
  return lhs == rhs;
}

// ---------------------------------------------------------------- ball values

Rational tsu_ball_value(int n, int i, int j) {
  if (n < 1 || i < 0 || j < 0 || i + j > n)
    throw std::domain_error("tsu_ball_value: need i, j >= 0 and i + j <= n");
  return binomial(2 * j, j) * binomial(2 * n - 2 * i - 2 * j, n - i - j) / binomial(n - i, j);
}

Rational tsu_ball_value_expanded(int n, int i, int j) {
  if (n < 1 || i < 0 || j < 0 || i + j > n)
    throw std::domain_error("tsu_ball_value_expanded: need i, j >= 0 and i + j <= n");
  const STPoly poly = pow(STPoly::t(), 2 * n - 2 * i - 2 * j) * pow(STPoly::s(), i) * pow(u_poly(), j);
  Rational total(0);
  for (const auto &[m, c] : poly.terms()) {
    // every monomial here has degree 2n: t^{2n-2m} s^m
    total += c.coeff(0) * binomial(2 * n - 2 * m.s_exp, n - m.s_exp);
  }
  return total;
}

PiScalar mustar_pairing(int n, int k, int q, int j) {
  if (n < 2 || k < 0 || k > 2 * n - 1 || q < std::max(0, k - n) || 2 * q > k)
    throw std::domain_error("mustar_pairing: invalid Delta index");
  if (j < 0 || 2 * j > 2 * n - k)
    throw std::domain_error("mustar_pairing: j out of range");
  const Rational c = Rational(mpz_class(factorial(2 * n - k - 2 * j) * factorial(2 * j))) * binomial(n - k + q, j);
  return ball_volume(2 * n - k) * PiScalar(c, -(2 * n - k));
}

// ---------------------------------------------------------------- identities

namespace {

Rational wz_F(int r, int m, int i) {
  if (i < 0 || 2 * i > r)
    return Rational(0);
  const Rational sign(i % 2 == 0 ? 1 : -1);
  return sign * binomial(2 * m + 2 * r - 2 * i, r - 2 * i) * binomial(m + r, i);
}

Rational wz_G(int r, int m, int i) {
  const Rational num = Rational(2L * i) * Rational(2L * m + 2L * r - 2L * i + 1) * Rational(m + r + 1);
  const Rational den = Rational(2L * m + r + 1) * Rational(2L * m + r + 2);
  return wz_F(r, m, i) * num / den;
}

} // namespace

bool combinat_identity(int r, int m) {
  if (r < 0 || 2 * m + r < 0)
    throw std::domain_error("combinat_identity: need r >= 0 and 2m + r >= 0");
  const mpz_class two_pow = pow2(r);
  const Rational lhs = Rational(two_pow) * binomial(m + r, r);
  Rational rhs(0);
  for (int i = 0; i <= r / 2; ++i)
    rhs += wz_F(r, m, i);
  return lhs == rhs;
}

bool wz_certificate_check(int r, int m, int i) {
  if (r < 0 || 2 * m + r < 0 || i < 0 || i > r / 2)
    throw std::domain_error("wz_certificate_check: indices outside the summation range");
  const Rational lhs = Rational(-(m + r + 1)) * wz_F(r, m, i) + Rational(m + 1) * wz_F(r, m + 1, i);
  const Rational rhs = wz_G(r, m, i + 1) - wz_G(r, m, i);
  return lhs == rhs;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string mono_text(Monomial m) {
  std::string out;
  auto part = [&](const char *sym, int e) {
    if (e == 0)
      return;
    if (!out.empty())
      out += "*";
    out += sym;
    if (e > 1)
      out += "^" + std::to_string(e);
  };
  part("s", m.s_exp);
  part("t", m.t_exp);
  return out;
}

std::string mono_latex(Monomial m) {
  std::string out;
  auto part = [&](const char *sym, int e) {
    if (e == 0)
      return;
    out += sym;
    if (e > 1)
      out += "^{" + std::to_string(e) + "}";
  };
  part("s", m.s_exp);
  part("t", m.t_exp);
  return out;
}

// Splits c into (negative?, magnitude) when c is a monomial.
bool leading_negative(const PiScalar &c) {
  return c.is_monomial() && c.terms().begin()->second.sign() < 0;
}

} // namespace

std::string STPoly::to_text() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    const bool negative = leading_negative(c);
    const PiScalar mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string mono = mono_text(m);
    std::string coeff;
    if (mag.is_monomial()) {
      const auto &[e, r] = *mag.terms().begin();
      if (e == 0)
        coeff = r.str();
      else
        coeff = (r == Rational(1) ? "" : r.str() + "*") + (e == 1 ? "pi" : "pi^" + std::to_string(e));
      if (coeff == "1" && !mono.empty())
        coeff.clear();
    } else {
      coeff = "(" + mag.to_text() + ")";
    }
    if (coeff.empty())
      os << mono;
    else if (mono.empty())
      os << coeff;
    else
      os << coeff << "*" << mono;
  }
  return os.str();
}

std::string STPoly::to_latex() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    const bool negative = leading_negative(c);
    const PiScalar mag = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mono = mono_latex(m);
    std::string coeff = mag.to_latex();
    if (coeff == "1" && !mono.empty())
      coeff.clear();
    out += coeff;
    if (!coeff.empty() && !mono.empty() && !mag.terms().begin()->second.is_integer())
      out += " ";
    else if (!coeff.empty() && !mono.empty() && mag.terms().begin()->first != 0)
      out += " ";
    out += mono;
  }
  return out;
}

} // namespace ukin
