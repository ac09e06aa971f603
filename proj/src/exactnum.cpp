#include "ukin/exactnum.hpp"

#include <sstream>

namespace ukin {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : value_(num, den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(const std::string &text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (v.get_den() == 0)
    throw std::domain_error("Rational: zero denominator");
  return Rational(std::move(v));
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

mpz_class factorial(long n) {
  if (n < 0)
    throw std::domain_error("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class pow2(long e) {
  if (e < 0)
    throw std::domain_error("pow2 of negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Rational binomial(long n, long k) {
  if (n < 0)
    throw std::domain_error("binomial: negative upper index");
  if (k < 0 || k > n)
    return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(std::move(r));
}

// ---------------------------------------------------------------- PiScalar

PiScalar::PiScalar(Rational coeff, int pi_exponent) {
  if (!coeff.is_zero())
    terms_.emplace(pi_exponent, std::move(coeff));
}

Rational PiScalar::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PiScalar::add_term(int e, const Rational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

PiScalar &PiScalar::operator+=(const PiScalar &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

PiScalar &PiScalar::operator-=(const PiScalar &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

PiScalar operator*(const PiScalar &a, const PiScalar &b) {
  PiScalar r;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      r.add_term(ea + eb, ca * cb);
  return r;
}

PiScalar &PiScalar::operator*=(const PiScalar &o) { return *this = *this * o; }

PiScalar operator-(const PiScalar &a) {
  PiScalar r;
  for (const auto &[e, c] : a.terms_)
    r.terms_.emplace(e, -c);
  return r;
}

PiScalar add(const PiScalar &a, const PiScalar &b) { return a + b; }
PiScalar mul(const PiScalar &a, const PiScalar &b) { return a * b; }
PiScalar neg(const PiScalar &a) { return -a; }

PiScalar div_by_monomial(const PiScalar &a, const PiScalar &b) {
  if (b.is_zero())
    throw DivisionError("div_by_monomial: division by zero");
  if (!b.is_monomial())
    throw DivisionError("div_by_monomial: divisor '" + b.to_text() + "' is not a pi-monomial");
  const auto &[eb, cb] = *b.terms().begin();
  PiScalar r;
  for (const auto &[e, c] : a.terms())
    r += PiScalar(c / cb, e - eb);
  return r;
}

PiScalar ball_volume(long m) {
  if (m < 0)
    throw std::domain_error("ball_volume: negative dimension");
  const long j = m / 2;
  if (m % 2 == 0)
    return {Rational(mpz_class(1), factorial(j)), static_cast<int>(j)};
  // omega_{2j+1} = 2^{2j+1} j! pi^j / (2j+1)!
  return {Rational(mpz_class(pow2(2 * j + 1) * factorial(j)), factorial(2 * j + 1)), static_cast<int>(j)};
}

// ---------------------------------------------------------------- rendering

namespace {

std::string pi_text(int e) {
  if (e == 1)
    return "pi";
  return "pi^" + std::to_string(e);
}

std::string pi_latex(int e) {
  if (e == 1)
    return "\\pi";
  return "\\pi^{" + std::to_string(e) + "}";
}

} // namespace

std::string PiScalar::to_text() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (e == 0)
      os << mag;
    else if (mag == Rational(1))
      os << pi_text(e);
    else
      os << mag << " * " << pi_text(e);
  }
  return os.str();
}

std::string latex_pi_monomial(const Rational &c, int e) {
  std::string sign = c.sign() < 0 ? "-" : "";
  const Rational mag = c.sign() < 0 ? -c : c;
  std::string num = mag.num().get_str();
  std::string den = mag.den().get_str();
  if (e > 0)
    num = (num == "1" ? "" : num) + pi_latex(e);
  else if (e < 0)
    den = (den == "1" ? "" : den) + pi_latex(-e);
  if (den == "1")
    return sign + num;
  return sign + "\\frac{" + num + "}{" + den + "}";
}

std::string PiScalar::to_latex() const {
  if (terms_.empty())
    return "0";
  if (is_monomial())
    return latex_pi_monomial(terms_.begin()->second, terms_.begin()->first);
  std::string out = "\\left(";
  bool first = true;
  for (const auto &[e, c] : terms_) {
    std::string t = latex_pi_monomial(c, e);
    if (!first)
      out += (t.front() == '-') ? " - " + t.substr(1) : " + " + t;
    else
      out += t;
    first = false;
  }
  return out + "\\right)";
}

nlohmann::ordered_json PiScalar::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &[e, c] : terms_)
    arr.push_back(nlohmann::ordered_json{{"num", c.num().get_str()}, {"den", c.den().get_str()}, {"pi", e}});
  return nlohmann::ordered_json{{"terms", arr}};
}

PiScalar PiScalar::from_json(const nlohmann::ordered_json &j) {
  PiScalar r;
  for (const auto &t : j.at("terms"))
    r += PiScalar(Rational(mpz_class(t.at("num").get<std::string>()),
                           mpz_class(t.at("den").get<std::string>())),
                  t.at("pi").get<int>());
  return r;
}

} // namespace ukin
