#include "ukin/dualalgebra.hpp"

#include <sstream>

namespace ukin {

// ---------------------------------------------------------------- DualElement

DualElement DualElement::basis(int n, const AreaIndex &idx, const PiScalar &c) {
  if (idx.family != Family::Delta && idx.family != Family::N)
    throw InvalidIndex("dual coordinates are Delta*/N*; got " + idx.to_string());
  require_valid(n, idx);
  DualElement e(n);
  e.add_term(idx, c);
  return e;
}

DualElement DualElement::from_coords(int n, const Coords &coords) {
  DualElement e(n);
  for (const auto &[idx, c] : coords) {
    if (idx.family == Family::Delta || idx.family == Family::N) {
      require_valid(n, idx);
      e.add_term(idx, PiScalar(c));
    } else {
      for (const auto &[j, cj] : dual_bg_to_dn(n, idx))
        e.add_term(j, PiScalar(c * cj));
    }
  }
  return e;
}

PiScalar DualElement::coeff(const AreaIndex &idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? PiScalar() : it->second;
}

DualElement DualElement::degree_part(int k) const {
  DualElement r(n_);
  for (const auto &[idx, c] : terms_)
    if (idx.k == k)
      r.terms_.emplace(idx, c);
  return r;
}

void DualElement::add_term(const AreaIndex &idx, const PiScalar &c) {
  if (c.is_zero() || !is_valid(n_, idx))
    return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

DualElement &DualElement::operator+=(const DualElement &o) {
  for (const auto &[idx, c] : o.terms_)
    add_term(idx, c);
  return *this;
}

DualElement &DualElement::operator-=(const DualElement &o) {
  for (const auto &[idx, c] : o.terms_)
    add_term(idx, -c);
  return *this;
}

DualElement &DualElement::operator*=(const PiScalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[idx, v] : terms_)
    v *= c;
  return *this;
}

std::string DualElement::to_text() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[idx, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.to_text() << ") " << family_name(idx.family) << "*:" << idx.k << "," << idx.q;
  }
  return os.str();
}

// ---------------------------------------------------------------- operators

namespace {

// omega_{2n-k} / (pi omega_{2n-k-1})
PiScalar tbar_ratio(int n, int k) {
  return div_by_monomial(ball_volume(2 * n - k), PiScalar::pi_power(1) * ball_volume(2 * n - k - 1));
}

PiScalar rat(long num, long den = 1, int pi = 0) { return {Rational(num, den), pi}; }

} // namespace

DualAlgebra::DualAlgebra(int n) : n_(n) { require_dimension(n); }
DualAlgebra::~DualAlgebra() = default;

void DualAlgebra::check_same_n(const DualElement &x) const {
  if (x.n() != n_)
    throw std::invalid_argument("element belongs to n=" + std::to_string(x.n()) +
                                ", algebra has n=" + std::to_string(n_));
}

DualElement DualAlgebra::unit() const { return DualElement::basis(n_, {Family::Delta, 0, 0}); }

DualElement DualAlgebra::tbar() const { return mul_tbar(unit()); }

DualElement DualAlgebra::sbar() const { return mul_sbar(unit()); }

DualElement DualAlgebra::vbar() const {
  const PiScalar scale = div_by_monomial(PiScalar(2) * ball_volume(2 * n_ - 2), ball_volume(2 * n_ - 1));
  return DualElement::from_coords(n_, dual_bg_to_dn(n_, {Family::B, 1, 0})) * scale;
}

DualElement DualAlgebra::mul_tbar(const DualElement &x) const {
  check_same_n(x);
  const int n = n_;
  DualElement out(n);
  for (const auto &[idx, c] : x.terms()) {
    const int k = idx.k, q = idx.q;
    if (k + 1 > 2 * n - 1)
      continue;
    const PiScalar f = c * tbar_ratio(n, k);
    if (idx.family == Family::Delta) {
      out.add_term({Family::Delta, k + 1, q + 1}, f * rat(k - 2 * q));
      out.add_term({Family::Delta, k + 1, q}, f * rat(2 * (n - k + q)));
    } else {
      const PiScalar g = f * rat(k - 2 * q, 2 * n - k - 1);
      out.add_term({Family::Delta, k + 1, q + 1}, g);
      out.add_term({Family::Delta, k + 1, q}, -g);
      out.add_term({Family::N, k + 1, q + 1}, g * rat(2 * n - k));
      out.add_term({Family::N, k + 1, q}, g * rat(2L * (2 * n - k) * (n - k + q - 1), k - 2 * q + 1));
    }
  }
  return out;
}

DualElement DualAlgebra::mul_sbar(const DualElement &x) const {
  check_same_n(x);
  const int n = n_;
  DualElement out(n);
  for (const auto &[idx, c] : x.terms()) {
    const int k = idx.k, q = idx.q;
    if (k + 2 > 2 * n - 1)
      continue;
    if (idx.family == Family::Delta) {
      out.add_term({Family::Delta, k + 2, q + 2}, c * rat((k - 2 * q) * (k - 2 * q - 1), 2 * (2 * n - k), -1));
      out.add_term({Family::Delta, k + 2, q + 1}, c * rat(2L * (n - k + q) * (n - q), 2 * n - k, -1));
    } else {
      const PiScalar a = c * rat((k - 2 * q) * (k - 2 * q - 1), 2 * (2 * n - k - 2), -1);
      const PiScalar b = c * rat(2 * (n - q), 2 * n - k - 2, -1);
      out.add_term({Family::N, k + 2, q + 2}, a);
      out.add_term({Family::Delta, k + 2, q + 2}, a * rat(2, 2 * n - k));
      out.add_term({Family::N, k + 2, q + 1}, b * rat(n - k + q - 1));
      out.add_term({Family::Delta, k + 2, q + 1}, b * rat(-(k - 2 * q), 2 * n - k));
    }
  }
  return out;
}

DualElement DualAlgebra::eval_poly(const STPoly &p, const DualElement &x, bool with_v) const {
  check_same_n(x);
  DualElement base = x;
  if (with_v)
    base = (x == unit()) ? vbar() : product(vbar(), x);

  DualElement out(n_);
  if (p.is_zero() || base.is_zero())
    return out;
  // Terms are visited in ascending (degree, s-exponent) order; s-powers of the
  // base are built incrementally and t is applied on top.
  std::map<int, DualElement> s_powers;
  s_powers.emplace(0, base);
  for (const auto &[m, c] : p.terms()) {
    if (m.degree() > 2 * n_ - 1)
      continue;
    auto it = s_powers.find(m.s_exp);
    if (it == s_powers.end()) {
      auto prev = std::prev(s_powers.end());
      DualElement cur = prev->second;
      for (int b = prev->first; b < m.s_exp; ++b) {
        cur = mul_sbar(cur);
        s_powers.emplace(b + 1, cur);
      }
      it = s_powers.find(m.s_exp);
    }
    DualElement term = it->second;
    for (int a = 0; a < m.t_exp && !term.is_zero(); ++a)
      term = mul_tbar(term);
    out += term * c;
  }
  return out;
}

DualElement DualAlgebra::eval(const CanonicalForm &f) const {
  return eval_poly(f.phi, unit()) + eval_poly(f.psi, vbar());
}

// ---------------------------------------------------------------- per-degree systems

struct DualAlgebra::DegreeSystem {
  struct Column {
    Monomial mono;
    bool with_v = false;
  };
  std::vector<Column> columns;
  std::vector<AreaIndex> rows;
  // transform * A = rref(A); transform is rows x rows.
  std::vector<std::vector<PiScalar>> transform;
  std::vector<int> pivot_col; ///< pivot column of row r for r < rank
  int rank = 0;
};

const DualAlgebra::DegreeSystem &DualAlgebra::system(int d) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = systems_.find(d); it != systems_.end())
      return *it->second;
  }

  auto sys = std::make_unique<DegreeSystem>();
  // Columns ordered by s-exponent, plain monomial before its v-multiple.
  for (int b = 0; 2 * b <= d; ++b) {
    sys->columns.push_back({{d - 2 * b, b}, false});
    if (d - 1 - 2 * b >= 0)
      sys->columns.push_back({{d - 1 - 2 * b, b}, true});
  }
  sys->rows = dn_basis_of_degree(n_, d);
  const std::size_t nr = sys->rows.size(), nc = sys->columns.size();

  std::vector<std::vector<PiScalar>> a(nr, std::vector<PiScalar>(nc));
  const DualElement u = unit(), v = vbar();
  for (std::size_t j = 0; j < nc; ++j) {
    const auto &col = sys->columns[j];
    const DualElement img = eval_poly(STPoly::monomial(col.mono), col.with_v ? v : u);
    for (std::size_t r = 0; r < nr; ++r)
      a[r][j] = img.coeff(sys->rows[r]);
  }

  auto &e = sys->transform;
  e.assign(nr, std::vector<PiScalar>(nr));
  for (std::size_t r = 0; r < nr; ++r)
    e[r][r] = PiScalar(1);

  std::size_t rank = 0;
  for (std::size_t j = 0; j < nc && rank < nr; ++j) {
    std::size_t p = rank;
    while (p < nr && a[p][j].is_zero())
      ++p;
    if (p == nr)
      continue;
    std::swap(a[p], a[rank]);
    std::swap(e[p], e[rank]);
    const PiScalar pivot = a[rank][j];
    for (auto &x : a[rank])
      x = div_by_monomial(x, pivot);
    for (auto &x : e[rank])
      x = div_by_monomial(x, pivot);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == rank || a[r][j].is_zero())
        continue;
      const PiScalar f = a[r][j];
      for (std::size_t c = 0; c < nc; ++c)
        a[r][c] -= f * a[rank][c];
      for (std::size_t c = 0; c < nr; ++c)
        e[r][c] -= f * e[rank][c];
    }
    sys->pivot_col.push_back(static_cast<int>(j));
    ++rank;
  }
  sys->rank = static_cast<int>(rank);

  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = systems_.emplace(d, std::move(sys));
  return *it->second;
}

int DualAlgebra::monomial_image_rank(int d) const {
  if (d < 0 || d > 2 * n_ - 1)
    return 0;
  return system(d).rank;
}

CanonicalForm DualAlgebra::canonicalize(const DualElement &x) const {
  check_same_n(x);
  CanonicalForm out;
  for (int d = 0; d <= 2 * n_ - 1; ++d) {
    const DualElement part = x.degree_part(d);
    if (part.is_zero())
      continue;
    const DegreeSystem &sys = system(d);
    const std::size_t nr = sys.rows.size();
    std::vector<PiScalar> rhs(nr);
    for (std::size_t r = 0; r < nr; ++r)
      rhs[r] = part.coeff(sys.rows[r]);
    std::vector<PiScalar> y(nr);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nr; ++c)
        if (!sys.transform[r][c].is_zero() && !rhs[c].is_zero())
          y[r] += sys.transform[r][c] * rhs[c];
    for (std::size_t r = static_cast<std::size_t>(sys.rank); r < nr; ++r)
      if (!y[r].is_zero())
        throw InconsistentSystem("canonicalize: inconsistent system in degree " + std::to_string(d));
    for (int r = 0; r < sys.rank; ++r) {
      const auto &col = sys.columns[static_cast<std::size_t>(sys.pivot_col[static_cast<std::size_t>(r)])];
      (col.with_v ? out.psi : out.phi).add_term(col.mono, y[static_cast<std::size_t>(r)]);
    }
  }
  return out;
}

DualElement DualAlgebra::product(const DualElement &x, const DualElement &y) const {
  check_same_n(x);
  check_same_n(y);
  const CanonicalForm fx = canonicalize(x), fy = canonicalize(y);
  // v^2 = 0
  CanonicalForm f{fx.phi * fy.phi, fx.phi * fy.psi + fy.phi * fx.psi};
  return eval(f);
}

DualElement DualAlgebra::product_nn(const AreaIndex &a, const AreaIndex &b) const {
  if (a.family != Family::N || b.family != Family::N)
    throw InvalidIndex("product_nn expects two N indices");
  require_valid(n_, a);
  require_valid(n_, b);
  const STPoly delta_a = delta_star_closed_form(n_, a.k, a.q);
  const STPoly delta_b = delta_star_closed_form(n_, b.k, b.q);
  const DualElement na = basis(a), nb = basis(b);
  const DualElement da_nb = eval_poly(delta_a, nb);
  const DualElement db_na = eval_poly(delta_b, na);
  const DualElement da_db = eval_poly(delta_a, basis({Family::Delta, b.k, b.q}));
  // B* = x Delta* - y N*, so 0 = B*_a B*_b gives
  // N*_a N*_b = (x_a/y_a) Delta*_a N*_b + (x_b/y_b) Delta*_b N*_a - (x_a x_b)/(y_a y_b) Delta*_a Delta*_b
  const Rational ra(a.k - 2 * a.q, 2 * (n_ - a.k + a.q));
  const Rational rb(b.k - 2 * b.q, 2 * (n_ - b.k + b.q));
  return da_nb * PiScalar(ra) + db_na * PiScalar(rb) - da_db * PiScalar(ra * rb);
}

// ---------------------------------------------------------------- closed form

STPoly delta_star_closed_form(int n, int k, int q) {
  require_valid(n, {Family::Delta, k, q});
  const mpz_class two_pow = pow2(k - 2 * q);
  const Rational pre_rat = Rational(mpz_class(factorial(k - 2 * q) * factorial(n - k + q))) /
                           Rational(mpz_class(two_pow * factorial(n)));
  const PiScalar prefactor = ball_volume(2 * n - k) * PiScalar(pre_rat, k - n);
  STPoly out;
  for (int i = q; 2 * i <= k; ++i) {
    const Rational sign((i + q) % 2 == 0 ? 1 : -1);
    const Rational c = sign * Rational(factorial(n - i)) /
                       Rational(mpz_class(factorial(i - q) * factorial(k - 2 * i)));
    out.add_term({k - 2 * i, i}, prefactor * PiScalar(c));
  }
  return out;
}

} // namespace ukin
