#pragma once

// Polynomials in the commuting symbols s (degree 2) and t (degree 1), the
// generating-function families f_k, p_k, q_k, and the binomial identities
// that tie the hermitian intrinsic volumes to ball evaluations.

#include "ukin/exactnum.hpp"

#include <compare>
#include <map>
#include <string>

namespace ukin {

/// t^t_exp * s^s_exp. Ordered by ascending total degree, then ascending s-exponent.
struct Monomial {
  int t_exp = 0;
  int s_exp = 0;

  [[nodiscard]] int degree() const { return t_exp + 2 * s_exp; }

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
    if (auto c = a.degree() <=> b.degree(); c != 0)
      return c;
    return a.s_exp <=> b.s_exp;
  }
};

class STPoly {
public:
  using Terms = std::map<Monomial, PiScalar>;

  STPoly() = default;
  STPoly(PiScalar c) { add_term({0, 0}, c); } // NOLINT(google-explicit-constructor)
  STPoly(long c) : STPoly(PiScalar(c)) {}     // NOLINT(google-explicit-constructor)

  static STPoly t() { return monomial({1, 0}); }
  static STPoly s() { return monomial({0, 1}); }
  static STPoly monomial(Monomial m, const PiScalar &c = PiScalar(1));

  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] PiScalar coeff(Monomial m) const;
  /// Degree-d part under deg t = 1, deg s = 2.
  [[nodiscard]] STPoly homogeneous(int d) const;
  /// Largest degree among stored terms, -1 for zero.
  [[nodiscard]] int max_degree() const;

  void add_term(Monomial m, const PiScalar &c);

  STPoly &operator+=(const STPoly &o);
  STPoly &operator-=(const STPoly &o);
  STPoly &operator*=(const PiScalar &c);
  friend STPoly operator+(STPoly a, const STPoly &b) { return a += b; }
  friend STPoly operator-(STPoly a, const STPoly &b) { return a -= b; }
  friend STPoly operator-(STPoly a) { return a *= PiScalar(-1); }
  friend STPoly operator*(STPoly a, const PiScalar &c) { return a *= c; }
  friend STPoly operator*(const PiScalar &c, STPoly a) { return a *= c; }
  friend STPoly operator*(const STPoly &a, const STPoly &b);
  friend bool operator==(const STPoly &, const STPoly &) = default;

  /// "t^3 - 2*s*t"
  [[nodiscard]] std::string to_text() const;
  /// "t^{3} - 2st"
  [[nodiscard]] std::string to_latex() const;

private:
  Terms terms_;
};

STPoly pow(const STPoly &p, int e);

/// p_k: coefficient of x^k in 1/(1 + t x + s x^2), closed form.
STPoly p_poly(int k);
/// p_k through p_k = -t p_{k-1} - s p_{k-2}.
STPoly p_poly_recurrence(int k);
/// q_k: coefficient of x^k in -1/(1 + t x + s x^2)^2, closed form.
STPoly q_poly(int k);
/// q_k as -sum_{i} p_i p_{k-i}.
STPoly q_poly_cauchy(int k);
/// Fu polynomial f_k: coefficient of x^k in log(1 + t x + s x^2).
STPoly fu_poly(int k);
/// u = 4s - t^2
STPoly u_poly();

/// -(4s - t^2) q_{k-1} + t p_k == (k+1)^2 f_{k+1}
bool check_fpq_relation(int k);

/// t^{2n-2i-2j} s^i u^j evaluated on the unit ball of C^n, closed form.
Rational tsu_ball_value(int n, int i, int j);
/// Same value obtained by expanding u^j and evaluating t^{2n-2m} s^m(B) = C(2n-2m, n-m).
Rational tsu_ball_value_expanded(int n, int i, int j);

/// omega_{2n-k} (2n-k-2j)! (2j)! C(n-k+q, j) / pi^{2n-k}
PiScalar mustar_pairing(int n, int k, int q, int j);

/// 2^r C(m+r, r) == sum_i (-1)^i C(2m+2r-2i, r-2i) C(m+r, i), on the domain 2m + r >= 0.
bool combinat_identity(int r, int m);

/// Termwise check of the Zeilberger certificate for the identity above:
/// -(m+r+1) F(m,i) + (m+1) F(m+1,i) == G(m,i+1) - G(m,i).
bool wz_certificate_check(int r, int m, int i);

} // namespace ukin
