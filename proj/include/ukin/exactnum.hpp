#pragma once

// Exact scalars: GMP-backed rationals and Laurent polynomials in a formal,
// transcendental pi. Nothing in this library ever evaluates pi numerically.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace ukin {

class Rational {
public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpz_class v) : value_(std::move(v)) {}
  Rational(const mpz_class &num, const mpz_class &den);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "a" or "a/b" in decimal.
  static Rational parse(const std::string &text);

  [[nodiscard]] const mpq_class &raw() const { return value_; }
  [[nodiscard]] mpz_class num() const { return value_.get_num(); }
  [[nodiscard]] mpz_class den() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] std::string str() const { return value_.get_str(); }

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
  mpq_class value_;
};

mpz_class factorial(long n);
mpz_class pow2(long e);

/// Binomial coefficient for n >= 0; zero when k < 0 or k > n.
Rational binomial(long n, long k);

/// Laurent polynomial in pi with rational coefficients. Zero terms are never stored.
class PiScalar {
public:
  using Terms = std::map<int, Rational>;

  PiScalar() = default;
  PiScalar(long v) : PiScalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  PiScalar(Rational coeff, int pi_exponent = 0); // NOLINT(google-explicit-constructor)

  static PiScalar pi_power(int e) { return {Rational(1), e}; }

  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of pi^e (zero if absent).
  [[nodiscard]] Rational coeff(int e) const;

  PiScalar &operator+=(const PiScalar &o);
  PiScalar &operator-=(const PiScalar &o);
  PiScalar &operator*=(const PiScalar &o);

  friend PiScalar operator+(PiScalar a, const PiScalar &b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar &b) { return a -= b; }
  friend PiScalar operator*(const PiScalar &a, const PiScalar &b);
  friend PiScalar operator-(const PiScalar &a);
  friend bool operator==(const PiScalar &a, const PiScalar &b) = default;

  /// Text form, e.g. "8/9 * pi^-1 + 2 * pi"; zero renders as "0".
  [[nodiscard]] std::string to_text() const;
  /// LaTeX form, e.g. "\frac{8}{9\pi}". Non-monomials are wrapped in parentheses.
  [[nodiscard]] std::string to_latex() const;
  /// {"terms":[{"num":"8","den":"9","pi":-1}]}, ascending pi exponent.
  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static PiScalar from_json(const nlohmann::ordered_json &j);

  friend std::ostream &operator<<(std::ostream &os, const PiScalar &x) { return os << x.to_text(); }

private:
  void add_term(int e, const Rational &c);
  Terms terms_;
};

PiScalar add(const PiScalar &a, const PiScalar &b);
PiScalar mul(const PiScalar &a, const PiScalar &b);
PiScalar neg(const PiScalar &a);

class DivisionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact a / b where b is a single nonzero pi-monomial; throws DivisionError otherwise.
PiScalar div_by_monomial(const PiScalar &a, const PiScalar &b);

/// Volume of the m-dimensional euclidean unit ball as a pi-monomial.
PiScalar ball_volume(long m);

/// LaTeX for a single rational times pi^e, with an explicit sign only when negative.
std::string latex_pi_monomial(const Rational &c, int e);

} // namespace ukin
