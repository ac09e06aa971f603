#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "ukin/exactnum.hpp"

#include <cmath>
#include <random>

using namespace ukin;

namespace {

PiScalar random_scalar(std::mt19937 &rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12), terms(0, 3);
  std::uniform_int_distribution<int> exp(-3, 3);
  PiScalar x;
  for (long i = terms(rng); i > 0; --i)
    x += PiScalar(Rational(num(rng), den(rng)), exp(rng));
  return x;
}

} // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).sign() < 0);
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == Rational(6));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(5, -1) == Rational(0));
  CHECK(binomial(60, 30) == Rational(oracle::binom(60, 30)));
  CHECK_THROWS(binomial(-1, 0));
}

TEST_CASE("pi scalar arithmetic examples") {
  const PiScalar half_inv(Rational(1, 2), -1);
  CHECK(add(half_inv, half_inv) == PiScalar::pi_power(-1));
  CHECK(mul(PiScalar(Rational(2, 3), 1), PiScalar(Rational(4, 3), -1)) == PiScalar(Rational(8, 9)));
  const PiScalar x(Rational(7, 5), 3);
  CHECK(add(x, neg(x)).is_zero());
  CHECK(add(x, neg(x)) == PiScalar());
}

TEST_CASE("division by a pi monomial") {
  CHECK(div_by_monomial(PiScalar(Rational(4, 3), 1), PiScalar::pi_power(1)) == PiScalar(Rational(4, 3)));
  const PiScalar a = PiScalar(Rational(8, 9), -1) + PiScalar(Rational(2), 1);
  const PiScalar expect = PiScalar(Rational(8, 3), -1) + PiScalar(Rational(6), 1);
  CHECK(div_by_monomial(a, PiScalar(Rational(1, 3))) == expect);
  CHECK_THROWS_AS(div_by_monomial(PiScalar::pi_power(1), PiScalar::pi_power(1) + PiScalar(1)), DivisionError);
  CHECK_THROWS_AS(div_by_monomial(PiScalar(1), PiScalar()), DivisionError);
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const PiScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + PiScalar() == a);
    CHECK(a * PiScalar(1) == a);
    CHECK((a - a).is_zero());
    const PiScalar m(Rational(trial + 1, 7), trial % 5 - 2);
    CHECK(div_by_monomial(a * m, m) == a);
  }
}

TEST_CASE("ball volumes") {
  CHECK(ball_volume(0) == PiScalar(1));
  CHECK(ball_volume(1) == PiScalar(2));
  CHECK(ball_volume(2) == PiScalar::pi_power(1));
  CHECK(ball_volume(3) == PiScalar(Rational(4, 3), 1));
  CHECK(ball_volume(4) == PiScalar(Rational(1, 2), 2));
  CHECK(ball_volume(5) == PiScalar(Rational(8, 15), 2));
  for (int m = 2; m <= 60; ++m)
    CHECK(ball_volume(m) == ball_volume(m - 2) * PiScalar(Rational(2, m), 1));
  for (int m = 0; m <= 60; ++m) {
    CHECK(ball_volume(m).is_monomial());
    CHECK(oracle::at(ball_volume(m), 3) == oracle::omega(m, 3));
  }
  for (int m = 0; m <= 20; ++m) {
    const double expect = std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0 + 1);
    CHECK(oracle::at(ball_volume(m), mpq_class(M_PI)).get_d() == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("rendering") {
  const PiScalar a = PiScalar(Rational(8, 9), -1) + PiScalar(Rational(2), 1);
  CHECK(a.to_text() == "8/9 * pi^-1 + 2 * pi");
  CHECK(PiScalar().to_text() == "0");
  CHECK(PiScalar::pi_power(1).to_text() == "pi");
  CHECK(PiScalar(Rational(-1), 2).to_text() == "-pi^2");
  CHECK(PiScalar(Rational(8, 9), -1).to_latex() == "\\frac{8}{9\\pi}");
  CHECK(PiScalar(Rational(1, 8), 1).to_latex() == "\\frac{\\pi}{8}");
  CHECK(PiScalar(Rational(-2, 3)).to_latex() == "-\\frac{2}{3}");
  CHECK(latex_pi_monomial(Rational(4, 9), -1) == "\\frac{4}{9\\pi}");
}

TEST_CASE("json round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const PiScalar a = random_scalar(rng);
    CHECK(PiScalar::from_json(a.to_json()) == a);
  }
  CHECK(PiScalar(Rational(4, 9), -1).to_json().dump() == R"({"terms":[{"num":"4","den":"9","pi":-1}]})");
}
