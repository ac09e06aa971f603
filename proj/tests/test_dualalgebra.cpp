#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "ukin/dualalgebra.hpp"

using namespace ukin;

namespace {

AreaIndex D(int k, int q) { return {Family::Delta, k, q}; }
AreaIndex N(int k, int q) { return {Family::N, k, q}; }

PiScalar pq(long num, long den, int e = 0) { return PiScalar(Rational(num, den), e); }

DualElement elem(int n, std::initializer_list<std::pair<AreaIndex, PiScalar>> terms) {
  DualElement x(n);
  for (const auto &[idx, c] : terms)
    x.add_term(idx, c);
  return x;
}

oracle::Label label(const AreaIndex &idx) { return {idx.family == Family::N, idx.k, idx.q}; }

// Engine element evaluated at pi = P, in the oracle's coordinates.
oracle::Vec specialize(const oracle::DenseModel &m, const DualElement &x, const oracle::Q &P) {
  oracle::Vec v = m.zero();
  for (const auto &[idx, c] : x.terms())
    v[*m.index(label(idx))] += oracle::at(c, P);
  return v;
}

} // namespace

TEST_CASE("generators") {
  const DualAlgebra a2(2), a3(3);
  CHECK(a2.mul_tbar(a2.unit()) == elem(2, {{D(1, 0), pq(3, 2)}}));
  CHECK(a2.tbar() == elem(2, {{D(1, 0), pq(3, 2)}}));
  CHECK(a2.mul_sbar(a2.unit()) == elem(2, {{D(2, 1), pq(2, 1, -1)}}));
  CHECK(a3.mul_sbar(a3.unit()) == elem(3, {{D(2, 1), pq(3, 1, -1)}}));
  CHECK(a2.vbar() == elem(2, {{D(1, 0), pq(1, 2)}, {N(1, 0), pq(-1, 1)}}));
  CHECK(a3.vbar() == elem(3, {{D(1, 0), pq(3, 8)}, {N(1, 0), pq(-3, 2)}}));
}

TEST_CASE("multiplication rows") {
  const DualAlgebra a2(2), a3(3);
  CHECK(a2.mul_tbar(a2.basis(N(1, 0))) == elem(2, {{D(2, 1), pq(2, 3, -1)}, {D(2, 0), pq(-2, 3, -1)}}));
  CHECK(a2.mul_tbar(a2.basis(D(2, 0))) == a2.basis(D(3, 1)));
  CHECK(a2.mul_tbar(a2.basis(D(2, 1))) == a2.basis(D(3, 1)));
  CHECK(a2.mul_tbar(a2.basis(D(3, 1))).is_zero());
  const DualElement chain = a3.mul_tbar(a3.mul_sbar(a3.basis(N(2, 0)))) * pq(2, 9, 1);
  CHECK(chain == elem(3, {{D(5, 2), pq(-5, 18)}}));
}

TEST_CASE("polynomial evaluation") {
  const DualAlgebra a2(2);
  const STPoly t = STPoly::t(), s = STPoly::s();
  CHECK(a2.eval(t * t) == elem(2, {{D(2, 0), pq(4, 1, -1)}, {D(2, 1), pq(2, 1, -1)}}));
  CHECK(a2.eval(p_poly(2)) == elem(2, {{D(2, 0), pq(4, 1, -1)}}));
  CHECK(a2.eval(fu_poly(3)).is_zero());
  CHECK(a2.eval_poly(p_poly(2), a2.unit(), true).is_zero());
  CHECK(a2.eval_poly(STPoly(1), a2.unit(), true) == a2.vbar());
}

TEST_CASE("closed forms of Delta*") {
  const STPoly t = STPoly::t(), s = STPoly::s();
  CHECK(delta_star_closed_form(2, 1, 0) == STPoly(pq(2, 3)) * t);
  CHECK(delta_star_closed_form(3, 2, 0) == STPoly(pq(1, 8, 1)) * t * t - STPoly(pq(1, 12, 1)) * s);
  for (int n = 2; n <= 6; ++n)
    CHECK(delta_star_closed_form(n, 2, 1) == STPoly(pq(1, n, 1)) * s);
  for (int n = 2; n <= 5; ++n) {
    const DualAlgebra alg(n);
    for (const auto &idx : valid_indices(n, Family::Delta))
      CHECK(alg.eval(delta_star_closed_form(n, idx.k, idx.q)) == alg.basis(idx));
  }
}

TEST_CASE("canonical forms") {
  const DualAlgebra a2(2);
  const CanonicalForm nf = a2.canonicalize(a2.basis(N(1, 0)));
  CHECK(nf.phi == STPoly(pq(1, 3)) * STPoly::t());
  CHECK(nf.psi == STPoly(-1));
  const DualElement b20 = DualElement::from_coords(2, {{AreaIndex{Family::B, 2, 0}, Rational(1)}});
  const CanonicalForm bf = a2.canonicalize(b20);
  CHECK(bf.phi.is_zero());
  CHECK_FALSE(bf.psi.is_zero());
  const CanonicalForm uf = a2.canonicalize(a2.unit());
  CHECK(uf.phi == STPoly(1));
  CHECK(uf.psi.is_zero());
  for (int n = 2; n <= 4; ++n) {
    const DualAlgebra alg(n);
    for (const auto &idx : dn_basis(n))
      CHECK(alg.eval(alg.canonicalize(alg.basis(idx))) == alg.basis(idx));
  }
}

TEST_CASE("worked products") {
  const DualAlgebra a2(2), a3(3);
  const DualElement d10 = a2.basis(D(1, 0)), n10 = a2.basis(N(1, 0));
  CHECK(a2.product(d10, d10) == elem(2, {{D(2, 0), pq(16, 9, -1)}, {D(2, 1), pq(8, 9, -1)}}));
  CHECK(a2.product(d10, n10) == elem(2, {{D(2, 0), pq(-4, 9, -1)}, {D(2, 1), pq(4, 9, -1)}}));
  CHECK(a2.product(n10, n10) == elem(2, {{D(2, 0), pq(-8, 9, -1)}, {D(2, 1), pq(2, 9, -1)}}));
  CHECK(a2.product_nn(N(1, 0), N(1, 0)) == a2.product(d10, n10) - a2.product(d10, d10) * pq(1, 4));

  const DualElement d20 = a3.basis(D(2, 0)), d31 = a3.basis(D(3, 1));
  const DualElement n20 = a3.basis(N(2, 0)), n31 = a3.basis(N(3, 1));
  CHECK(a3.product(d31, n20) == elem(3, {{D(5, 2), pq(-5, 18)}}));
  CHECK(a3.product(d31, d20) == elem(3, {{D(5, 2), pq(7, 18)}}));
  CHECK(a3.product(d20, n31) == elem(3, {{D(5, 2), pq(1, 9)}}));
  CHECK(a3.product(n20, n31) == elem(3, {{D(5, 2), pq(-2, 9)}}));
  const DualElement route =
      (a3.product(d20, n31) * PiScalar(2) + a3.product(d31, n20) - a3.product(d20, d31)) * pq(1, 2);
  CHECK(a3.product_nn(N(2, 0), N(3, 1)) == route);
}

TEST_CASE("products agree with the dense oracle") {
  for (int n = 2; n <= 4; ++n) {
    const DualAlgebra alg(n);
    for (const oracle::Q P : {oracle::Q(3), oracle::Q(7, 2)}) {
      const oracle::DenseModel model(n, P);
      REQUIRE(model.dim() == census(n).total);
      CHECK(specialize(model, alg.vbar(), P) == model.vbar());
      for (const auto &a : dn_basis(n)) {
        CHECK(specialize(model, alg.mul_tbar(alg.basis(a)), P) == model.tbar(model.basis(label(a))));
        CHECK(specialize(model, alg.mul_sbar(alg.basis(a)), P) == model.sbar(model.basis(label(a))));
        for (const auto &b : dn_basis(n)) {
          if (a.k + b.k > 2 * n - 1)
            continue;
          CAPTURE(n);
          CAPTURE(a.to_string());
          CAPTURE(b.to_string());
          const DualElement xy = alg.product(alg.basis(a), alg.basis(b));
          for (const auto &[idx, c] : xy.terms())
            CHECK(c.is_monomial());
          CHECK(specialize(model, xy, P) == model.product(model.basis(label(a)), model.basis(label(b))));
        }
      }
    }
  }
}

TEST_CASE("graded dimension matches the oracle rank") {
  for (int n = 2; n <= 5; ++n) {
    const DualAlgebra alg(n);
    const oracle::DenseModel model(n, 3);
    const Census c = census(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      CHECK(alg.monomial_image_rank(d) == c.per_degree[d]);
      CHECK(model.rank_of_degree(d) == c.per_degree[d]);
    }
  }
}

TEST_CASE("structural properties") {
  for (int n = 2; n <= 3; ++n) {
    const DualAlgebra alg(n);
    const auto basis = dn_basis(n);
    for (const auto &a : basis)
      for (const auto &b : basis) {
        const DualElement ab = alg.product(alg.basis(a), alg.basis(b));
        CHECK(ab == alg.product(alg.basis(b), alg.basis(a)));
        if (a.k + b.k > 2 * n - 1)
          CHECK(ab.is_zero());
        for (const auto &c : basis) {
          if (a.k + b.k + c.k > 2 * n - 1)
            continue;
          CAPTURE(a.to_string());
          CAPTURE(b.to_string());
          CAPTURE(c.to_string());
          CHECK(alg.product(ab, alg.basis(c)) == alg.product(alg.basis(a), alg.product(alg.basis(b), alg.basis(c))));
        }
      }
  }
  const DualAlgebra a4(4);
  for (const auto &a : dn_basis(4)) {
    CHECK(a4.mul_sbar(a4.mul_tbar(a4.basis(a))) == a4.mul_tbar(a4.mul_sbar(a4.basis(a))));
    CHECK(a4.product(a4.unit(), a4.basis(a)) == a4.basis(a));
  }
}

TEST_CASE("relations and constants") {
  for (int n = 2; n <= 6; ++n) {
    const DualAlgebra alg(n);
    CHECK(alg.eval(fu_poly(n + 1)).is_zero());
    CHECK(alg.eval(fu_poly(n + 2)).is_zero());
    CHECK(alg.eval(p_poly(n)) == alg.eval_poly(q_poly(n - 1), alg.unit(), true));
    CHECK(alg.eval_poly(p_poly(n), alg.unit(), true).is_zero());
    const PiScalar expect = PiScalar(Rational((n % 2 == 0 ? 1 : -1) * (1L << n))) * div_by_monomial(PiScalar(1), ball_volume(n));
    CHECK(alg.eval(p_poly(n)).coeff(D(n, 0)) == expect);
    CHECK(verify_relations(alg).all_pass());
  }
}

TEST_CASE("module recurrence and pairing") {
  const ModuleRecurrence r2 = module_recurrence(2);
  CHECK(r2.c.size() >= 2);
  CHECK(r2.c[1] == r2.d[1]);
  for (int n = 2; n <= 15; ++n) {
    const ModuleRecurrence r = module_recurrence(n);
    CHECK(r.penultimate_closed_form);
    CHECK(r.final_closed_form);
    CHECK(r.matrix_identity);
  }
  CHECK(verify_delta_pairing(2, 2, 1));
  CHECK(verify_delta_pairing(3, 3, 1));
  for (int n = 2; n <= 5; ++n)
    for (const auto &idx : valid_indices(n, Family::Delta))
      CHECK(verify_delta_pairing(n, idx.k, idx.q));
}

TEST_CASE("errors") {
  CHECK_THROWS(DualAlgebra(1));
  const DualAlgebra a2(2), a3(3);
  CHECK_THROWS_AS((void)a2.basis(D(9, 9)), InvalidIndex);
  CHECK_THROWS((void)a2.product(a2.unit(), a3.unit()));
  CHECK_THROWS(DualElement::basis(2, AreaIndex{Family::B, 1, 0}));
}
