#include "ukin/verify.hpp"

#include <sstream>

namespace ukin {

// ---------------------------------------------------------------- Report

bool Report::all_pass() const {
  for (const auto &item : items)
    if (!item.pass)
      return false;
  return true;
}

void Report::add(std::string name, bool pass, std::string detail) {
  items.push_back({std::move(name), pass, std::move(detail)});
}

void Report::append(const Report &other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

Suite parse_suite(const std::string &name) {
  if (name == "relations")
    return Suite::Relations;
  if (name == "identities")
    return Suite::Identities;
  if (name == "algebra")
    return Suite::Algebra;
  if (name == "all")
    return Suite::All;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------- relations

Report verify_relations(const DualAlgebra &alg) {
  const int n = alg.n();
  const std::string ns = std::to_string(n);
  Report rep;
  auto zero_check = [&](const std::string &name, const DualElement &e) {
    rep.add(name, e.is_zero(), e.is_zero() ? "" : "nonzero: " + e.to_text());
  };

  const DualElement u = alg.unit();
  zero_check("f_" + std::to_string(n + 1) + " = 0", alg.eval_poly(fu_poly(n + 1), u));
  zero_check("f_" + std::to_string(n + 2) + " = 0", alg.eval_poly(fu_poly(n + 2), u));
  const DualElement pn = alg.eval_poly(p_poly(n), u);
  const DualElement qv = alg.eval_poly(q_poly(n - 1), u, true);
  zero_check("p_" + ns + " - q_" + std::to_string(n - 1) + "*v = 0", pn - qv);
  zero_check("p_" + ns + "*v = 0", alg.eval_poly(p_poly(n), u, true));
  zero_check("v*v = 0", alg.product(alg.vbar(), alg.vbar()));

  // B* B*' = 0 for every pair
  const auto bs = valid_indices(n, Family::B);
  std::string bad;
  int pairs = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const DualElement bi = DualElement::from_coords(n, {{bs[i], Rational(1)}});
    for (std::size_t j = i; j < bs.size(); ++j) {
      if (bs[i].k + bs[j].k > 2 * n - 1)
        continue;
      ++pairs;
      const DualElement bj = DualElement::from_coords(n, {{bs[j], Rational(1)}});
      const DualElement prod = alg.product(bi, bj);
      if (!prod.is_zero())
        bad += bs[i].to_string() + " * " + bs[j].to_string() + " = " + prod.to_text() + "; ";
    }
  }
  rep.add("B*B* = 0 (" + std::to_string(pairs) + " pairs)", bad.empty(), bad);

  // constant of p_n on Delta*_{n,0}
  const PiScalar expected = div_by_monomial(PiScalar(Rational(n % 2 == 0 ? 1 : -1) * Rational(pow2(n))),
                                            ball_volume(n));
  const AreaIndex top{Family::Delta, n, 0};
  const PiScalar got = pn.coeff(top);
  const bool only_top = pn.terms().size() == 1 && got == expected;
  rep.add("p_" + ns + " = (-1)^n 2^n/omega_n Delta*:" + ns + ",0", only_top,
          only_top ? "" : "expected " + expected.to_text() + ", got " + pn.to_text());
  return rep;
}

// ---------------------------------------------------------------- recurrence

ModuleRecurrence module_recurrence(int n) {
  require_dimension(n);
  ModuleRecurrence out;
  out.c.push_back(PiScalar(1));
  out.d.push_back(PiScalar());
  for (int i = 0; i < n; ++i) {
    const PiScalar factor = div_by_monomial(PiScalar(Rational(2 * (i + 1), n - i)) * ball_volume(n + i + 1),
                                            PiScalar::pi_power(1) * ball_volume(n + i));
    const PiScalar &ci = out.c.back();
    const PiScalar &di = out.d.back();
    PiScalar c_next = factor * PiScalar(n - i - 1) * ci;
    PiScalar d_next = factor * (ci + PiScalar(n - i) * di);
    out.c.push_back(std::move(c_next));
    out.d.push_back(std::move(d_next));
  }

  const PiScalar k_const = div_by_monomial(PiScalar(Rational(pow2(n - 1), mpz_class(n))) * ball_volume(2 * n - 1),
                                           ball_volume(2 * n - 2) * ball_volume(n));
  const auto un = static_cast<std::size_t>(n);
  out.penultimate_closed_form = out.c[un - 1] == k_const && out.d[un - 1] == k_const * PiScalar(n - 1);
  out.final_closed_form =
      out.c[un].is_zero() && out.d[un] == div_by_monomial(PiScalar(Rational(pow2(n))), ball_volume(n));

  // [[1,0],[1,2]] ... [[n-1,0],[1,n]] (1,0)^T = (n-1)! (1, n-1)^T
  mpz_class x = 1, y = 0;
  for (int m = n - 1; m >= 1; --m) {
    const mpz_class nx = m * x;
    const mpz_class ny = x + (m + 1) * y;
    x = nx;
    y = ny;
  }
  const mpz_class f = factorial(n - 1);
  out.matrix_identity = x == f && y == f * (n - 1);
  return out;
}

// ---------------------------------------------------------------- pairing

bool verify_delta_pairing(int n, int k, int q) {
  const STPoly closed = delta_star_closed_form(n, k, q);
  const PiScalar ball = ball_volume(2 * n);
  for (int j = 0; 2 * j <= 2 * n - k; ++j) {
    PiScalar rhs;
    for (const auto &[m, c] : closed.terms())
      rhs += c * PiScalar(tsu_ball_value(n, m.s_exp, j));
    if (div_by_monomial(rhs, ball) != mustar_pairing(n, k, q, j))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------- suites

Report verify_identities(int n) {
  Report rep;
  {
    std::string bad;
    for (int k = 0; k <= 40; ++k) {
      if (p_poly(k) != p_poly_recurrence(k))
        bad += "p_" + std::to_string(k) + " ";
      if (q_poly(k) != q_poly_cauchy(k))
        bad += "q_" + std::to_string(k) + " ";
    }
    rep.add("p_k, q_k closed forms = series recurrences (k <= 40)", bad.empty(), bad);
  }
  {
    std::string bad;
    for (int k = 1; k <= 40; ++k)
      if (!check_fpq_relation(k))
        bad += std::to_string(k) + " ";
    rep.add("-(4s-t^2) q_{k-1} + t p_k = (k+1)^2 f_{k+1} (1 <= k <= 40)", bad.empty(), bad);
  }
  {
    std::string bad;
    const int top = std::max(8, n);
    for (int nn = 1; nn <= top; ++nn)
      for (int i = 0; i <= nn; ++i)
        for (int j = 0; i + j <= nn; ++j)
          if (tsu_ball_value(nn, i, j) != tsu_ball_value_expanded(nn, i, j))
            bad += "(" + std::to_string(nn) + "," + std::to_string(i) + "," + std::to_string(j) + ") ";
    rep.add("t^{2n-2i-2j} s^i u^j(B) closed form = expansion (n <= " + std::to_string(top) + ")",
            bad.empty(), bad);
  }
  {
    std::string bad;
    int count = 0;
    for (int r = 0; r <= 25; ++r)
      for (int m = -(r / 2); m + r <= 40; ++m) {
        ++count;
        if (!combinat_identity(r, m))
          bad += "(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ") ";
      }
    rep.add("combinat_identity sweep (r <= 25, 2m+r >= 0, m+r <= 40; " + std::to_string(count) + " cases)",
            bad.empty(), bad);
  }
  {
    std::string bad;
    int count = 0;
    for (int r = 0; r <= 10; ++r)
      for (int m = -(r / 2); m + r <= 40; ++m)
        for (int i = 0; i <= r / 2; ++i) {
          ++count;
          if (!wz_certificate_check(r, m, i))
            bad += "(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ",i=" + std::to_string(i) + ") ";
        }
    rep.add("WZ certificate recurrence (r <= 10; " + std::to_string(count) + " terms)", bad.empty(), bad);
  }
  {
    std::string bad;
    const int top = std::max(15, n);
    for (int nn = 2; nn <= top; ++nn) {
      const auto rec = module_recurrence(nn);
      if (!rec.penultimate_closed_form || !rec.final_closed_form || !rec.matrix_identity)
        bad += std::to_string(nn) + " ";
    }
    rep.add("t^n * B_{n,0} recurrence closed forms (2 <= n <= " + std::to_string(top) + ")", bad.empty(), bad);
  }
  {
    std::string bad;
    for (const auto &idx : valid_indices(n, Family::Delta))
      if (!verify_delta_pairing(n, idx.k, idx.q))
        bad += idx.to_string() + " ";
    rep.add("Delta* closed form pairing against ball values (n=" + std::to_string(n) + ")", bad.empty(), bad);
  }
  return rep;
}

Report verify_algebra(const DualAlgebra &alg) {
  const int n = alg.n();
  Report rep;
  const auto basis = dn_basis(n);
  const DualElement u = alg.unit();

  {
    std::string bad;
    for (const auto &idx : basis) {
      const DualElement x = alg.basis(idx);
      if (alg.mul_sbar(alg.mul_tbar(x)) != alg.mul_tbar(alg.mul_sbar(x)))
        bad += idx.to_string() + " ";
    }
    rep.add("s-bar t-bar = t-bar s-bar on every basis element", bad.empty(), bad);
  }
  {
    std::string bad;
    for (const auto &idx : valid_indices(n, Family::Delta))
      if (alg.eval_poly(delta_star_closed_form(n, idx.k, idx.q), u) != alg.basis(idx))
        bad += idx.to_string() + " ";
    rep.add("Delta* closed forms reproduce the basis", bad.empty(), bad);
  }
  {
    const Census cen = census(n);
    std::string bad;
    for (int d = 0; d <= 2 * n - 1; ++d) {
      const int rank = alg.monomial_image_rank(d);
      if (rank != cen.per_degree[static_cast<std::size_t>(d)])
        bad += "degree " + std::to_string(d) + ": rank " + std::to_string(rank) + " vs census " +
               std::to_string(cen.per_degree[static_cast<std::size_t>(d)]) + "; ";
    }
    rep.add("monomial-image rank = census in every degree", bad.empty(), bad);
  }
  {
    std::string bad_unit, bad_comm, bad_trunc;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const DualElement x = alg.basis(basis[i]);
      if (alg.product(u, x) != x)
        bad_unit += basis[i].to_string() + " ";
      for (std::size_t j = i; j < basis.size(); ++j) {
        const DualElement y = alg.basis(basis[j]);
        const DualElement xy = alg.product(x, y);
        if (xy != alg.product(y, x))
          bad_comm += basis[i].to_string() + "*" + basis[j].to_string() + " ";
        if (basis[i].k + basis[j].k > 2 * n - 1 && !xy.is_zero())
          bad_trunc += basis[i].to_string() + "*" + basis[j].to_string() + " ";
      }
    }
    rep.add("unit law", bad_unit.empty(), bad_unit);
    rep.add("product commutativity on basis pairs", bad_comm.empty(), bad_comm);
    rep.add("products above top degree vanish", bad_trunc.empty(), bad_trunc);
  }
  {
    std::string bad;
    const auto ns = valid_indices(n, Family::N);
    for (const auto &a : ns)
      for (const auto &b : ns)
        if (alg.product_nn(a, b) != alg.product(alg.basis(a), alg.basis(b)))
          bad += a.to_string() + "*" + b.to_string() + " ";
    rep.add("N*N* via reduction = canonical-form product", bad.empty(), bad);
  }
  return rep;
}

Report run_suite(int n, Suite suite) {
  require_dimension(n);
  Report rep;
  DualAlgebra alg(n);
  if (suite == Suite::Relations || suite == Suite::All)
    rep.append(verify_relations(alg));
  if (suite == Suite::Identities || suite == Suite::All)
    rep.append(verify_identities(n));
  if (suite == Suite::Algebra || suite == Suite::All)
    rep.append(verify_algebra(alg));
  return rep;
}

} // namespace ukin
