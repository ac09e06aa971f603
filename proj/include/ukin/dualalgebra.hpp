#pragma once

// The dual algebra of unitary area measures on C^n, in Delta*/N* coordinates.
//
// Multiplication by t-bar and s-bar is given row by row on the dual basis;
// everything else (v-bar, canonical forms phi(s,t) + psi(s,t) v, general
// products) is derived from those two operators and v-bar^2 = 0. Any index a
// row formula emits outside its validity range (including degrees above
// 2n-1) stands for zero and is dropped.

#include "ukin/areabasis.hpp"
#include "ukin/exactnum.hpp"
#include "ukin/stpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace ukin {

class DualElement {
public:
  using Terms = std::map<AreaIndex, PiScalar>;

  explicit DualElement(int n) : n_(n) {}
  /// Single basis element; idx must be a valid Delta or N index.
  static DualElement basis(int n, const AreaIndex &idx, const PiScalar &c = PiScalar(1));
  /// Lifts B*/Gamma*/Delta*/N* coordinates into Delta*/N* coordinates.
  static DualElement from_coords(int n, const Coords &coords);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] PiScalar coeff(const AreaIndex &idx) const;
  [[nodiscard]] DualElement degree_part(int k) const;

  /// Adds c at idx; invalid indices are dropped (zero convention).
  void add_term(const AreaIndex &idx, const PiScalar &c);

  DualElement &operator+=(const DualElement &o);
  DualElement &operator-=(const DualElement &o);
  DualElement &operator*=(const PiScalar &c);
  friend DualElement operator+(DualElement a, const DualElement &b) { return a += b; }
  friend DualElement operator-(DualElement a, const DualElement &b) { return a -= b; }
  friend DualElement operator*(DualElement a, const PiScalar &c) { return a *= c; }
  friend DualElement operator*(const PiScalar &c, DualElement a) { return a *= c; }
  friend bool operator==(const DualElement &, const DualElement &) = default;

  /// "8/9 * pi^-1 Delta*:2,0 + ..." style listing, "0" when empty.
  [[nodiscard]] std::string to_text() const;

private:
  int n_;
  Terms terms_;
};

struct CanonicalForm {
  STPoly phi;
  STPoly psi;
};

/// Thrown when a degree system has no solution; indicates an internal defect.
class InconsistentSystem : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Generators and products for one ambient dimension n. Thread-safe; the
/// per-degree elimination data is computed once on first use.
class DualAlgebra {
public:
  explicit DualAlgebra(int n);
  ~DualAlgebra();
  DualAlgebra(const DualAlgebra &) = delete;
  DualAlgebra &operator=(const DualAlgebra &) = delete;

  [[nodiscard]] int n() const { return n_; }

  [[nodiscard]] DualElement unit() const;
  [[nodiscard]] DualElement tbar() const;
  [[nodiscard]] DualElement sbar() const;
  [[nodiscard]] DualElement vbar() const;
  [[nodiscard]] DualElement basis(const AreaIndex &idx) const { return DualElement::basis(n_, idx); }

  [[nodiscard]] DualElement mul_tbar(const DualElement &x) const;
  [[nodiscard]] DualElement mul_sbar(const DualElement &x) const;

  /// p(s-bar, t-bar) applied to x, or to v-bar * x when with_v is set.
  [[nodiscard]] DualElement eval_poly(const STPoly &p, const DualElement &x, bool with_v = false) const;
  /// p(s-bar, t-bar) as an element.
  [[nodiscard]] DualElement eval(const STPoly &p) const { return eval_poly(p, unit()); }
  /// phi(s-bar, t-bar) + psi(s-bar, t-bar) v-bar.
  [[nodiscard]] DualElement eval(const CanonicalForm &f) const;

  [[nodiscard]] CanonicalForm canonicalize(const DualElement &x) const;
  [[nodiscard]] DualElement product(const DualElement &x, const DualElement &y) const;
  /// N*_a N*_b through the reduction to Delta*N* and Delta*Delta* products.
  [[nodiscard]] DualElement product_nn(const AreaIndex &a, const AreaIndex &b) const;

  /// Rank of the matrix whose columns are the images of the degree-d
  /// monomials t^a s^b and t^a s^b v.
  [[nodiscard]] int monomial_image_rank(int d) const;

private:
  struct DegreeSystem;
  const DegreeSystem &system(int d) const;
  void check_same_n(const DualElement &x) const;

  int n_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<DegreeSystem>> systems_;
};

/// The polynomial in s, t whose evaluation at the unit is Delta*_{k,q}.
STPoly delta_star_closed_form(int n, int k, int q);

// ------------------------------------------------------------ self-checks

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail; ///< offending exact values on failure
};

struct Report {
  std::vector<CheckItem> items;
  [[nodiscard]] bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = {});
  void append(const Report &other);
};

/// Presentation relations, B*B* = 0, and the Delta*_{n,0} constant of p_n.
Report verify_relations(const DualAlgebra &alg);

struct ModuleRecurrence {
  std::vector<PiScalar> c;
  std::vector<PiScalar> d;
  bool penultimate_closed_form = false; ///< (c_{n-1}, d_{n-1}) = K (1, n-1)
  bool final_closed_form = false;       ///< (c_n, d_n) = (0, 2^n / omega_n)
  bool matrix_identity = false;         ///< integer 2x2 product = (n-1)! (1, n-1)
};

ModuleRecurrence module_recurrence(int n);

/// Compares both sides of the pairing identity behind the Delta* closed form
/// for every admissible j.
bool verify_delta_pairing(int n, int k, int q);

} // namespace ukin
