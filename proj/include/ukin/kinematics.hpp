#pragma once

// Local, semi-local and global additive kinematic formulas read off from the
// dual product: the coefficient of b_i (x) b_j in A(target) is the pairing of
// b_i* b_j* with the target.

#include "ukin/areabasis.hpp"
#include "ukin/dualalgebra.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ukin {

enum class BasisMode { DeltaN, BGamma };
enum class FormulaKind { Local, SemiLocal, Global };

std::string basis_mode_name(BasisMode m); ///< "delta-n" / "b-gamma"
BasisMode parse_basis_mode(const std::string &name);

struct KinematicTable {
  using Key = std::pair<AreaIndex, AreaIndex>;

  int n = 2;
  AreaIndex target;
  BasisMode basis = BasisMode::DeltaN;
  FormulaKind kind = FormulaKind::Local;
  std::map<Key, PiScalar> entries; ///< zero coefficients omitted

  [[nodiscard]] PiScalar coeff(const AreaIndex &left, const AreaIndex &right) const;
  [[nodiscard]] bool is_symmetric() const;
};

/// Memoized pairwise products of dual basis elements for one n and basis mode.
class ProductTable {
public:
  ProductTable(const DualAlgebra &alg, BasisMode mode);

  [[nodiscard]] const DualAlgebra &algebra() const { return alg_; }
  [[nodiscard]] BasisMode mode() const { return mode_; }
  [[nodiscard]] const std::vector<AreaIndex> &basis() const { return basis_; }
  /// b_i* as an element in Delta*/N* coordinates.
  [[nodiscard]] const DualElement &dual(const AreaIndex &idx) const;
  /// b_i* b_j*, computed independently for each ordered pair.
  [[nodiscard]] const DualElement &product(const AreaIndex &a, const AreaIndex &b) const;

private:
  const DualAlgebra &alg_;
  BasisMode mode_;
  std::vector<AreaIndex> basis_;
  std::map<AreaIndex, DualElement> duals_;
  mutable std::map<KinematicTable::Key, DualElement> products_;
};

/// All ordered-pair products with degrees d1 and d2.
std::map<KinematicTable::Key, DualElement> product_table(const DualAlgebra &alg, int d1, int d2,
                                                         BasisMode mode = BasisMode::DeltaN);

/// Pairs a dual element with a primal element given in any family.
PiScalar pair_with_primal(int n, const DualElement &x, const AreaIndex &primal);

KinematicTable local_formula(const ProductTable &products, const AreaIndex &target);
KinematicTable local_formula(const DualAlgebra &alg, const AreaIndex &target, BasisMode mode);

/// One table per primal basis element of the mode, in (k, q) order.
std::vector<KinematicTable> full_table(const DualAlgebra &alg, BasisMode mode);

/// Coefficients of a(mu_{k,q}) over mu-pairs.
KinematicTable global_formula(const DualAlgebra &alg, int k, int q);

/// Drops N indices from the second slot of the local formula.
KinematicTable semilocal_formula(const DualAlgebra &alg, const AreaIndex &target);

enum class Format { Text, Latex, Json };
Format parse_format(const std::string &name);

std::string emit(const KinematicTable &table, Format format);
std::string emit(const std::vector<KinematicTable> &tables, Format format);
nlohmann::ordered_json table_to_json(const KinematicTable &table);

} // namespace ukin
