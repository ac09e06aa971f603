#pragma once

// Index bookkeeping for the unitary area-measure bases Delta/N and B/Gamma
// of C^n, their dual bases, and the 2x2 changes of basis between them.

#include "ukin/exactnum.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ukin {

enum class Family { Delta, N, B, Gamma };

std::string family_name(Family f);

struct AreaIndex {
  Family family = Family::Delta;
  int k = 0;
  int q = 0;

  [[nodiscard]] int degree() const { return k; }

  friend bool operator==(const AreaIndex &, const AreaIndex &) = default;
  /// (k, q) lexicographic, family breaking ties in declaration order.
  friend std::strong_ordering operator<=>(const AreaIndex &a, const AreaIndex &b) {
    if (auto c = a.k <=> b.k; c != 0)
      return c;
    if (auto c = a.q <=> b.q; c != 0)
      return c;
    return static_cast<int>(a.family) <=> static_cast<int>(b.family);
  }

  /// "Delta:2,1"
  [[nodiscard]] std::string to_string() const;
  /// "\Delta_{2,1}"
  [[nodiscard]] std::string to_latex() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
  /// Parses "Delta:k,q", "N:k,q", "B:k,q", "Gamma:k,q".
  static AreaIndex parse(const std::string &text);
};

class InvalidIndex : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws std::invalid_argument for n < 2.
void require_dimension(int n);

bool is_valid(int n, const AreaIndex &idx);
void require_valid(int n, const AreaIndex &idx);

/// All valid indices of a family, ordered by (k, q).
std::vector<AreaIndex> valid_indices(int n, Family family);
/// Delta and N indices merged in (k, q) order: the coordinate basis of the dual algebra.
std::vector<AreaIndex> dn_basis(int n);
std::vector<AreaIndex> dn_basis_of_degree(int n, int k);
/// B and Gamma indices merged in (k, q) order.
std::vector<AreaIndex> bg_basis(int n);

struct Census {
  std::vector<int> per_degree; ///< Delta + N count for k = 0 .. 2n-1
  int total = 0;
};
Census census(int n);

/// Sparse coordinates over basis labels.
using Coords = std::map<AreaIndex, Rational>;

/// Dual B*/Gamma* element in Delta*/N* coordinates. Terms on invalid indices are dropped.
Coords dual_bg_to_dn(int n, const AreaIndex &idx);
/// Primal Delta/N element in B/Gamma coordinates.
Coords primal_bg_from_dn(int n, const AreaIndex &idx);
/// Primal B/Gamma element in Delta/N coordinates (inverse of the 2x2 block).
Coords primal_dn_from_bg(int n, const AreaIndex &idx);
/// Dual Delta*/N* element in B*/Gamma* coordinates (inverse of dual_bg_to_dn).
Coords dual_dn_to_bg(int n, const AreaIndex &idx);

} // namespace ukin
