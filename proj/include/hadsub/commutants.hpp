#pragma once

// Relative commutants of the subfactor attached to a Hadamard matrix.
//
// Order 2 is abelian and read off the profile graph (or, as an independent
// route, from the nullspace of [X, P_1] over D_n (x) D_n). Orders 3 and 4 are
// nullities of [X, P_i] over D_n' cap P_i.

#include <optional>
#include <string>
#include <vector>

#include "hadsub/nullspace.hpp"
#include "hadsub/profile.hpp"
#include "hadsub/tower.hpp"

namespace hadsub {

/// Blocks of 1-based vertex labels, (a,c) -> (a-1) n + c. Blocks are sorted
/// ascending and ordered by their smallest element.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t size() const { return blocks.size(); }
  /// "{1,6,11,16}, {2,7,12,13}, ..."
  std::string to_string() const;
  /// Checks disjointness and coverage of {1..n^2}.
  bool covers(std::size_t vertices) const;
  /// The Jones block {1, n+2, 2n+3, ..., n^2}.
  static std::vector<std::size_t> jones_block(std::size_t n);
  bool contains_block(const std::vector<std::size_t>& block) const;
  bool operator==(const Partition&) const = default;
  /// Sorts blocks and orders them by smallest element.
  void normalize();
};

enum class CommutantMethod { graph, nullspace };

struct CommutantResult {
  std::size_t order = 0;
  std::size_t dim = 0;
  std::optional<Partition> partition;  // order 2 only
  CommutantMethod method = CommutantMethod::graph;
  std::optional<NullityResult> spectrum;  // nullspace method only
  bool ambiguous() const { return spectrum && spectrum->ambiguous(); }
};

inline constexpr std::size_t kOrder3MaxN = 8;
inline constexpr std::size_t kOrder4MaxN = 6;

/// Connected components of Gamma_H: vertices (a,c), edge (a,c)-(b,d) iff |p_{a,b}^{c,d}| > tol.
CommutantResult second_commutant(const ProfileTensor& p, double tol = kDefaultTol);
CommutantResult second_commutant(const HadamardMatrix& h, double tol = kDefaultTol);

/// Nullspace of X -> [X, P_1] over D_n (x) D_n, with P_1 built from the
/// correction unitaries rather than the profile summation. The partition is
/// recovered from the support pattern of the nullspace basis.
CommutantResult second_commutant_direct(const HadamardMatrix& h, double rel_tol = kRankRelTol);

/// P_{2i+1} = sum p_{a,b}^{k1,l1} p_{k1,l1}^{k2,l2} ... p_{ki,li}^{c,d}
///            e_{a,b} (x) e_{k1,l1} (x) ... (x) e_{c,d}, scaled by n^i
/// (the scaling that makes it a projection of normalized trace 1/n).
TowerElement odd_profile_compose(const ProfileTensor& p, std::size_t i,
                                 std::size_t ambient_limit = kDefaultAmbientLimit);

/// Dimension of D_n' cap Q_i = P_i' cap D_n' cap P_i for order = i + 1 in {2, 3, 4}.
/// Throws InputError when n exceeds the order's limit and `force` is false.
CommutantResult relative_commutant_dim(const HadamardMatrix& h, std::size_t order,
                                       double rel_tol = kRankRelTol, bool force = false);

/// Basis of D_n' cap P_i as matrix-unit sums in the ambient algebra P_{i+1}.
std::vector<UnitSum> commutant_basis(std::size_t n, std::size_t i);

}  // namespace hadsub
