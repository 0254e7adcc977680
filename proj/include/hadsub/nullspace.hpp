#pragma once

// Dimension of { X in span(basis) : [X, P] = 0 } without materializing the
// constraint matrix: only the Gram matrix of the commutator map is formed.

#include <cstdint>
#include <vector>

#include "hadsub/linalg.hpp"

namespace hadsub {

inline constexpr double kRankRelTol = 1e-10;
inline constexpr double kMinSpectralGap = 10.0;

/// A basis element written as a sum of matrix units E_{row,col} of the ambient algebra.
struct UnitSum {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> units;
};

struct NullityResult {
  std::size_t nullity = 0;
  std::size_t unknowns = 0;
  double largest_zero = 0.0;      // largest eigenvalue counted as zero
  double smallest_nonzero = 0.0;  // smallest eigenvalue counted as nonzero (0 if none)
  double top = 0.0;               // largest eigenvalue
  /// smallest_nonzero / largest_zero, floored so an exact zero gives a finite ratio.
  double gap() const;
  bool ambiguous() const { return gap() < kMinSpectralGap; }
};

/// G_{ab} = tr([X_a, P]^* [X_b, P]) from lookups into P, P P^* and P^* P.
Matrix commutator_gram(const std::vector<UnitSum>& basis, const Matrix& p);

/// Eigenvalues of the Gram matrix below rel_tol * (largest) count as zero.
NullityResult gram_nullity(const Matrix& gram, double rel_tol = kRankRelTol);

NullityResult commutant_nullity(const std::vector<UnitSum>& basis, const Matrix& p,
                                double rel_tol = kRankRelTol);

}  // namespace hadsub
