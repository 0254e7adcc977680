#pragma once

// The spin-model commuting square of a Hadamard matrix and its tower:
// Jones projections, correction unitaries and the projections P_i whose
// commutants give the relative commutants.
//
// Layout: a tensor word x_1 (x) x_2 (x) ... is stored as the Kronecker
// product with x_1 as the slowest index; a Diag leg occupies a full
// n-dimensional slot whose off-diagonal entries vanish.

#include <optional>
#include <string>
#include <vector>

#include "hadsub/hadamard.hpp"

namespace hadsub {

inline constexpr double kVerifyTol = 1e-8;
inline constexpr std::size_t kDefaultAmbientLimit = 4096;

enum class Leg { full, diag };

struct AlgebraDescriptor {
  std::size_t n = 0;
  std::vector<Leg> word;

  /// Descriptor of the tower algebra P_level (P_0 = M_n).
  static AlgebraDescriptor tower_level(std::size_t n, std::size_t level);

  std::size_t size() const { return ipow(n, static_cast<unsigned>(word.size())); }
  /// Linear dimension as an algebra: n^2 per Full leg, n per Diag leg.
  std::size_t dimension() const;
  std::string to_string() const;
  bool operator==(const AlgebraDescriptor&) const = default;
};

struct TowerElement {
  AlgebraDescriptor descriptor;
  Matrix mat;

  /// Largest entry outside the support allowed by the Diag legs.
  double support_defect() const;
};

/// Embed an element of P_i into P_{i+1}: x -> x (x) I when i is even, identity when odd.
TowerElement embed_next(const TowerElement& x);

/// Embed into the given tower level by repeated embed_next.
TowerElement embed_to(const TowerElement& x, std::size_t level);

/// Tower level of an algebra descriptor, if it is one.
std::optional<std::size_t> tower_level_of(const AlgebraDescriptor& d);

/// The Jones projection e_index (index >= 2), living in P_{index-2}:
/// e_2 = (1/n) sum e_ij, e_3 = sum e_ii (x) e_ii, e_{2k+2} = I^{(x)k} (x) e_2,
/// e_{2k+3} = I^{(x)k} (x) e_3.
TowerElement jones_projection(std::size_t index, std::size_t n);

enum class CorrectionKind { diagonal, first, level };

/// D_U = sum conj(h_ij) e_jj (x) e_ii (unit modulus, h = sqrt(n) u), U_1 = (U (x) I) D_U,
/// U_{2k+1} = prod_{i=0..k} (I^{(x)i} (x) U_1 (x) I^{(x)(k-i)}), U_{2k} = U_{2k-1} (I^{(x)k} (x) U).
/// `level` selects k for CorrectionKind::level. Throws InputError for non-unitary U.
TowerElement correction_unitary(const Matrix& u, CorrectionKind which, std::size_t level = 1);

/// P_i = U_i e_{i+3} U_i^* in P_{i+1}. Throws InputError when the ambient size
/// exceeds `ambient_limit` or i == 0.
TowerElement tower_projection(const Matrix& u, std::size_t i,
                              std::size_t ambient_limit = kDefaultAmbientLimit);

enum class BasicInclusion { scalars_in_diagonal, diagonal_in_full, full_in_first };

struct BasicConstructionCheck {
  bool passed = false;
  double expectation_defect = 0.0;  // max |e x e - E(x) e| over the basis
  std::size_t generated_dim = 0;    // dim span(B + B e B)
  std::size_t expected_dim = 0;     // dim of the top algebra
};

/// Checks that the Jones projection of `which` implements the trace-preserving
/// expectation and generates the next algebra. `projection` replaces the
/// standard projection (used to show a wrong choice fails).
BasicConstructionCheck verify_basic_construction(std::size_t n, BasicInclusion which,
                                                 const std::optional<Matrix>& projection = std::nullopt,
                                                 double tol = kVerifyTol);

struct CommutingSquareCheck {
  bool passed = false;
  double worst_defect = 0.0;
  bool irreducible = false;
  std::size_t intersection_dim = 0;  // dim(D_n cap U D_n U^*)
};

/// E_{D_n}(U e_kk U^*) = I/n for all k, plus the dimension of D_n cap U D_n U^*.
CommutingSquareCheck verify_commuting_square(const Matrix& u, double tol = kVerifyTol);
CommutingSquareCheck verify_commuting_square(const HadamardMatrix& h, double tol = kVerifyTol);

}  // namespace hadsub
