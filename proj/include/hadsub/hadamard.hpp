#pragma once

// Complex Hadamard matrices: verification, dephasing, the parametric
// catalog, Dita composition and equivalence fingerprints.

#include <cstdint>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hadsub/linalg.hpp"

namespace hadsub {

inline constexpr double kDefaultTol = 1e-9;

/// Thrown for malformed inputs (non-square, NaN, bad family parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds a configured size limit.
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

/// A matrix that has passed verify_hadamard. Only constructible through
/// verification, so holding one is a certificate.
class HadamardMatrix {
 public:
  std::size_t n() const { return static_cast<std::size_t>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  double tol() const { return tol_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return mat_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  /// U = H / sqrt(n).
  Matrix unitary() const { return mat_ / std::sqrt(static_cast<double>(n())); }

 private:
  friend struct HadamardCheck;
  HadamardMatrix(Matrix m, double tol) : mat_(std::move(m)), tol_(tol) {}
  Matrix mat_;
  double tol_;
};

/// First violated constraint. Indices are 1-based.
struct HadamardDiagnostic {
  enum class Kind { entry_modulus, row_orthogonality };
  Kind kind;
  std::size_t row = 0;
  std::size_t col = 0;  // second row for row_orthogonality
  double magnitude = 0.0;
  std::string message() const;
};

struct HadamardCheck {
  std::optional<HadamardMatrix> matrix;
  std::optional<HadamardDiagnostic> diagnostic;
  bool ok() const { return matrix.has_value(); }
  /// Returns the witness or throws InputError carrying the diagnostic.
  HadamardMatrix value() const;

  static HadamardCheck run(const Matrix& mat, double tol);
};

/// Throws InputError for non-square input, NaN/Inf entries or tol <= 0.
HadamardCheck verify_hadamard(const Matrix& mat, double tol = kDefaultTol);

/// h'_ij = h_ij conj(h_i1) conj(h_1j) h_11, so that row 1 and column 1 are all ones.
HadamardMatrix dephase(const HadamardMatrix& h);

// ---------------------------------------------------------------------------
// Catalog

enum class Family { fourier, f4, f6, bn6, p7, f8, tao, haagerup };

struct FamilySpec {
  Family family;
  /// Angles in radians (fourier: a single entry holding n).
  std::vector<double> params;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::size_t family_arity(Family f);
/// Matrix order for the family (fourier reads it from params).
std::size_t family_order(const FamilySpec& spec);
std::vector<Family> all_families();

/// Bounds of the valid BN_6 angle set: |theta| in [bn6_min_angle(), pi].
double bn6_min_angle();

/// Validates arity and domain; throws InputError.
void validate(const FamilySpec& spec);

/// The family member, entry formulas and row/column order as published.
/// Throws InputError for invalid specs or if the result is not Hadamard.
HadamardMatrix catalog_matrix(const FamilySpec& spec, double tol = kDefaultTol);

/// Unverified entries, for callers that want to inspect a failing branch.
Matrix catalog_entries(const FamilySpec& spec);

/// Fourier matrix with entries w^{ij}, i,j = 1..n.
Matrix fourier_entries(std::size_t n);

// ---------------------------------------------------------------------------
// Dita composition

/// Block matrix H[(i,r),(j,s)] = a_ij (B_j D_j)_{rs} with A k x k and each B_j m x m.
/// Throws InputError on mismatched sizes or a non-unimodular diagonal.
Matrix dita_entries(const Matrix& a, const std::vector<Matrix>& b,
                    const std::vector<Matrix>& d = {});

HadamardMatrix dita_compose(const HadamardMatrix& a, const std::vector<HadamardMatrix>& b,
                            const std::vector<Matrix>& d = {}, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Equivalence

/// Sorted multiset of profile moduli, rounded to ceil(-log10 tol) decimals.
std::vector<double> equivalence_fingerprint(const HadamardMatrix& h, double tol = kDefaultTol);

/// Hex SHA-256 of the fingerprint values printed with the rounding precision.
std::string fingerprint_digest(const std::vector<double>& fingerprint, double tol = kDefaultTol);

/// P1 D1 H D2 P2 with seeded permutations and unit diagonals.
HadamardMatrix random_equivalence(const HadamardMatrix& h, std::uint64_t seed);

}  // namespace hadsub
