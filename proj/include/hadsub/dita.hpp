#pragma once

// Dita-type structure: the Bisch projection of the intermediate subfactor
// and the two adjacent commuting squares it comes from.
//
// A Dita shape splits an index i (1-based) as i0 = (i-1) mod m + 1,
// i1 = (i - i0)/m + 1, i.e. H[(i1,i0),(j1,j0)] = a_{i1 j1} (B_{j1})_{i0 j0}.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hadsub/hadamard.hpp"
#include "hadsub/profile.hpp"
#include "hadsub/tower.hpp"

namespace hadsub {

class DitaShape {
 public:
  /// Throws InputError unless n = m k with m, k >= 2.
  DitaShape(std::size_t n, std::size_t m, std::size_t k);
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t k() const { return k_; }
  /// 0-based (i0, i1) of a 0-based index.
  std::size_t inner(std::size_t i) const { return i % m_; }
  std::size_t outer(std::size_t i) const { return i / m_; }
  std::string to_string() const;

  /// All shapes n = m k with m, k >= 2.
  static std::vector<DitaShape> divisors_of(std::size_t n);

 private:
  std::size_t n_, m_, k_;
};

struct BischProjection {
  DitaShape shape;
  Matrix mat;  // n^2 x n^2 diagonal: 1 at (i,j) with i0 == j0
};

BischProjection bisch_projection(const DitaShape& shape);

struct BischMembership {
  bool member = false;
  /// 1-based (i, c, j, d) of the largest offending p_{i,c}^{j,d} (i0 = j0, c0 != d0).
  std::optional<std::array<std::size_t, 4>> witness;
  double worst = 0.0;
};

/// Reads the profile: f commutes with P_1 iff p_{i,c}^{j,d} = 0 whenever i0 = j0 and c0 != d0.
BischMembership verify_bisch_membership(const ProfileTensor& p, const DitaShape& shape, double tol = kDefaultTol);
BischMembership verify_bisch_membership(const HadamardMatrix& h, const DitaShape& shape, double tol = kDefaultTol);

/// max |[f, P_1]|, the commutator route to the same fact.
double bisch_commutator_defect(const ProfileTensor& p, const DitaShape& shape);

struct DecompositionCheck {
  std::string name;
  double defect = 0.0;
  std::string location;  // where the worst defect was found, if any
  bool passed = false;
};

struct IntermediateReport {
  DitaShape shape;
  std::vector<DecompositionCheck> checks;
  bool passed = false;
  /// Worst failing check, or empty.
  std::string summary() const;
};

/// Builds H from (A, B_j D_j) and checks the two adjacent commuting squares:
///  - each B_j is Hadamard and U = H/sqrt(n) is unitary,
///  - lower square commutes: E_{D_m (x) I_k}(U e_vv U^*) = I/n,
///  - U^*(D (x) I_k)U lies in M_m (x) D_k and equals (1/m) sum_j B_j^* D B_j (x) f_jj,
///  - E_{D_n}(U(X (x) D)U^*) = (1/n) sum_j D_jj E_{D_m}(B_j X B_j^*) (x) I_k,
///  - symmetry: both squares' corner products span their upper-right algebra.
/// Here X (x) Y with X in M_m and Y in M_k is the matrix with entries X_{i0 j0} Y_{i1 j1}.
IntermediateReport verify_intermediate_decomposition(const Matrix& a, const std::vector<Matrix>& b,
                                                     const std::vector<Matrix>& d = {}, double tol = kVerifyTol);

struct BischExpectationCheck {
  bool passed = false;
  double worst = 0.0;
  std::size_t units_checked = 0;
};

/// f (x (x) I) f = (E(x) (x) I) f for every matrix unit x of M_n, E the
/// expectation onto D_m (x) M_k (keep e_rs iff r0 == s0).
BischExpectationCheck verify_bisch_expectation(const DitaShape& shape, double tol = kVerifyTol);

}  // namespace hadsub
