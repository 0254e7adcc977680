#pragma once

#include <vector>

#include "hadsub/hadamard.hpp"

namespace hadsub {

/// p_{a,b}^{c,d} = sum_i u_{a,i} conj(u_{b,i}) conj(u_{c,i}) u_{d,i}, U = H/sqrt(n).
/// Indices are 0-based in code.
class ProfileTensor {
 public:
  ProfileTensor(std::size_t n, std::vector<Complex> coeffs);

  std::size_t n() const { return n_; }
  Complex operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return p_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  const std::vector<Complex>& coefficients() const { return p_; }

  /// P_1 = sum p_{a,b}^{c,d} e_{a,b} (x) e_{c,d}; row (a,c) = a*n + c, column (b,d).
  Matrix as_matrix() const;

  /// Largest violation of the conjugation/flip symmetries and the
  /// row-orthonormality identities p_{a,b}^{c,c} = p_{c,c}^{a,b} = delta_ab / n.
  double invariant_defect() const;

 private:
  std::size_t n_;
  std::vector<Complex> p_;
};

/// Direct summation over the rows of U.
ProfileTensor profile(const HadamardMatrix& h);
ProfileTensor profile_of(const Matrix& h);

}  // namespace hadsub
