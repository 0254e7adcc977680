#include "hadsub/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hadsub {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix kron_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron_all: empty factor list");
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

Matrix identity(std::size_t n) {
  return Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

double max_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermitian_defect(const Matrix& m) { return max_norm(m - m.adjoint()); }

double projection_defect(const Matrix& m) {
  return std::max(max_norm(m * m - m), hermitian_defect(m));
}

double unitary_defect(const Matrix& m) {
  return max_norm(m * m.adjoint() - Matrix::Identity(m.rows(), m.cols()));
}

Complex normalized_trace(const Matrix& m) {
  return m.trace() / static_cast<double>(m.rows());
}

Matrix diagonal_part(const Matrix& m) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  out.diagonal() = m.diagonal();
  return out;
}

std::size_t span_rank(const std::vector<Matrix>& elements, double rel_tol) {
  if (elements.empty()) return 0;
  const Eigen::Index len = elements.front().size();
  Matrix stacked(len, static_cast<Eigen::Index>(elements.size()));
  for (std::size_t j = 0; j < elements.size(); ++j)
    stacked.col(static_cast<Eigen::Index>(j)) = elements[j].reshaped();
  // singular values directly: a Gram matrix would square the noise floor past rel_tol
  Eigen::BDCSVD<Matrix> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace hadsub
