#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace hadsub {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Unit-circle point e^{i*angle}.
inline Complex unit(double angle) { return std::polar(1.0, angle); }

/// Kronecker product with the left factor as the slow (outer) index:
/// (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l], row (i,k) = i*rows(B) + k.
Matrix kron(const Matrix& a, const Matrix& b);

/// kron of a sequence, left to right.
Matrix kron_all(const std::vector<Matrix>& factors);

Matrix identity(std::size_t n);

/// Largest absolute entry.
double max_norm(const Matrix& m);

/// Entrywise max |m - m^*|.
double hermitian_defect(const Matrix& m);

/// max |m^2 - m| and |m - m^*|, whichever is larger.
double projection_defect(const Matrix& m);

/// max |m m^* - I|.
double unitary_defect(const Matrix& m);

/// tr(m) / rows(m).
Complex normalized_trace(const Matrix& m);

/// Conditional expectation onto the diagonal: zero every off-diagonal entry.
Matrix diagonal_part(const Matrix& m);

/// Numerical rank of a set of equally sized matrices viewed as vectors.
std::size_t span_rank(const std::vector<Matrix>& elements, double rel_tol = 1e-9);

/// Integer power for sizes.
std::size_t ipow(std::size_t base, unsigned exp);

}  // namespace hadsub
