#include "hadsub/tower.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hadsub {

namespace {

Matrix e2_matrix(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  return Matrix::Constant(nn, nn, Complex(1.0 / static_cast<double>(n)));
}

Matrix e3_matrix(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Zero(nn * nn, nn * nn);
  for (Eigen::Index i = 0; i < nn; ++i) m(i * nn + i, i * nn + i) = 1.0;
  return m;
}

void require_unitary(const Matrix& u) {
  if (u.rows() != u.cols() || u.rows() < 1) throw InputError("correction unitary: U must be square");
  if (unitary_defect(u) > kVerifyTol) throw InputError("correction unitary: U is not unitary");
}

}  // namespace

AlgebraDescriptor AlgebraDescriptor::tower_level(std::size_t n, std::size_t level) {
  AlgebraDescriptor d;
  d.n = n;
  d.word.assign(level / 2 + 1, Leg::full);
  if (level % 2 == 1) d.word.push_back(Leg::diag);
  return d;
}

std::size_t AlgebraDescriptor::dimension() const {
  std::size_t dim = 1;
  for (Leg l : word) dim *= l == Leg::full ? n * n : n;
  return dim;
}

std::string AlgebraDescriptor::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " (x) ";
    s += (word[i] == Leg::full ? "M" : "D") + std::to_string(n);
  }
  return s;
}

std::optional<std::size_t> tower_level_of(const AlgebraDescriptor& d) {
  if (d.word.empty()) return std::nullopt;
  const bool odd = d.word.back() == Leg::diag;
  const std::size_t full = d.word.size() - (odd ? 1 : 0);
  const std::size_t level = 2 * (full - 1) + (odd ? 1 : 0);
  if (AlgebraDescriptor::tower_level(d.n, level) == d) return level;
  return std::nullopt;
}

double TowerElement::support_defect() const {
  const std::size_t legs = descriptor.word.size();
  const std::size_t n = descriptor.n;
  double worst = 0.0;
  for (Eigen::Index r = 0; r < mat.rows(); ++r)
    for (Eigen::Index c = 0; c < mat.cols(); ++c) {
      auto rr = static_cast<std::size_t>(r), cc = static_cast<std::size_t>(c);
      // digits from the fastest (last) leg backwards
      for (std::size_t p = legs; p-- > 0;) {
        if (descriptor.word[p] == Leg::diag && rr % n != cc % n) {
          worst = std::max(worst, std::abs(mat(r, c)));
          break;
        }
        rr /= n;
        cc /= n;
      }
    }
  return worst;
}

TowerElement embed_next(const TowerElement& x) {
  TowerElement out{x.descriptor, x.mat};
  const auto level = tower_level_of(x.descriptor);
  if (!level) throw InputError("embed_next: element is not in a tower algebra");
  if (*level % 2 == 0) {
    out.mat = kron(x.mat, identity(x.descriptor.n));
    out.descriptor.word.push_back(Leg::diag);
  } else {
    out.descriptor.word.back() = Leg::full;
  }
  return out;
}

TowerElement embed_to(const TowerElement& x, std::size_t level) {
  TowerElement out = x;
  auto cur = tower_level_of(x.descriptor);
  if (!cur || *cur > level) throw InputError("embed_to: cannot embed downwards");
  for (; *cur < level; ++*cur) out = embed_next(out);
  return out;
}

TowerElement jones_projection(std::size_t index, std::size_t n) {
  if (index < 2) throw InputError("Jones projections start at e_2");
  if (n < 2) throw InputError("Jones projection needs n >= 2");
  TowerElement out;
  out.descriptor = AlgebraDescriptor::tower_level(n, index - 2);
  const std::size_t k = (index - 2) / 2;
  const Matrix base = index % 2 == 0 ? e2_matrix(n) : e3_matrix(n);
  out.mat = k == 0 ? base : kron(identity(ipow(n, static_cast<unsigned>(k))), base);
  return out;
}

TowerElement correction_unitary(const Matrix& u, CorrectionKind which, std::size_t level) {
  require_unitary(u);
  const std::size_t n = static_cast<std::size_t>(u.rows());
  const auto nn = u.rows();
  const double root_n = std::sqrt(static_cast<double>(n));

  TowerElement du;
  du.descriptor = AlgebraDescriptor::tower_level(n, 1);
  du.mat = Matrix::Zero(nn * nn, nn * nn);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = 0; j < nn; ++j)
      du.mat(j * nn + i, j * nn + i) = root_n * std::conj(u(i, j));
  if (which == CorrectionKind::diagonal) return du;

  TowerElement u1{du.descriptor, kron(u, identity(n)) * du.mat};
  if (which == CorrectionKind::first) return u1;

  if (level == 0) throw InputError("U_k is defined for k >= 1");
  TowerElement out;
  out.descriptor = AlgebraDescriptor::tower_level(n, level);
  const std::size_t k = (level - 1) / 2;  // U_{2k+1} or the odd factor of U_{2k+2}
  Matrix odd = identity(ipow(n, static_cast<unsigned>(k + 2)));
  for (std::size_t i = 0; i <= k; ++i) {
    std::vector<Matrix> factors;
    if (i > 0) factors.push_back(identity(ipow(n, static_cast<unsigned>(i))));
    factors.push_back(u1.mat);
    if (k - i > 0) factors.push_back(identity(ipow(n, static_cast<unsigned>(k - i))));
    odd = odd * kron_all(factors);
  }
  if (level % 2 == 1) {
    out.mat = std::move(odd);
  } else {
    // U_{2k} = U_{2k-1} (I^{(x)k} (x) U); `odd` already holds U_{2k-1}
    out.mat = odd * kron(identity(ipow(n, static_cast<unsigned>(level / 2))), u);
  }
  return out;
}

TowerElement tower_projection(const Matrix& u, std::size_t i, std::size_t ambient_limit) {
  if (i == 0) throw InputError("tower projections start at P_1");
  const std::size_t n = static_cast<std::size_t>(u.rows());
  const auto ambient = AlgebraDescriptor::tower_level(n, i + 1);
  if (ambient.size() > ambient_limit)
    throw LimitError("P_" + std::to_string(i) + " needs ambient size " + std::to_string(ambient.size()) +
                     " > limit " + std::to_string(ambient_limit));
  const TowerElement ui = embed_to(correction_unitary(u, CorrectionKind::level, i), i + 1);
  const TowerElement e = jones_projection(i + 3, n);
  return TowerElement{ambient, ui.mat * e.mat * ui.mat.adjoint()};
}

namespace {

struct InclusionData {
  std::vector<Matrix> middle;                 // basis of the middle algebra
  std::function<Matrix(const Matrix&)> expect;  // onto the lower algebra
  Matrix projection;
  std::size_t top_dim;
};

Matrix unit_matrix(std::size_t size, std::size_t r, std::size_t c) {
  const auto s = static_cast<Eigen::Index>(size);
  Matrix m = Matrix::Zero(s, s);
  m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1.0;
  return m;
}

InclusionData inclusion_data(std::size_t n, BasicInclusion which) {
  InclusionData d;
  const Matrix id = identity(n);
  switch (which) {
    case BasicInclusion::scalars_in_diagonal:
      for (std::size_t i = 0; i < n; ++i) d.middle.push_back(unit_matrix(n, i, i));
      d.expect = [](const Matrix& x) -> Matrix {
        return normalized_trace(x) * Matrix::Identity(x.rows(), x.cols());
      };
      d.projection = jones_projection(2, n).mat;
      d.top_dim = n * n;
      break;
    case BasicInclusion::diagonal_in_full:
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) d.middle.push_back(kron(unit_matrix(n, k, l), id));
      // E_{D_n} (x) I: keep entries whose first-leg row and column agree
      d.expect = [n](const Matrix& x) -> Matrix {
        Matrix out = Matrix::Zero(x.rows(), x.cols());
        for (Eigen::Index r = 0; r < x.rows(); ++r)
          for (Eigen::Index c = 0; c < x.cols(); ++c)
            if (static_cast<std::size_t>(r) / n == static_cast<std::size_t>(c) / n) out(r, c) = x(r, c);
        return out;
      };
      d.projection = jones_projection(3, n).mat;
      d.top_dim = n * n * n;
      break;
    case BasicInclusion::full_in_first:
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t i = 0; i < n; ++i)
            d.middle.push_back(kron(unit_matrix(n, k, l), unit_matrix(n, i, i)));
      // partial normalized trace over the second leg, re-embedded as y (x) I
      d.expect = [n, id](const Matrix& x) -> Matrix {
        const auto nn = static_cast<Eigen::Index>(n);
        Matrix y = Matrix::Zero(nn, nn);
        for (Eigen::Index k = 0; k < nn; ++k)
          for (Eigen::Index l = 0; l < nn; ++l)
            for (Eigen::Index i = 0; i < nn; ++i) y(k, l) += x(k * nn + i, l * nn + i);
        return kron(y / static_cast<double>(n), id);
      };
      d.projection = jones_projection(4, n).mat;
      d.top_dim = n * n * n * n;
      break;
  }
  return d;
}

}  // namespace

BasicConstructionCheck verify_basic_construction(std::size_t n, BasicInclusion which,
                                                 const std::optional<Matrix>& projection, double tol) {
  if (n < 2) throw InputError("basic construction check needs n >= 2");
  InclusionData data = inclusion_data(n, which);
  if (projection) {
    if (projection->rows() != data.projection.rows() || projection->cols() != data.projection.cols())
      throw InputError("replacement projection has the wrong size");
    data.projection = *projection;
  }
  const Matrix& e = data.projection;

  BasicConstructionCheck out;
  out.expected_dim = data.top_dim;
  for (const Matrix& x : data.middle)
    out.expectation_defect = std::max(out.expectation_defect, max_norm(e * x * e - data.expect(x) * e));

  std::vector<Matrix> span = data.middle;
  span.reserve(data.middle.size() * (data.middle.size() + 1));
  for (const Matrix& x : data.middle) {
    const Matrix xe = x * e;
    for (const Matrix& y : data.middle) span.push_back(xe * y);
  }
  out.generated_dim = span_rank(span);
  out.passed = out.expectation_defect <= tol && out.generated_dim == out.expected_dim;
  return out;
}

CommutingSquareCheck verify_commuting_square(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) throw InputError("commuting square: U must be square");
  const auto n = u.rows();
  const double inv_n = 1.0 / static_cast<double>(n);
  CommutingSquareCheck out;
  // E_{D_n}(U e_kk U^*) is diag(|u_ik|^2)_i
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      out.worst_defect = std::max(out.worst_defect, std::abs(std::norm(u(i, k)) - inv_n));
  out.passed = out.worst_defect <= tol;

  // (lambda, mu) -> diag(lambda) - U diag(mu) U^*; the nullity is dim(D_n cap U D_n U^*)
  std::vector<Matrix> gens;
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix e = Matrix::Zero(n, n);
    e(i, i) = 1.0;
    gens.push_back(e);
  }
  for (Eigen::Index j = 0; j < n; ++j) gens.push_back(-(u.col(j) * u.col(j).adjoint()));
  out.intersection_dim = gens.size() - span_rank(gens);
  out.irreducible = out.intersection_dim == 1;
  return out;
}

CommutingSquareCheck verify_commuting_square(const HadamardMatrix& h, double tol) {
  return verify_commuting_square(h.unitary(), tol);
}

}  // namespace hadsub
