#include "hadsub/commutants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hadsub {

// ---------------------------------------------------------------------------
// Profile

ProfileTensor::ProfileTensor(std::size_t n, std::vector<Complex> coeffs) : n_(n), p_(std::move(coeffs)) {
  if (p_.size() != n * n * n * n) throw InputError("profile tensor needs n^4 coefficients");
}

Matrix ProfileTensor::as_matrix() const {
  const auto nn = static_cast<Eigen::Index>(n_);
  Matrix m(nn * nn, nn * nn);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        for (std::size_t d = 0; d < n_; ++d)
          m(static_cast<Eigen::Index>(a * n_ + c), static_cast<Eigen::Index>(b * n_ + d)) = (*this)(a, b, c, d);
  return m;
}

double ProfileTensor::invariant_defect() const {
  const double inv_n = 1.0 / static_cast<double>(n_);
  double worst = 0.0;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c) {
        for (std::size_t d = 0; d < n_; ++d) {
          const Complex v = (*this)(a, b, c, d);
          worst = std::max(worst, std::abs(v - std::conj((*this)(b, a, d, c))));
          worst = std::max(worst, std::abs(v - (*this)(d, c, b, a)));
        }
        const double delta = a == b ? inv_n : 0.0;
        worst = std::max(worst, std::abs((*this)(a, b, c, c) - delta));
        worst = std::max(worst, std::abs((*this)(c, c, a, b) - delta));
      }
  return worst;
}

ProfileTensor profile_of(const Matrix& h) {
  const std::size_t n = static_cast<std::size_t>(h.rows());
  const Matrix u = h / std::sqrt(static_cast<double>(n));
  std::vector<Complex> p(n * n * n * n);
  const auto ni = static_cast<Eigen::Index>(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Complex acc = 0.0;
          for (Eigen::Index i = 0; i < ni; ++i)
            acc += u(static_cast<Eigen::Index>(a), i) * std::conj(u(static_cast<Eigen::Index>(b), i)) *
                   std::conj(u(static_cast<Eigen::Index>(c), i)) * u(static_cast<Eigen::Index>(d), i);
          p[((a * n + b) * n + c) * n + d] = acc;
        }
  return ProfileTensor(n, std::move(p));
}

ProfileTensor profile(const HadamardMatrix& h) { return profile_of(h.mat()); }

// ---------------------------------------------------------------------------
// Partition

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ", ";
    os << '{';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) os << (j ? "," : "") << blocks[i][j];
    os << '}';
  }
  return os.str();
}

bool Partition::covers(std::size_t vertices) const {
  std::vector<int> seen(vertices + 1, 0);
  for (const auto& b : blocks)
    for (std::size_t v : b) {
      if (v == 0 || v > vertices || seen[v]++) return false;
    }
  return std::all_of(seen.begin() + 1, seen.end(), [](int s) { return s == 1; });
}

std::vector<std::size_t> Partition::jones_block(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(k * n + k + 1);
  return out;
}

bool Partition::contains_block(const std::vector<std::size_t>& block) const {
  return std::find(blocks.begin(), blocks.end(), block) != blocks.end();
}

void Partition::normalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

Partition partition_from_labels(const std::vector<std::size_t>& label) {
  std::vector<std::size_t> order;
  Partition out;
  std::vector<std::size_t> block_of(label.size(), SIZE_MAX);
  for (std::size_t v = 0; v < label.size(); ++v) {
    const std::size_t l = label[v];
    if (block_of[l] == SIZE_MAX) {
      block_of[l] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.blocks[block_of[l]].push_back(v + 1);
  }
  out.normalize();
  return out;
}

}  // namespace

CommutantResult second_commutant(const ProfileTensor& p, double tol) {
  const std::size_t n = p.n();
  DisjointSets sets(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (std::abs(p(a, b, c, d)) > tol) sets.unite(a * n + c, b * n + d);
  std::vector<std::size_t> label(n * n);
  for (std::size_t v = 0; v < n * n; ++v) label[v] = sets.find(v);

  CommutantResult out;
  out.order = 2;
  out.method = CommutantMethod::graph;
  out.partition = partition_from_labels(label);
  out.dim = out.partition->size();
  return out;
}

CommutantResult second_commutant(const HadamardMatrix& h, double tol) { return second_commutant(profile(h), tol); }

// ---------------------------------------------------------------------------
// Nullspace route

std::vector<UnitSum> commutant_basis(std::size_t n, std::size_t i) {
  if (i == 0) throw InputError("commutant basis needs i >= 1");
  // D_n' cap P_i: the tower word with its first leg restricted to the diagonal
  AlgebraDescriptor d = AlgebraDescriptor::tower_level(n, i);
  d.word.front() = Leg::diag;
  const bool widen = i % 2 == 0;  // P_i -> P_{i+1} appends an identity leg
  const std::size_t legs = d.word.size();

  std::vector<UnitSum> basis;
  std::vector<std::size_t> row(legs, 0), col(legs, 0);
  // odometer over (row digit, col digit) pairs; Diag legs only take row == col
  std::vector<std::size_t> state(legs, 0);
  const auto choices = [&](std::size_t leg) { return d.word[leg] == Leg::diag ? n : n * n; };
  while (true) {
    std::uint32_t r = 0, c = 0;
    for (std::size_t l = 0; l < legs; ++l) {
      const std::size_t s = state[l];
      const std::size_t rd = d.word[l] == Leg::diag ? s : s / n;
      const std::size_t cd = d.word[l] == Leg::diag ? s : s % n;
      r = static_cast<std::uint32_t>(r * n + rd);
      c = static_cast<std::uint32_t>(c * n + cd);
    }
    UnitSum el;
    if (widen) {
      for (std::size_t x = 0; x < n; ++x)
        el.units.emplace_back(static_cast<std::uint32_t>(r * n + x), static_cast<std::uint32_t>(c * n + x));
    } else {
      el.units.emplace_back(r, c);
    }
    basis.push_back(std::move(el));

    std::size_t l = legs;
    while (l > 0) {
      --l;
      if (++state[l] < choices(l)) break;
      state[l] = 0;
      if (l == 0) return basis;
    }
  }
}

CommutantResult second_commutant_direct(const HadamardMatrix& h, double rel_tol) {
  const std::size_t n = h.n();
  const Matrix p1 = tower_projection(h.unitary(), 1).mat;
  const auto basis = commutant_basis(n, 1);
  const Matrix gram = commutator_gram(basis, p1);

  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  CommutantResult out;
  out.order = 2;
  out.method = CommutantMethod::nullspace;
  out.spectrum = gram_nullity(gram, rel_tol);
  out.dim = out.spectrum->nullity;

  // vertices lie in one block iff their rows agree across the null vectors
  const Matrix null = es.eigenvectors().leftCols(static_cast<Eigen::Index>(out.dim));
  std::vector<std::size_t> label(n * n, SIZE_MAX);
  std::size_t next = 0;
  const double scale = null.cwiseAbs().maxCoeff();
  for (std::size_t v = 0; v < n * n; ++v) {
    if (label[v] != SIZE_MAX) continue;
    label[v] = next;
    for (std::size_t w = v + 1; w < n * n; ++w)
      if (label[w] == SIZE_MAX &&
          (null.row(static_cast<Eigen::Index>(v)) - null.row(static_cast<Eigen::Index>(w))).cwiseAbs().maxCoeff() <
              1e-6 * scale)
        label[w] = next;
    ++next;
  }
  out.partition = partition_from_labels(label);
  return out;
}

// ---------------------------------------------------------------------------
// Odd levels from the profile

TowerElement odd_profile_compose(const ProfileTensor& p, std::size_t i, std::size_t ambient_limit) {
  if (i == 0) throw InputError("odd_profile_compose needs i >= 1");
  const std::size_t n = p.n();
  const std::size_t legs = i + 2;
  const std::size_t size = ipow(n, static_cast<unsigned>(legs));
  if (size > ambient_limit)
    throw LimitError("P_" + std::to_string(2 * i + 1) + " needs ambient size " + std::to_string(size) +
                     " > limit " + std::to_string(ambient_limit));
  TowerElement out;
  out.descriptor = AlgebraDescriptor::tower_level(n, 2 * i + 2);
  out.mat = Matrix::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  const double scale = std::pow(static_cast<double>(n), static_cast<double>(i));

  std::vector<std::size_t> rd(legs), cd(legs);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t l = legs, x = r; l-- > 0; x /= n) rd[l] = x % n;
    for (std::size_t c = 0; c < size; ++c) {
      for (std::size_t l = legs, x = c; l-- > 0; x /= n) cd[l] = x % n;
      Complex v = scale;
      for (std::size_t l = 0; l + 1 < legs && v != 0.0; ++l) v *= p(rd[l], cd[l], rd[l + 1], cd[l + 1]);
      out.mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Higher orders

CommutantResult relative_commutant_dim(const HadamardMatrix& h, std::size_t order, double rel_tol, bool force) {
  if (order < 2 || order > 4) throw InputError("supported relative commutant orders are 2, 3 and 4");
  const std::size_t n = h.n();
  if (!force && order == 3 && n > kOrder3MaxN)
    throw LimitError("order 3 is limited to n <= " + std::to_string(kOrder3MaxN));
  if (!force && order == 4 && n > kOrder4MaxN)
    throw LimitError("order 4 is limited to n <= " + std::to_string(kOrder4MaxN));

  const std::size_t i = order - 1;
  const std::size_t limit = force ? SIZE_MAX : kDefaultAmbientLimit;
  const Matrix p = tower_projection(h.unitary(), i, limit).mat;
  CommutantResult out;
  out.order = order;
  out.method = CommutantMethod::nullspace;
  out.spectrum = commutant_nullity(commutant_basis(n, i), p, rel_tol);
  out.dim = out.spectrum->nullity;
  return out;
}

}  // namespace hadsub
