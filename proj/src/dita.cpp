#include "hadsub/dita.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hadsub {

DitaShape::DitaShape(std::size_t n, std::size_t m, std::size_t k) : n_(n), m_(m), k_(k) {
  if (m < 2 || k < 2 || n != m * k)
    throw InputError("invalid Dita shape (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                     ", k=" + std::to_string(k) + "): need n = m k with m, k >= 2");
}

std::string DitaShape::to_string() const {
  return "(" + std::to_string(n_) + "," + std::to_string(m_) + "," + std::to_string(k_) + ")";
}

std::vector<DitaShape> DitaShape::divisors_of(std::size_t n) {
  std::vector<DitaShape> out;
  for (std::size_t m = 2; m * 2 <= n; ++m)
    if (n % m == 0) out.emplace_back(n, m, n / m);
  return out;
}

BischProjection bisch_projection(const DitaShape& shape) {
  const std::size_t n = shape.n();
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix f = Matrix::Zero(nn * nn, nn * nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (shape.inner(i) == shape.inner(j)) {
        const auto v = static_cast<Eigen::Index>(i * n + j);
        f(v, v) = 1.0;
      }
  return BischProjection{shape, std::move(f)};
}

BischMembership verify_bisch_membership(const ProfileTensor& p, const DitaShape& shape, double tol) {
  if (p.n() != shape.n()) throw InputError("Dita shape does not match the matrix order");
  const std::size_t n = p.n();
  BischMembership out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (shape.inner(i) != shape.inner(j)) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (shape.inner(c) == shape.inner(d)) continue;
          const double v = std::abs(p(i, c, j, d));
          if (v > out.worst) {
            out.worst = v;
            out.witness = std::array<std::size_t, 4>{i + 1, c + 1, j + 1, d + 1};
          }
        }
    }
  out.member = out.worst <= tol;
  if (out.member) out.witness.reset();
  return out;
}

BischMembership verify_bisch_membership(const HadamardMatrix& h, const DitaShape& shape, double tol) {
  return verify_bisch_membership(profile(h), shape, tol);
}

double bisch_commutator_defect(const ProfileTensor& p, const DitaShape& shape) {
  const Matrix f = bisch_projection(shape).mat;
  const Matrix p1 = p.as_matrix();
  return max_norm(f * p1 - p1 * f);
}

// ---------------------------------------------------------------------------

std::string IntermediateReport::summary() const {
  const DecompositionCheck* worst = nullptr;
  for (const auto& c : checks)
    if (!c.passed && (!worst || c.defect > worst->defect)) worst = &c;
  if (!worst) return {};
  std::ostringstream os;
  os << worst->name << " defect " << worst->defect;
  if (!worst->location.empty()) os << " at " << worst->location;
  return os.str();
}

namespace {

/// X (x) Y with X on the inner (m) index and Y on the outer (k) index.
Matrix inner_outer(const Matrix& x, const Matrix& y) { return kron(y, x); }

Matrix matrix_unit(std::size_t size, std::size_t r, std::size_t c) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1.0;
  return m;
}

struct Worst {
  double defect = 0.0;
  std::string location;
  void offer(double d, const std::string& where) {
    if (d > defect) {
      defect = d;
      location = where;
    }
  }
};

/// Largest entry violating the outer-diagonal pattern (i1 != j1).
double off_outer_block(const Matrix& x, std::size_t m) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c)
      if (static_cast<std::size_t>(r) / m != static_cast<std::size_t>(c) / m)
        worst = std::max(worst, std::abs(x(r, c)));
  return worst;
}

void hadamard_defects(const Matrix& x, const std::string& label, Worst& w) {
  const auto s = x.rows();
  for (Eigen::Index r = 0; r < s; ++r)
    for (Eigen::Index c = 0; c < s; ++c)
      w.offer(std::abs(std::abs(x(r, c)) - 1.0),
              label + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
  const Matrix g = x * x.adjoint() - static_cast<double>(s) * Matrix::Identity(s, s);
  for (Eigen::Index r = 0; r < s; ++r)
    for (Eigen::Index c = 0; c < s; ++c)
      w.offer(std::abs(g(r, c)) / static_cast<double>(s),
              label + " rows " + std::to_string(r + 1) + "," + std::to_string(c + 1));
}

}  // namespace

IntermediateReport verify_intermediate_decomposition(const Matrix& a, const std::vector<Matrix>& b,
                                                     const std::vector<Matrix>& d, double tol) {
  const Matrix h = dita_entries(a, b, d);
  const std::size_t k = static_cast<std::size_t>(a.rows());
  const std::size_t m = static_cast<std::size_t>(b.front().rows());
  const std::size_t n = m * k;
  IntermediateReport rep{DitaShape(n, m, k), {}, false};

  std::vector<Matrix> bt(b.begin(), b.end());
  for (std::size_t j = 0; j < d.size(); ++j) bt[j] = b[j] * d[j];
  const Matrix u = h / std::sqrt(static_cast<double>(n));
  const Matrix ik = identity(k);

  const auto record = [&](const std::string& name, const Worst& w) {
    rep.checks.push_back(DecompositionCheck{name, w.defect, w.defect > tol ? w.location : "", w.defect <= tol});
  };

  {
    Worst w;
    hadamard_defects(a, "A", w);
    for (std::size_t j = 0; j < k; ++j) hadamard_defects(bt[j], "B_" + std::to_string(j + 1), w);
    record("hadamard_blocks", w);
  }
  {
    Worst w;
    w.offer(unitary_defect(u), "U U^*");
    record("unitary", w);
  }
  {
    // E_{D_m (x) I_k}(U e_vv U^*) = I/n
    Worst w;
    for (std::size_t v = 0; v < n; ++v) {
      const auto col = u.col(static_cast<Eigen::Index>(v));
      for (std::size_t i0 = 0; i0 < m; ++i0) {
        double avg = 0.0;
        for (std::size_t i1 = 0; i1 < k; ++i1) avg += std::norm(col(static_cast<Eigen::Index>(i1 * m + i0)));
        avg /= static_cast<double>(k);
        w.offer(std::abs(avg - 1.0 / static_cast<double>(n)),
                "column " + std::to_string(v + 1) + ", inner index " + std::to_string(i0 + 1));
      }
    }
    record("lower_commuting", w);
  }
  {
    // U^*(D (x) I_k)U = (1/m) sum_j B_j^* D B_j (x) f_jj
    Worst member, closed;
    for (std::size_t r = 0; r < m; ++r) {
      const Matrix dm = matrix_unit(m, r, r);
      const Matrix y = u.adjoint() * inner_outer(dm, ik) * u;
      member.offer(off_outer_block(y, m), "D = e_" + std::to_string(r + 1) + std::to_string(r + 1));
      Matrix expect = Matrix::Zero(y.rows(), y.cols());
      for (std::size_t j = 0; j < k; ++j) expect += inner_outer(bt[j].adjoint() * dm * bt[j], matrix_unit(k, j, j));
      expect /= static_cast<double>(m);
      closed.offer(max_norm(y - expect), "D = e_" + std::to_string(r + 1) + std::to_string(r + 1));
    }
    record("upper_membership", member);
    record("closed_form_adjoint", closed);
  }
  {
    // E_{D_n}(U (X (x) D) U^*) = (1/n) sum_j D_jj E_{D_m}(B_j X B_j^*) (x) I_k
    Worst closed;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < k; ++t) {
          const Matrix z = u * inner_outer(matrix_unit(m, r, s), matrix_unit(k, t, t)) * u.adjoint();
          const Matrix expect =
              inner_outer(diagonal_part(bt[t] * matrix_unit(m, r, s) * bt[t].adjoint()), ik) / static_cast<double>(n);
          closed.offer(max_norm(diagonal_part(z) - expect), "X = e_" + std::to_string(r + 1) + std::to_string(s + 1) +
                                                               ", D = f_" + std::to_string(t + 1) +
                                                               std::to_string(t + 1));
        }
    record("closed_form_expectation", closed);
  }
  {
    // symmetry of each square: span of (upper-left) x (lower-right) is the upper-right algebra
    std::vector<Matrix> mid;  // basis of U (M_m (x) D_k) U^*
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < k; ++t) mid.push_back(u * inner_outer(matrix_unit(m, r, s), matrix_unit(k, t, t)) * u.adjoint());

    std::vector<Matrix> lower;
    Worst inside;
    for (std::size_t r = 0; r < m; ++r) {
      const Matrix bl = inner_outer(matrix_unit(m, r, r), ik);
      for (std::size_t v = 0; v < n; ++v) {
        const auto col = u.col(static_cast<Eigen::Index>(v));
        const Matrix prod = bl * (col * col.adjoint());
        inside.offer(off_outer_block(u.adjoint() * prod * u, m),
                     "e_" + std::to_string(r + 1) + std::to_string(r + 1) + " times U e_" + std::to_string(v + 1) +
                         std::to_string(v + 1) + " U^*");
        lower.push_back(prod);
      }
    }
    const std::size_t lower_rank = span_rank(lower);
    Worst lw = inside;
    if (lower_rank != m * m * k)
      lw.offer(std::max(tol * 10.0, 1.0), "span rank " + std::to_string(lower_rank) + " != " +
                                              std::to_string(m * m * k));
    record("symmetric_lower", lw);

    std::vector<Matrix> upper;
    for (std::size_t v = 0; v < n; ++v)
      for (const Matrix& c : mid) {
        Matrix prod = Matrix::Zero(c.rows(), c.cols());
        prod.row(static_cast<Eigen::Index>(v)) = c.row(static_cast<Eigen::Index>(v));  // e_vv c
        upper.push_back(std::move(prod));
      }
    const std::size_t upper_rank = span_rank(upper);
    Worst uw;
    if (upper_rank != n * n)
      uw.offer(std::max(tol * 10.0, 1.0), "span rank " + std::to_string(upper_rank) + " != " + std::to_string(n * n));
    record("symmetric_upper", uw);
  }

  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.passed; });
  return rep;
}

BischExpectationCheck verify_bisch_expectation(const DitaShape& shape, double tol) {
  const std::size_t n = shape.n();
  const Matrix f = bisch_projection(shape).mat;
  const Matrix id = identity(n);
  BischExpectationCheck out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      const Matrix x = matrix_unit(n, r, s);
      const Matrix ex = shape.inner(r) == shape.inner(s) ? x : Matrix(Matrix::Zero(x.rows(), x.cols()));
      out.worst = std::max(out.worst, max_norm(f * kron(x, id) * f - kron(ex, id) * f));
      ++out.units_checked;
    }
  out.passed = out.worst <= tol;
  return out;
}

}  // namespace hadsub
