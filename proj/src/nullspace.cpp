#include "hadsub/nullspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hadsub {

double NullityResult::gap() const {
  if (nullity == unknowns) return 0.0;  // nothing separates zero from nonzero
  const double floor = std::numeric_limits<double>::epsilon() * std::max(top, 1e-300);
  return smallest_nonzero / std::max(largest_zero, floor);
}

Matrix commutator_gram(const std::vector<UnitSum>& basis, const Matrix& p) {
  // [X,P]^*[Y,P] = P^*X^*YP - P^*X^*PY - X^*P^*YP + X^*P^*PY; for X = E_{r,c}, Y = E_{s,t}:
  //   tr(P^*X^*YP) = d_rs (PP^*)_{tc}     tr(P^*X^*PY) = P_rs conj(P_ct)
  //   tr(X^*P^*YP) = conj(P_sr) P_tc      tr(X^*P^*PY) = d_ct (P^*P)_rs
  const Matrix ppa = p * p.adjoint();
  const Matrix pap = p.adjoint() * p;
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix gram = Matrix::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = a; b < d; ++b) {
      Complex acc = 0.0;
      for (const auto& [r, c] : basis[static_cast<std::size_t>(a)].units)
        for (const auto& [s, t] : basis[static_cast<std::size_t>(b)].units) {
          if (r == s) acc += ppa(t, c);
          if (c == t) acc += pap(r, s);
          acc -= p(r, s) * std::conj(p(c, t));
          acc -= std::conj(p(s, r)) * p(t, c);
        }
      gram(a, b) = acc;
      gram(b, a) = std::conj(acc);
    }
  }
  return gram;
}

NullityResult gram_nullity(const Matrix& gram, double rel_tol) {
  NullityResult out;
  out.unknowns = static_cast<std::size_t>(gram.rows());
  if (gram.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  out.top = std::max(ev(ev.size() - 1), 0.0);
  const double cut = rel_tol * out.top;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < cut || out.top == 0.0) {
      ++out.nullity;
      out.largest_zero = std::max(out.largest_zero, std::abs(ev(i)));
    } else {
      out.smallest_nonzero = ev(i);
      break;
    }
  }
  return out;
}

NullityResult commutant_nullity(const std::vector<UnitSum>& basis, const Matrix& p, double rel_tol) {
  return gram_nullity(commutator_gram(basis, p), rel_tol);
}

}  // namespace hadsub
