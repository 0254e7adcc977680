#include "hadsub/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "hadsub/profile.hpp"
#include "hadsub/rng.hpp"

namespace hadsub {

std::string HadamardDiagnostic::message() const {
  std::ostringstream os;
  os << std::setprecision(6);
  switch (kind) {
    case Kind::entry_modulus:
      os << "entry (" << row << "," << col << ") has modulus " << magnitude << ", expected 1";
      break;
    case Kind::row_orthogonality:
      os << "rows " << row << "," << col << " not orthogonal: |<r" << row << ",r" << col
         << ">| = " << magnitude;
      break;
  }
  return os.str();
}

HadamardMatrix HadamardCheck::value() const {
  if (!matrix) throw InputError("not a complex Hadamard matrix: " + diagnostic->message());
  return *matrix;
}

HadamardCheck HadamardCheck::run(const Matrix& mat, double tol) {
  HadamardCheck out;
  const auto n = mat.rows();

  // worst offending entry
  double worst = 0.0;
  Eigen::Index wi = 0, wj = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double dev = std::abs(std::abs(mat(i, j)) - 1.0);
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  if (worst > tol) {
    out.diagnostic = HadamardDiagnostic{HadamardDiagnostic::Kind::entry_modulus,
                                        static_cast<std::size_t>(wi) + 1,
                                        static_cast<std::size_t>(wj) + 1, std::abs(mat(wi, wj))};
    return out;
  }

  const Matrix gram = mat * mat.adjoint();
  worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex target = i == j ? Complex(static_cast<double>(n)) : Complex(0.0);
      const double dev = std::abs(gram(i, j) - target);
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  if (worst > static_cast<double>(n) * tol) {
    out.diagnostic =
        HadamardDiagnostic{HadamardDiagnostic::Kind::row_orthogonality, static_cast<std::size_t>(wi) + 1,
                           static_cast<std::size_t>(wj) + 1, std::abs(gram(wi, wj))};
    return out;
  }
  out.matrix = HadamardMatrix(mat, tol);
  return out;
}

HadamardCheck verify_hadamard(const Matrix& mat, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (mat.rows() != mat.cols()) throw InputError("matrix is not square");
  if (mat.rows() == 0) throw InputError("matrix is empty");
  for (Eigen::Index i = 0; i < mat.size(); ++i) {
    const Complex z = mat.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("matrix has a non-finite entry");
  }
  return HadamardCheck::run(mat, tol);
}

HadamardMatrix dephase(const HadamardMatrix& h) {
  const Matrix& m = h.mat();
  const auto n = m.rows();
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(i, j) * std::conj(m(i, 0)) * std::conj(m(0, j)) * m(0, 0);
  return verify_hadamard(out, h.tol()).value();
}

Matrix dita_entries(const Matrix& a, const std::vector<Matrix>& b, const std::vector<Matrix>& d) {
  const auto k = a.rows();
  if (a.cols() != k) throw InputError("dita: A is not square");
  if (static_cast<Eigen::Index>(b.size()) != k)
    throw InputError("dita: need exactly one B block per column of A");
  if (!d.empty() && d.size() != b.size())
    throw InputError("dita: need one diagonal per B block");
  const auto m = b.front().rows();
  for (const auto& blk : b)
    if (blk.rows() != m || blk.cols() != m) throw InputError("dita: B blocks differ in size");

  std::vector<Matrix> twisted(b.begin(), b.end());
  for (std::size_t j = 0; j < d.size(); ++j) {
    const Matrix& dj = d[j];
    if (dj.rows() != m || dj.cols() != m) throw InputError("dita: diagonal twist has wrong size");
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index s = 0; s < m; ++s) {
        if (r != s && std::abs(dj(r, s)) > 1e-12)
          throw InputError("dita: twist matrix is not diagonal");
      }
    for (Eigen::Index r = 0; r < m; ++r)
      if (std::abs(std::abs(dj(r, r)) - 1.0) > 1e-9)
        throw InputError("dita: twist diagonal entry is not unimodular");
    twisted[j] = b[j] * dj;
  }

  Matrix h(k * m, k * m);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) h.block(i * m, j * m, m, m) = a(i, j) * twisted[j];
  return h;
}

HadamardMatrix dita_compose(const HadamardMatrix& a, const std::vector<HadamardMatrix>& b,
                            const std::vector<Matrix>& d, double tol) {
  std::vector<Matrix> blocks;
  blocks.reserve(b.size());
  for (const auto& blk : b) blocks.push_back(blk.mat());
  return verify_hadamard(dita_entries(a.mat(), blocks, d), tol).value();
}

namespace {

int fingerprint_decimals(double tol) {
  return std::max(0, static_cast<int>(std::ceil(-std::log10(tol) - 1e-12)));
}

}  // namespace

std::vector<double> equivalence_fingerprint(const HadamardMatrix& h, double tol) {
  const ProfileTensor p = profile(h);
  const double scale = std::pow(10.0, fingerprint_decimals(tol));
  std::vector<double> out;
  out.reserve(p.coefficients().size());
  for (const Complex& z : p.coefficients()) out.push_back(std::round(std::abs(z) * scale) / scale);
  std::sort(out.begin(), out.end());
  return out;
}

std::string fingerprint_digest(const std::vector<double>& fingerprint, double tol) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(fingerprint_decimals(tol));
  for (double v : fingerprint) os << v << '\n';
  const std::string text = os.str();

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) hex << std::setw(2) << static_cast<int>(digest[i]);
  return hex.str();
}

HadamardMatrix random_equivalence(const HadamardMatrix& h, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(h.n());
  const auto rows = rng.permutation(h.n());
  const auto cols = rng.permutation(h.n());
  std::vector<Complex> d1(h.n()), d2(h.n());
  for (auto& z : d1) z = unit(rng.angle());
  for (auto& z : d2) z = unit(rng.angle());

  // (P1 D1 H D2 P2)_{ij} = d1_{r(i)} h_{r(i),c(j)} d2_{c(j)}
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto r = rows[static_cast<std::size_t>(i)];
      const auto c = cols[static_cast<std::size_t>(j)];
      out(i, j) = d1[r] * h(r, c) * d2[c];
    }
  return verify_hadamard(out, h.tol()).value();
}

}  // namespace hadsub
