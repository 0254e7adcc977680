#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hadsub/hadamard.hpp"

namespace hadsub {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

/// e^{i pi t}
Complex ep(double t) { return unit(pi * t); }

Matrix from_rows(const std::vector<std::vector<Complex>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw std::logic_error("catalog row has wrong length");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Matrix f4(double alpha) {
  const Complex a = unit(alpha);
  return from_rows({{1, 1, 1, 1}, {1, a, -1.0, -a}, {1, -1.0, 1, -1.0}, {1, -a, -1.0, a}});
}

Matrix f6(double alpha, double beta) {
  const Complex a = unit(alpha), b = unit(beta);
  const Complex w1 = ep(1.0 / 3), w2 = ep(2.0 / 3);
  return from_rows({
      {1, 1, 1, 1, 1, 1},
      {1, a * w1, b * w2, -1.0, a / w2, b / w1},
      {1, w2, 1.0 / w2, 1, w2, 1.0 / w2},
      {1, -a, b, -1.0, a, -b},
      {1, 1.0 / w2, w2, 1, 1.0 / w2, w2},
      {1, a / w1, b / w2, -1.0, a * w2, b * w1},
  });
}

Matrix bn6(double theta) {
  const Complex y = unit(theta);
  const Complex y2 = y * y, y3 = y2 * y, y4 = y3 * y;
  const Complex z = (1.0 + 2.0 * y - y2) / (y * (-1.0 + 2.0 * y + y2));
  // principal branch of the inner square root
  const Complex root = std::sqrt(2.0) * std::sqrt(1.0 + 2.0 * y + 2.0 * y3 + y4);
  const Complex num = 1.0 + 2.0 * y + y2 - root;
  const Complex x = num / (1.0 + 2.0 * y - y2);
  const Complex t = num / (-1.0 + 2.0 * y + y2);
  const auto c = [](Complex v) { return std::conj(v); };
  return from_rows({
      {1, 1, 1, 1, 1, 1},
      {1, -1.0, c(x), -y, -c(x), y},
      {1, x, -1.0, t, -t, -x},
      {1, -c(y), c(t), -1.0, c(y), -c(t)},
      {1, -x, -c(t), y, 1, c(z)},
      {1, c(y), -c(x), -t, z, 1},
  });
}

Matrix p7(double alpha) {
  const Complex a = unit(alpha);
  const Complex w = ep(1.0 / 3), w2 = ep(2.0 / 3);
  return from_rows({
      {1, 1, 1, 1, 1, 1, 1},
      {1, a * w, a / w2, 1.0 / w, -1.0, -1.0, w},
      {1, a / w2, a * w, -1.0, 1.0 / w, -1.0, w},
      {1, 1.0 / w, -1.0, w / a, 1.0 / (a * w2), w, -1.0},
      {1, -1.0, 1.0 / w, 1.0 / (a * w2), w / a, w, -1.0},
      {1, -1.0, -1.0, w, w, 1.0 / w2, 1.0 / w},
      {1, w, w, -1.0, -1.0, 1.0 / w, 1.0 / w2},
  });
}

Matrix f8(const std::vector<double>& p) {
  const Complex a = unit(p[0]), b = unit(p[1]), c = unit(p[2]), d = unit(p[3]), z = unit(p[4]);
  const Complex q = ep(0.25), q3 = ep(0.75);
  return from_rows({
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, a * q, I * b, c * q3, -1.0, a / q3, -I * b, c / q},
      {1, I * d, -1.0, -I * d, 1, I * d, -1.0, -I * d},
      {1, q3 * z, -I * b, c * q * z / a, -1.0, z / q, I * b, c * z / (a * q3)},
      {1, -1.0, 1, -1.0, 1, -1.0, 1, -1.0},
      {1, a / q3, I * b, c / q, -1.0, a * q, -I * b, c * q3},
      {1, -I * d, -1.0, I * d, 1, -I * d, -1.0, I * d},
      {1, z / q, -I * b, c * z / (a * q3), -1.0, q3 * z, I * b, c * q * z / a},
  });
}

Matrix tao() {
  const Complex w = ep(2.0 / 3), w2 = w * w;
  return from_rows({
      {1, 1, 1, 1, 1, 1},
      {1, 1, w, w, w2, w2},
      {1, w, 1, w2, w2, w},
      {1, w, w2, 1, w, w2},
      {1, w2, w2, w, 1, w},
      {1, w2, w, w2, w, 1},
  });
}

Matrix haagerup() {
  return from_rows({
      {1, 1, 1, 1, 1, 1},
      {1, -1.0, I, I, -I, -I},
      {1, I, -1.0, -I, I, -I},
      {1, I, -I, -1.0, -I, I},
      {1, -I, I, -I, -1.0, I},
      {1, -I, -I, I, I, -1.0},
  });
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::fourier: return "fourier";
    case Family::f4: return "f4";
    case Family::f6: return "f6";
    case Family::bn6: return "bn6";
    case Family::p7: return "p7";
    case Family::f8: return "f8";
    case Family::tao: return "tao";
    case Family::haagerup: return "haagerup";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::fourier, Family::f4, Family::f6, Family::bn6,
          Family::p7,      Family::f8, Family::tao, Family::haagerup};
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::fourier: return 1;
    case Family::f4: return 1;
    case Family::f6: return 2;
    case Family::bn6: return 1;
    case Family::p7: return 1;
    case Family::f8: return 5;
    case Family::tao:
    case Family::haagerup: return 0;
  }
  return 0;
}

std::size_t family_order(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::fourier: return spec.params.empty() ? 0 : static_cast<std::size_t>(std::lround(spec.params[0]));
    case Family::f4: return 4;
    case Family::f6:
    case Family::bn6:
    case Family::tao:
    case Family::haagerup: return 6;
    case Family::p7: return 7;
    case Family::f8: return 8;
  }
  return 0;
}

double bn6_min_angle() { return std::acos((-1.0 + std::sqrt(3.0)) / 2.0); }

void validate(const FamilySpec& spec) {
  const std::string name(family_name(spec.family));
  if (spec.params.size() != family_arity(spec.family))
    throw InputError(name + " takes " + std::to_string(family_arity(spec.family)) + " parameter(s), got " +
                     std::to_string(spec.params.size()));
  for (double p : spec.params)
    if (!std::isfinite(p)) throw InputError(name + ": non-finite parameter");
  if (spec.family == Family::fourier) {
    const double n = spec.params[0];
    if (n < 1 || n != std::floor(n)) throw InputError("fourier: order must be a positive integer");
  }
  if (spec.family == Family::bn6) {
    const double th = spec.params[0];
    if (std::abs(th) > pi + 1e-12 || std::abs(th) < bn6_min_angle() - 1e-12)
      throw InputError("bn6: angle " + std::to_string(th) + " outside [-pi,-acos((sqrt3-1)/2)] U [acos((sqrt3-1)/2),pi]");
  }
}

Matrix fourier_entries(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix m(nn, nn);
  for (Eigen::Index i = 1; i <= nn; ++i)
    for (Eigen::Index j = 1; j <= nn; ++j)
      m(i - 1, j - 1) = unit(2.0 * pi * static_cast<double>((i * j) % nn) / static_cast<double>(nn));
  return m;
}

Matrix catalog_entries(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::fourier: return fourier_entries(family_order(spec));
    case Family::f4: return f4(p[0]);
    case Family::f6: return f6(p[0], p[1]);
    case Family::bn6: return bn6(p[0]);
    case Family::p7: return p7(p[0]);
    case Family::f8: return f8(p);
    case Family::tao: return tao();
    case Family::haagerup: return haagerup();
  }
  throw InputError("unknown family");
}

HadamardMatrix catalog_matrix(const FamilySpec& spec, double tol) {
  const Matrix m = catalog_entries(spec);
  auto check = verify_hadamard(m, tol);
  if (!check.ok())
    throw InputError(std::string(family_name(spec.family)) + " member is not Hadamard at these parameters: " +
                     check.diagnostic->message());
  return *check.matrix;
}

}  // namespace hadsub
