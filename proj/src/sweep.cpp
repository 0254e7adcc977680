#include "hadsub/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "hadsub/commutants.hpp"

namespace hadsub {

std::vector<double> sweep_axis(Family family, std::size_t g) {
  std::vector<double> out(g);
  if (family == Family::bn6) {
    // two intervals [-pi, -lo] and [lo, pi] of equal length
    const double lo = bn6_min_angle();
    const double len = std::numbers::pi - lo;
    for (std::size_t j = 0; j < g; ++j) {
      const double s = (static_cast<double>(j) + 0.5) / static_cast<double>(g) * 2.0 * len;
      out[j] = s < len ? -std::numbers::pi + s : lo + (s - len);
    }
    return out;
  }
  for (std::size_t j = 0; j < g; ++j) out[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g);
  return out;
}

namespace {

struct LocalPoint {
  std::vector<double> params;
  std::vector<bool> zeros;
  std::size_t dim;
};

}  // namespace

SweepResult zero_pattern_sweep(Family family, const std::vector<std::size_t>& grid, double tol,
                               std::size_t max_points, unsigned threads) {
  const std::size_t arity = family_arity(family);
  if (family == Family::fourier || arity == 0)
    throw InputError(std::string(family_name(family)) + " has no angle parameters to sweep");
  std::vector<std::size_t> g = grid;
  if (g.size() == 1 && arity > 1) g.assign(arity, grid.front());
  if (g.size() != arity)
    throw InputError("sweep grid needs " + std::to_string(arity) + " sizes for " + std::string(family_name(family)));
  std::size_t total = 1;
  for (std::size_t gi : g) {
    if (gi == 0) throw InputError("sweep grid sizes must be positive");
    if (total > max_points / gi) throw LimitError("sweep grid exceeds " + std::to_string(max_points) + " points");
    total *= gi;
  }

  std::vector<std::vector<double>> axes;
  for (std::size_t gi : g) axes.push_back(sweep_axis(family, gi));

  std::vector<LocalPoint> local(total);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::vector<double> params(arity);
      for (std::size_t k = arity, x = idx; k-- > 0; x /= g[k]) params[k] = axes[k][x % g[k]];
      const ProfileTensor p = profile_of(catalog_entries(FamilySpec{family, params}));
      std::vector<bool> zeros(p.coefficients().size());
      for (std::size_t e = 0; e < zeros.size(); ++e) zeros[e] = std::abs(p.coefficients()[e]) <= tol;
      local[idx] = LocalPoint{std::move(params), std::move(zeros), second_commutant(p, tol).dim};
    }
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  if (workers <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk, e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& t : pool) t.join();
  }

  SweepResult out;
  out.family = family;
  out.grid = g;
  std::map<std::vector<bool>, std::size_t> seen;
  for (auto& lp : local) {
    auto [it, inserted] = seen.emplace(lp.zeros, out.patterns.size());
    if (inserted) {
      out.patterns.push_back(lp.zeros);
      out.pattern_counts.push_back(0);
    }
    ++out.pattern_counts[it->second];
    out.points.push_back(SweepPoint{std::move(lp.params), it->second, lp.dim});
  }
  // ties resolve to the first-seen pattern
  out.generic_pattern = static_cast<std::size_t>(
      std::max_element(out.pattern_counts.begin(), out.pattern_counts.end()) - out.pattern_counts.begin());
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (out.points[i].pattern == out.generic_pattern)
      out.generic_dim = out.points[i].dim;
    else
      out.exceptional.push_back(i);
  }
  return out;
}

}  // namespace hadsub
