// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "hadsub/commutants.hpp"
#include "hadsub/dita.hpp"
#include "hadsub/hadamard.hpp"
#include "hadsub/sweep.hpp"
#include "hadsub/tower.hpp"
#include "test_support.hpp"

using namespace hadsub;
using namespace hadsub::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failures for one criterion.
struct Verdict {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

Partition parse_blocks(std::initializer_list<std::initializer_list<std::size_t>> blocks) {
  Partition p;
  for (const auto& b : blocks) p.blocks.emplace_back(b);
  p.normalize();
  return p;
}

// every order-2 dimension computed anywhere in the suite, for the dim <= n law
std::vector<std::pair<std::size_t, std::size_t>> g_dims;  // (n, dim)

std::size_t dim2(const HadamardMatrix& h, Partition* partition = nullptr) {
  const CommutantResult r = second_commutant(h);
  g_dims.emplace_back(h.n(), r.dim);
  if (partition) *partition = *r.partition;
  return r.dim;
}

void criterion_1(Verdict& v) {
  const auto t0 = Clock::now();
  Partition p;
  const std::size_t d = dim2(family(Family::f4, {tau(0.113)}), &p);
  v.expect(d == 3, "dim " + std::to_string(d));
  v.expect(p == parse_blocks({{1, 6, 11, 16}, {2, 4, 5, 7, 10, 12, 13, 15}, {3, 8, 9, 14}}), p.to_string());
  v.expect(seconds_since(t0) < 1.0, "time");
  v.notes << " partition " << p.to_string();
}

void criterion_2(Verdict& v) {
  const auto t0 = Clock::now();
  Partition p1, pi;
  v.expect(dim2(family(Family::f4, {0.0}), &p1) == 4, "F4(1) dim");
  v.expect(p1 == parse_blocks({{1, 6, 11, 16}, {2, 5, 12, 15}, {3, 8, 9, 14}, {4, 7, 10, 13}}), p1.to_string());
  v.expect(dim2(family(Family::f4, {tau(0.25)}), &pi) == 4, "F4(i) dim");
  v.expect(pi == parse_blocks({{1, 6, 11, 16}, {2, 7, 12, 13}, {3, 8, 9, 14}, {4, 5, 10, 15}}), pi.to_string());
  v.expect(seconds_since(t0) < 1.0, "time");
}

void criterion_3(Verdict& v) {
  const HadamardMatrix generic = family(Family::f4, {tau(0.113)});
  const HadamardMatrix special = family(Family::f4, {std::numbers::pi / 4});
  const auto check = [&](const HadamardMatrix& h, std::size_t order, std::size_t want, const std::string& label) {
    const auto t0 = Clock::now();
    const CommutantResult r = relative_commutant_dim(h, order);
    const double dt = seconds_since(t0);
    v.expect(r.dim == want, label + " dim " + std::to_string(r.dim));
    v.expect(r.spectrum->gap() >= kMinSpectralGap, label + " gap");
    if (order == 4) v.expect(dt < 60.0, label + " time");
    char buf[96];
    std::snprintf(buf, sizeof buf, " %s=%zu (gap %.1e, %.2fs)", label.c_str(), r.dim, r.spectrum->gap(), dt);
    v.notes << buf;
  };
  check(generic, 3, 10, "order3");
  check(generic, 4, 35, "order4");
  check(special, 4, 36, "order4@e^{i pi/4}");
}

void criterion_4(Verdict& v) {
  const Partition want = parse_blocks({{1, 8, 15, 22, 29, 36},
                                       {2, 4, 6, 7, 9, 11, 14, 16, 18, 19, 21, 23, 26, 28, 30, 31, 33, 35},
                                       {3, 10, 17, 24, 25, 32},
                                       {5, 12, 13, 20, 27, 34}});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Partition p;
    const std::size_t d = dim2(family(Family::f6, generic_params(Family::f6, 100 + seed)), &p);
    v.expect(d == 4 && p == want, "seed " + std::to_string(seed) + ": " + p.to_string());
  }
  const auto t0 = Clock::now();
  const SweepResult s = zero_pattern_sweep(Family::f6, {72, 72});
  const double dt = seconds_since(t0);
  // (a, b) in units of 60 degrees: the four sign pairs and the eight sixth-root pairs
  const std::set<std::pair<int, int>> want_pairs = {{0, 0}, {0, 3}, {3, 0}, {3, 3}, {4, 2}, {2, 4},
                                                    {5, 1}, {1, 5}, {4, 5}, {2, 1}, {5, 4}, {1, 2}};
  std::set<std::pair<int, int>> got;
  for (std::size_t idx : s.exceptional) {
    const auto& pt = s.points[idx];
    const double a = pt.params[0] * 3.0 / std::numbers::pi, b = pt.params[1] * 3.0 / std::numbers::pi;
    const bool on_grid = std::abs(a - std::round(a)) < 1e-9 && std::abs(b - std::round(b)) < 1e-9;
    v.expect(on_grid, "off-lattice exceptional point");
    v.expect(pt.dim == 6, "exceptional dim " + std::to_string(pt.dim));
    got.emplace(static_cast<int>(std::lround(a)) % 6, static_cast<int>(std::lround(b)) % 6);
  }
  v.expect(s.exceptional.size() == 12, std::to_string(s.exceptional.size()) + " exceptional points");
  v.expect(got == want_pairs, "exceptional set differs");
  v.expect(s.generic_dim == 4, "generic dim");
  v.expect(dt < 600.0, "sweep time");
  char buf[64];
  std::snprintf(buf, sizeof buf, " sweep 72x72: %zu exceptional, %.2fs", s.exceptional.size(), dt);
  v.notes << buf;
}

void criterion_5(Verdict& v) {
  const double lo = bn6_min_angle();
  for (int s = 0; s < 10; ++s) {
    // five samples on each of the two intervals, including both endpoints of [lo, pi]
    const double t = static_cast<double>(s % 5) / 4.0;
    const double theta = (s < 5 ? 1.0 : -1.0) * (lo + (std::numbers::pi - lo) * t);
    const Matrix m = catalog_entries(FamilySpec{Family::bn6, {theta}});
    const HadamardCheck c = verify_hadamard(m, 1e-9);
    v.expect(c.ok(), "theta " + std::to_string(theta) + " not Hadamard");
    v.expect(max_norm(m - m.adjoint()) <= 1e-9, "theta " + std::to_string(theta) + " not self-adjoint");
    if (!c.ok()) continue;
    Partition p;
    const std::size_t d = dim2(*c.matrix, &p);
    v.expect(d == 2 && p.contains_block(Partition::jones_block(6)), "theta " + std::to_string(theta) + ": " + p.to_string());
  }
}

void criterion_6(Verdict& v) {
  Rng rng(6);
  for (int s = 0; s < 10; ++s) {
    const double a = s == 0 ? 0.0 : rng.angle();
    Partition p;
    const std::size_t d = dim2(family(Family::p7, {a}), &p);
    v.expect(d == 2 && p.contains_block(Partition::jones_block(7)), "a angle " + std::to_string(a));
  }
  const HadamardMatrix h = family(Family::p7, {0.0});
  const auto t0 = Clock::now();
  const CommutantResult r = relative_commutant_dim(h, 3);
  const double dt = seconds_since(t0);
  v.expect(r.dim == 5, "P7(1) order 3 dim " + std::to_string(r.dim));
  v.expect(dt < 300.0, "time");
  v.expect(!r.ambiguous(), "gap");

  // the five Temperley-Lieb words in e_3, e_4 commute with P_2 and are independent
  const std::size_t n = 7;
  const Matrix e3 = jones_projection(3, n).mat, e4 = jones_projection(4, n).mat;
  const Matrix p2 = tower_projection(h.unitary(), 2).mat;
  std::vector<Matrix> words = {identity(n * n), e3, e4, e3 * e4, e4 * e3};
  double worst = 0.0;
  for (const Matrix& w : words) {
    const Matrix x = kron(w, identity(n));
    worst = std::max(worst, max_norm(x * p2 - p2 * x));
  }
  v.expect(worst < 1e-9, "TL word fails to commute");
  v.expect(span_rank(words) == 5, "TL words dependent");
  char buf[96];
  std::snprintf(buf, sizeof buf, " P7(1) order3=%zu (gap %.1e, %.2fs); TL_2 words commute to %.1e", r.dim,
                r.spectrum->gap(), dt, worst);
  v.notes << buf;
}

void criterion_7(Verdict& v) {
  const Partition want = parse_blocks(
      {{1, 10, 19, 28, 37, 46, 55, 64},
       {2, 4, 6, 8, 9, 11, 13, 15, 18, 20, 22, 24, 25, 27, 29, 31, 34, 36, 38, 40, 41, 43, 45, 47, 50, 52, 54, 56, 57,
        59, 61, 63},
       {3, 7, 12, 16, 17, 21, 26, 30, 35, 39, 44, 48, 49, 53, 58, 62},
       {5, 14, 23, 32, 33, 42, 51, 60}});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto t0 = Clock::now();
    Partition p;
    const std::size_t d = dim2(family(Family::f8, generic_params(Family::f8, 200 + seed)), &p);
    v.expect(d == 4 && p == want, "seed " + std::to_string(seed) + ": " + p.to_string());
    v.expect(seconds_since(t0) < 5.0, "time");
  }
}

void criterion_8(Verdict& v) {
  std::size_t count = 0;
  const auto compare = [&](const std::string& name, const HadamardMatrix& h) {
    const CommutantResult g = second_commutant(h);
    const CommutantResult d = second_commutant_direct(h);
    v.expect(g.dim == d.dim && g.partition == d.partition && !d.ambiguous(), name);
    ++count;
  };
  for (const auto& s : catalog_samples()) compare(s.name, s.h);
  for (std::uint64_t seed = 0; seed < 20; ++seed) compare("dita seed " + std::to_string(seed), random_dita(seed).h);
  v.notes << " " << count << " matrices";
}

void criterion_9(Verdict& v) {
  double inv = 0.0, proj = 0.0, herm = 0.0, trace = 0.0, p1 = 0.0, tower3 = 0.0;
  for (const auto& s : catalog_samples()) {
    const ProfileTensor p = profile(s.h);
    inv = std::max(inv, p.invariant_defect());
    const Matrix m = tower_projection(s.h.unitary(), 1).mat;
    proj = std::max(proj, projection_defect(m));
    herm = std::max(herm, hermitian_defect(m));
    trace = std::max(trace, std::abs(normalized_trace(m) - 1.0 / static_cast<double>(s.h.n())));
    p1 = std::max(p1, max_norm(m - p.as_matrix()));
    if (s.h.n() <= 4)
      tower3 = std::max(tower3, max_norm(tower_projection(s.h.unitary(), 3).mat - odd_profile_compose(p, 1).mat));
  }
  v.expect(inv <= 1e-10, "profile invariants");
  v.expect(proj <= 1e-7 && herm <= 1e-7 && trace <= 1e-7, "P_1 projection identities");
  v.expect(p1 <= 1e-7, "P_1 differs from the profile matrix");
  v.expect(tower3 <= 1e-7, "P_3 cross-check");
  char buf[160];
  std::snprintf(buf, sizeof buf, " profile %.1e, P^2-P %.1e, P*-P %.1e, tr %.1e, P_1 %.1e, P_3 %.1e", inv, proj, herm,
                trace, p1, tower3);
  v.notes << buf;
}

void criterion_10(Verdict& v) {
  for (std::size_t n = 2; n <= 8; ++n) {
    Partition p;
    const std::size_t d = dim2(family(Family::fourier, {static_cast<double>(n)}), &p);
    Partition want;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::size_t> block;
      for (std::size_t a = 0; a < n; ++a) block.push_back(a * n + (a + n - r) % n + 1);
      want.blocks.push_back(block);
    }
    want.normalize();
    v.expect(d == n && p == want, "F_" + std::to_string(n) + ": " + p.to_string());
  }
}

void criterion_11(Verdict& v) {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DitaSample s = random_dita(seed);
    const std::string tag = "seed " + std::to_string(seed) + " " + s.shape.to_string();
    v.expect(verify_bisch_membership(s.h, s.shape).member, tag + " membership");
    v.expect(dim2(s.h) >= 3, tag + " dim");
    const IntermediateReport rep = verify_intermediate_decomposition(s.a, s.b, s.d, 1e-8);
    for (const auto& c : rep.checks) worst = std::max(worst, c.defect);
    v.expect(rep.passed, tag + " " + rep.summary());
    v.expect(verify_bisch_expectation(s.shape, 1e-8).passed, tag + " expectation");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " worst decomposition defect %.1e", worst);
  v.notes << buf;
}

void criterion_12(Verdict& v) {
  for (const auto& s : catalog_samples()) {
    const std::string fp = fingerprint_digest(equivalence_fingerprint(s.h));
    const std::size_t d = dim2(s.h);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const HadamardMatrix e = random_equivalence(s.h, seed);
      v.expect(fingerprint_digest(equivalence_fingerprint(e)) == fp, s.name + " fingerprint");
      v.expect(dim2(e) == d, s.name + " dim");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"F_4 generic: dim 3 and partition", criterion_1},
      {"F_4(1), F_4(i): dim 4 and partitions", criterion_2},
      {"F_4 orders 3 and 4: 10, 35, 36", criterion_3},
      {"F_6: generic partition and 72x72 sweep", criterion_4},
      {"BN_6: dim 2, self-adjoint Hadamard", criterion_5},
      {"P_7: dim 2, P_7(1) order 3 = TL_2", criterion_6},
      {"F_8 generic: dim 4 and partition", criterion_7},
      {"graph and nullspace methods agree", criterion_8},
      {"profile and tower identities", criterion_9},
      {"Fourier law", criterion_10},
      {"Dita suite", criterion_11},
      {"equivalence robustness", criterion_12},
  };
  std::vector<Verdict> verdicts(criteria.size());
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].second(verdicts[i]);
    } catch (const std::exception& e) {
      verdicts[i].expect(false, std::string("exception: ") + e.what());
    }
  }
  // the dim <= n law is checked over every matrix evaluated by the suite
  Verdict& law = verdicts[9];
  for (const auto& [n, d] : g_dims) law.expect(d <= n, "dim exceeds n");
  law.notes << " dim <= n over " << g_dims.size() << " evaluations";

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Verdict& v = verdicts[i];
    std::printf("%s %2zu %s:%s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.notes.str().c_str());
    failed += !v.ok;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
