#include "hadsub/report.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace hadsub {

using nlohmann::ordered_json;

bool AnalysisReport::ambiguous() const {
  for (const auto& [order, e] : higher)
    if (e.ambiguous) return true;
  return false;
}

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::optional<DitaFactors> blocks_of(const Matrix& h, Eigen::Index m, Eigen::Index k, double tol) {
  DitaFactors out{Matrix(k, k), {}, false};
  for (Eigen::Index j = 0; j < k; ++j) {
    out.b.push_back(h.block(0, j * m, m, m));
    const Complex top = h(0, j * m);
    for (Eigen::Index i = 0; i < k; ++i) out.a(i, j) = h(i * m, j * m) / top;
  }
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      if (max_norm(h.block(i * m, j * m, m, m) - out.a(i, j) * out.b[static_cast<std::size_t>(j)]) > tol)
        return std::nullopt;
  return out;
}

}  // namespace

std::optional<DitaFactors> extract_dita_factors(const Matrix& h, const DitaShape& shape, double tol) {
  const auto m = static_cast<Eigen::Index>(shape.m());
  const auto k = static_cast<Eigen::Index>(shape.k());
  if (auto f = blocks_of(h, m, k, tol)) return f;
  Matrix shuffled(h.rows(), h.cols());
  Eigen::Index next = 0;
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index q = 0; q < m; ++q) shuffled.col(next++) = h.col(q * k + r);
  auto f = blocks_of(shuffled, m, k, tol);
  if (f) f->interleaved_columns = true;
  return f;
}

AnalysisReport analyze(const HadamardMatrix& h, const AnalyzeOptions& opts) {
  if (opts.order < 2 || opts.order > 4) throw InputError("--order must be 2, 3 or 4");
  AnalysisReport r;
  r.n = h.n();
  r.source = opts.source;
  r.tol = h.tol();
  r.is_hadamard = true;
  std::map<std::string, double> times;
  Stopwatch clock;

  const CommutingSquareCheck cs = verify_commuting_square(h);
  r.commuting_square = {cs.passed, cs.worst_defect, cs.irreducible, cs.intersection_dim};
  r.fingerprint_hash = fingerprint_digest(equivalence_fingerprint(h, h.tol()), h.tol());
  times["verify"] = clock.lap();

  const ProfileTensor p = profile(h);
  const CommutantResult second = second_commutant(p, h.tol());
  r.second_dim = second.dim;
  r.partition = *second.partition;
  times["order2"] = clock.lap();

  for (std::size_t order = 3; order <= opts.order; ++order) {
    const CommutantResult res = relative_commutant_dim(h, order, kRankRelTol, opts.force);
    r.higher[order] = HigherOrderEntry{res.dim, res.spectrum->gap(), res.ambiguous()};
    times["order" + std::to_string(order)] = clock.lap();
  }

  if (opts.dita_m) {
    if (h.n() % *opts.dita_m != 0) throw InputError("--dita m must divide n");
    const DitaShape shape(h.n(), *opts.dita_m, h.n() / *opts.dita_m);
    DitaSummary d;
    d.shape = shape.to_string();
    d.membership = verify_bisch_membership(p, shape, h.tol()).member;
    if (const auto f = extract_dita_factors(h.mat(), shape)) {
      const IntermediateReport ir = verify_intermediate_decomposition(f->a, f->b);
      d.intermediate_ok = ir.passed;
      d.detail = ir.summary();
    } else {
      d.detail = "blocks are not of the form a_ij B_j";
    }
    r.dita = d;
    times["dita"] = clock.lap();
  }
  if (opts.timings) r.timings = times;
  return r;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["tool_version"] = r.tool_version;
  j["n"] = r.n;
  j["source"] = r.source;
  j["tol"] = r.tol;
  j["is_hadamard"] = r.is_hadamard;
  j["commuting_square"] = {{"passed", r.commuting_square.passed},
                           {"worst_defect", r.commuting_square.worst_defect},
                           {"irreducible", r.commuting_square.irreducible},
                           {"intersection_dim", r.commuting_square.intersection_dim}};
  j["fingerprint_hash"] = r.fingerprint_hash;
  j["second"] = {{"dim", r.second_dim}, {"partition", r.partition.blocks}};
  if (!r.higher.empty()) {
    ordered_json h = ordered_json::object();
    for (const auto& [order, e] : r.higher)
      h[std::to_string(order)] = {{"dim", e.dim}, {"gap", e.gap}, {"ambiguous", e.ambiguous}};
    j["higher"] = std::move(h);
  }
  if (r.dita)
    j["dita"] = {{"shape", r.dita->shape},
                 {"membership", r.dita->membership},
                 {"intermediate_ok", r.dita->intermediate_ok},
                 {"detail", r.dita->detail}};
  if (r.timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [k, v] : *r.timings) t[k] = v;
    j["timings"] = std::move(t);
  }
  return j;
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string write_report(const AnalysisReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "source: " << r.source << "\n"
     << "n: " << r.n << "\n"
     << "hadamard: " << yes_no(r.is_hadamard) << " (tol " << fmt(r.tol) << ")\n"
     << "commuting square: " << (r.commuting_square.passed ? "passed" : "failed") << " (worst defect "
     << fmt(r.commuting_square.worst_defect) << ", " << (r.commuting_square.irreducible ? "irreducible" : "reducible")
     << ")\n"
     << "fingerprint: " << r.fingerprint_hash << "\n"
     << "second relative commutant: dim " << r.second_dim << "\n"
     << "  partition: " << r.partition.to_string() << "\n";
  for (const auto& [order, e] : r.higher)
    os << "relative commutant order " << order << ": dim " << e.dim << " (gap " << fmt(e.gap)
       << (e.ambiguous ? ", AMBIGUOUS" : "") << ")\n";
  if (r.dita) {
    os << "dita " << r.dita->shape << ": membership " << yes_no(r.dita->membership) << ", intermediate "
       << yes_no(r.dita->intermediate_ok);
    if (!r.dita->detail.empty()) os << " (" << r.dita->detail << ")";
    os << "\n";
  }
  if (r.timings)
    for (const auto& [k, v] : *r.timings) os << "time " << k << ": " << fmt(v) << " s\n";
  return os.str();
}

AnalysisReport read_report(const std::string& json_text) {
  try {
    const ordered_json j = ordered_json::parse(json_text);
    AnalysisReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.source = j.at("source").get<std::string>();
    r.tol = j.at("tol").get<double>();
    r.is_hadamard = j.at("is_hadamard").get<bool>();
    const auto& cs = j.at("commuting_square");
    r.commuting_square = {cs.at("passed").get<bool>(), cs.at("worst_defect").get<double>(),
                          cs.at("irreducible").get<bool>(), cs.at("intersection_dim").get<std::size_t>()};
    r.fingerprint_hash = j.at("fingerprint_hash").get<std::string>();
    r.second_dim = j.at("second").at("dim").get<std::size_t>();
    r.partition.blocks = j.at("second").at("partition").get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("higher"))
      for (const auto& [key, e] : j["higher"].items())
        r.higher[std::stoul(key)] =
            HigherOrderEntry{e.at("dim").get<std::size_t>(), e.at("gap").get<double>(), e.at("ambiguous").get<bool>()};
    if (j.contains("dita")) {
      const auto& d = j["dita"];
      r.dita = DitaSummary{d.at("shape").get<std::string>(), d.at("membership").get<bool>(),
                           d.at("intermediate_ok").get<bool>(), d.at("detail").get<std::string>()};
    }
    if (j.contains("timings")) r.timings = j["timings"].get<std::map<std::string, double>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string write_sweep(const SweepResult& s, ReportFormat format) {
  const auto zeros = [&](std::size_t pattern) {
    std::size_t z = 0;
    for (bool b : s.patterns[pattern]) z += b;
    return z;
  };
  const auto degrees = [](double rad) {
    // rounded to 1e-6 so the output is stable across platforms
    return std::round(rad * 180.0 / std::numbers::pi * 1e6) / 1e6;
  };
  if (format == ReportFormat::json) {
    ordered_json j;
    j["family"] = std::string(family_name(s.family));
    j["grid"] = s.grid;
    j["points"] = s.points.size();
    j["distinct_patterns"] = s.patterns.size();
    j["generic"] = {{"count", s.pattern_counts[s.generic_pattern]},
                    {"zeros", zeros(s.generic_pattern)},
                    {"dim", s.generic_dim}};
    ordered_json ex = ordered_json::array();
    for (std::size_t idx : s.exceptional) {
      const SweepPoint& pt = s.points[idx];
      ordered_json deg = ordered_json::array();
      for (double a : pt.params) deg.push_back(degrees(a));
      ex.push_back({{"degrees", deg}, {"zeros", zeros(pt.pattern)}, {"dim", pt.dim}});
    }
    j["exceptional"] = std::move(ex);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "family: " << family_name(s.family) << "\ngrid:";
  for (std::size_t g : s.grid) os << ' ' << g;
  os << "\npoints: " << s.points.size() << "\ndistinct zero patterns: " << s.patterns.size()
     << "\ngeneric: " << s.pattern_counts[s.generic_pattern] << " points, " << zeros(s.generic_pattern)
     << " vanishing profile entries, dim " << s.generic_dim << "\nexceptional: " << s.exceptional.size() << "\n";
  for (std::size_t idx : s.exceptional) {
    const SweepPoint& pt = s.points[idx];
    os << "  degrees (";
    for (std::size_t i = 0; i < pt.params.size(); ++i) os << (i ? ", " : "") << degrees(pt.params[i]);
    os << "): " << zeros(pt.pattern) << " zeros, dim " << pt.dim << "\n";
  }
  return os.str();
}

}  // namespace hadsub
