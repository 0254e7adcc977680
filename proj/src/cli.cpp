#include "hadsub/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadsub/dita.hpp"
#include "hadsub/matrix_io.hpp"
#include "hadsub/report.hpp"
#include "hadsub/sweep.hpp"

namespace hadsub {

double parse_angle(const std::string& token) {
  std::string body = token;
  double scale = 1.0;
  const auto strip = [&](const std::string& suffix) {
    if (body.size() > suffix.size() && body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
      body.resize(body.size() - suffix.size());
      return true;
    }
    return false;
  };
  if (strip("tau"))
    scale = 2.0 * std::numbers::pi;
  else
    strip("rad");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != body.size() || !std::isfinite(v))
    throw InputError("cannot parse parameter '" + token + "' (use e.g. 0.7rad or 0.25tau)");
  return v * scale;
}

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::optional<double> tol_flag;
  std::uint64_t seed = 0;

  double tol() const {
    if (tol_flag) {
      if (!(*tol_flag > 0.0)) throw InputError("--tol must be positive");
      return *tol_flag;
    }
    if (const char* env = std::getenv("HADSUB_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0.0)) throw InputError("HADSUB_TOL must be a positive number");
      return v;
    }
    return kDefaultTol;
  }
};

/// Verification failure: prints the diagnostic, maps to exit code 2.
struct VerificationFailure {
  std::string message;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

FamilySpec family_spec(const std::string& family, const std::vector<std::string>& tokens) {
  const auto f = parse_family(family);
  if (!f) throw InputError("unknown family '" + family + "' (see 'catalog list')");
  FamilySpec spec{*f, {}};
  for (const auto& t : tokens) {
    if (t.empty()) continue;
    if (*f == Family::fourier) {
      std::size_t used = 0;
      const long v = std::stol(t, &used);
      if (used != t.size() || v < 1) throw InputError("fourier takes the order n as its parameter");
      spec.params.push_back(static_cast<double>(v));
    } else {
      spec.params.push_back(parse_angle(t));
    }
  }
  validate(spec);
  return spec;
}

std::string spec_label(const std::string& family, const std::vector<std::string>& tokens) {
  std::string s = family + "(";
  for (std::size_t i = 0; i < tokens.size(); ++i) s += (i ? "," : "") + tokens[i];
  return s + ")";
}

HadamardMatrix require_hadamard(const Matrix& m, double tol, const std::string& what) {
  HadamardCheck c = verify_hadamard(m, tol);
  if (!c.ok()) throw VerificationFailure{what + ": " + c.diagnostic->message()};
  return *c.matrix;
}

HadamardMatrix load_matrix(const std::string& path, double tol) {
  return require_hadamard(read_matrix_file(path), tol, path);
}

HadamardMatrix load_family(const FamilySpec& spec, double tol, const std::string& label) {
  return require_hadamard(catalog_entries(spec), tol, label);
}

const char* family_help(Family f) {
  switch (f) {
    case Family::fourier: return "n (integer order)";
    case Family::f4: return "a";
    case Family::f6: return "a,b";
    case Family::bn6: return "theta, |theta| >= acos((sqrt(3)-1)/2)";
    case Family::p7: return "a";
    case Family::f8: return "a,b,c,d,z";
    case Family::tao:
    case Family::haagerup: return "(none)";
  }
  return "";
}

int cmd_verify(Context& ctx, const std::string& path) {
  const HadamardMatrix h = load_matrix(path, ctx.tol());
  ctx.out << "hadamard: n = " << h.n() << ", tol " << h.tol() << "\n";
  return kExitOk;
}

int cmd_catalog_list(Context& ctx) {
  for (Family f : all_families()) {
    ctx.out << family_name(f) << "\tparams: " << family_help(f);
    if (f != Family::fourier) ctx.out << "\tn = " << family_order(FamilySpec{f, {}});
    ctx.out << "\n";
  }
  return kExitOk;
}

int cmd_catalog_gen(Context& ctx, const std::string& family, const std::vector<std::string>& params,
                    const std::string& output, bool scramble) {
  const FamilySpec spec = family_spec(family, params);
  HadamardMatrix h = load_family(spec, ctx.tol(), spec_label(family, params));
  if (scramble) h = random_equivalence(h, ctx.seed);
  const std::string json = matrix_to_json(h.mat());
  if (output.empty() || output == "-")
    ctx.out << json;
  else
    write_text_file(output, json);
  return kExitOk;
}

int cmd_analyze(Context& ctx, const std::string& file, const std::string& family,
                const std::vector<std::string>& params, AnalyzeOptions opts, bool text) {
  if (file.empty() == family.empty()) throw InputError("analyze needs either a file or --family");
  std::optional<HadamardMatrix> h;
  if (!file.empty()) {
    h = load_matrix(file, ctx.tol());
    opts.source = file;
  } else {
    opts.source = spec_label(family, params);
    h = load_family(family_spec(family, params), ctx.tol(), opts.source);
  }
  const AnalysisReport r = analyze(*h, opts);
  ctx.out << write_report(r, text ? ReportFormat::text : ReportFormat::json);
  if (r.ambiguous()) {
    ctx.err << "warning: nullspace spectral gap below " << kMinSpectralGap << "x, dimension is ambiguous\n";
    return kExitAmbiguous;
  }
  return kExitOk;
}

int cmd_sweep(Context& ctx, const std::string& family, const std::string& grid, bool json, unsigned threads) {
  const auto f = parse_family(family);
  if (!f) throw InputError("unknown family '" + family + "'");
  std::vector<std::size_t> g;
  for (const auto& t : split_commas(grid)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size() || v < 1) throw InputError("--grid takes positive integers, got '" + t + "'");
    g.push_back(static_cast<std::size_t>(v));
  }
  const SweepResult s = zero_pattern_sweep(*f, g, ctx.tol(), kMaxSweepPoints, threads);
  ctx.out << write_sweep(s, json ? ReportFormat::json : ReportFormat::text);
  return kExitOk;
}

int cmd_dita(Context& ctx, const std::string& a_path, const std::vector<std::string>& b_paths,
             const std::vector<std::string>& d_paths, bool check_only, const std::string& output, bool json) {
  const double tol = ctx.tol();
  const HadamardMatrix a = load_matrix(a_path, tol);
  std::vector<Matrix> b, d;
  for (const auto& p : b_paths) b.push_back(load_matrix(p, tol).mat());
  for (const auto& p : d_paths) d.push_back(read_matrix_file(p));
  if (b.size() != a.n()) throw InputError("dita needs one --B per row of A (" + std::to_string(a.n()) + ")");

  const IntermediateReport rep = verify_intermediate_decomposition(a.mat(), b, d);
  const HadamardMatrix h = require_hadamard(dita_entries(a.mat(), b, d), tol, "composition");
  const BischMembership mem = verify_bisch_membership(h, rep.shape, tol);
  const BischExpectationCheck ex = verify_bisch_expectation(rep.shape);
  const bool ok = rep.passed && mem.member && ex.passed;

  if (!check_only && !output.empty()) write_text_file(output, matrix_to_json(h.mat()));
  if (json) {
    nlohmann::ordered_json j;
    j["shape"] = rep.shape.to_string();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"defect", c.defect}, {"location", c.location}, {"passed", c.passed}});
    j["checks"] = std::move(checks);
    j["bisch_membership"] = mem.member;
    j["bisch_expectation"] = ex.passed;
    j["second_dim"] = second_commutant(h, tol).dim;
    j["passed"] = ok;
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "shape " << rep.shape.to_string() << "\n";
    for (const auto& c : rep.checks)
      ctx.out << (c.passed ? "PASS " : "FAIL ") << c.name << " (defect " << c.defect
              << (c.location.empty() ? "" : ", at " + c.location) << ")\n";
    ctx.out << (mem.member ? "PASS " : "FAIL ") << "bisch_membership\n"
            << (ex.passed ? "PASS " : "FAIL ") << "bisch_expectation\n"
            << "second relative commutant dim " << second_commutant(h, tol).dim << "\n";
  }
  return ok ? kExitOk : kExitVerification;
}

int cmd_fingerprint(Context& ctx, const std::string& path, bool json) {
  const HadamardMatrix h = load_matrix(path, ctx.tol());
  const std::string digest = fingerprint_digest(equivalence_fingerprint(h, h.tol()), h.tol());
  if (json)
    ctx.out << nlohmann::ordered_json{{"n", h.n()}, {"tol", h.tol()}, {"fingerprint_hash", digest}}.dump(2) << "\n";
  else
    ctx.out << digest << "\n";
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, std::nullopt, 0};
  CLI::App app{"Relative commutants of complex Hadamard subfactors", "hadsub"};
  app.require_subcommand(1);
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Hadamard / profile zero tolerance (env HADSUB_TOL)");
  app.add_option("--seed", ctx.seed, "Seed for randomized operations");

  std::string file, family, output, grid, a_path;
  std::string params_raw;
  std::vector<std::string> b_paths, d_paths;
  bool text = false, json = false, check_only = false, scramble = false;
  unsigned threads = 0;
  AnalyzeOptions opts;
  std::size_t dita_m = 0;

  const auto local_tol = [&](CLI::App* sub) { sub->add_option("--tol", tol_value, "Tolerance"); };

  auto* verify = app.add_subcommand("verify", "Verify that a matrix file is complex Hadamard");
  verify->add_option("file", file, "Matrix file")->required();
  local_tol(verify);

  auto* catalog = app.add_subcommand("catalog", "Parametric families");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List families");
  auto* gen = catalog->add_subcommand("gen", "Write a family member as JSON");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("--params", params_raw, "Comma separated parameters");
  gen->add_option("-o,--output", output, "Output file (default stdout)");
  gen->add_flag("--scramble", scramble, "Apply a seeded random equivalence");
  local_tol(gen);

  auto* an = app.add_subcommand("analyze", "Relative commutants and structure report");
  an->add_option("file", file, "Matrix file");
  an->add_option("--family", family, "Catalog family");
  an->add_option("--params", params_raw, "Comma separated parameters");
  an->add_option("--order", opts.order, "Highest relative commutant order (2, 3 or 4)");
  an->add_flag("--json", json, "JSON output (default)");
  an->add_flag("--text", text, "Text output");
  an->add_flag("--force", opts.force, "Lift the size limits");
  an->add_flag("--timings", opts.timings, "Include wall-clock timings");
  auto* dita_opt = an->add_option("--dita", dita_m, "Check the Dita split with inner size m");
  local_tol(an);

  auto* sw = app.add_subcommand("sweep", "Zero-pattern sweep over a parameter grid");
  sw->add_option("--family", family, "Catalog family")->required();
  sw->add_option("--grid", grid, "Grid size per parameter, comma separated")->required();
  sw->add_flag("--json", json, "JSON output");
  sw->add_option("--threads", threads, "Worker threads (default: all cores)");
  local_tol(sw);

  auto* di = app.add_subcommand("dita", "Compose and verify a Dita-type matrix");
  di->add_option("--A", a_path, "Outer k x k Hadamard matrix")->required();
  di->add_option("--B", b_paths, "Inner m x m Hadamard matrices, one per column of A")->required();
  di->add_option("--D", d_paths, "Diagonal unitaries, one per column of A");
  di->add_flag("--check-only", check_only, "Only run the verifications");
  di->add_option("-o,--output", output, "Write the composed matrix");
  di->add_flag("--json", json, "JSON output");
  local_tol(di);

  auto* fp = app.add_subcommand("fingerprint", "Equivalence fingerprint digest");
  fp->add_option("file", file, "Matrix file")->required();
  fp->add_flag("--json", json, "JSON output");
  local_tol(fp);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : {verify, gen, an, sw, di, fp})
    if (sub->count("--tol")) ctx.tol_flag = tol_value;
  if (tol_opt->count()) ctx.tol_flag = tol_value;

  try {
    const auto params = params_raw.empty() ? std::vector<std::string>{} : split_commas(params_raw);
    if (*verify) return cmd_verify(ctx, file);
    if (*list) return cmd_catalog_list(ctx);
    if (*gen) return cmd_catalog_gen(ctx, family, params, output, scramble);
    if (*an) {
      if (json && text) throw InputError("--json and --text are exclusive");
      if (dita_opt->count()) opts.dita_m = dita_m;
      return cmd_analyze(ctx, file, family, params, opts, text);
    }
    if (*sw) return cmd_sweep(ctx, family, grid, json, threads);
    if (*di) return cmd_dita(ctx, a_path, b_paths, d_paths, check_only, output, json);
    if (*fp) return cmd_fingerprint(ctx, file, json);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.message << "\n";
    return kExitVerification;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << " (use --force to override)\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hadsub
