#pragma once

// Analysis report: everything the CLI prints about one matrix, with a
// byte-stable JSON form and a human-readable text form.

#include <map>
#include <optional>
#include <string>

#include "hadsub/commutants.hpp"
#include "hadsub/dita.hpp"
#include "hadsub/hadamard.hpp"
#include "hadsub/sweep.hpp"

namespace hadsub {

inline constexpr const char* kToolVersion = "0.1.0";

struct HigherOrderEntry {
  std::size_t dim = 0;
  double gap = 0.0;
  bool ambiguous = false;
  bool operator==(const HigherOrderEntry&) const = default;
};

struct DitaSummary {
  std::string shape;  // "(n,m,k)"
  bool membership = false;
  bool intermediate_ok = false;
  std::string detail;  // worst failing check, empty when everything passed
  bool operator==(const DitaSummary&) const = default;
};

struct CommutingSquareSummary {
  bool passed = false;
  double worst_defect = 0.0;
  bool irreducible = false;
  std::size_t intersection_dim = 0;
  bool operator==(const CommutingSquareSummary&) const = default;
};

struct AnalysisReport {
  std::string tool_version = kToolVersion;
  std::size_t n = 0;
  std::string source;
  double tol = kDefaultTol;
  bool is_hadamard = false;
  CommutingSquareSummary commuting_square;
  std::string fingerprint_hash;
  std::size_t second_dim = 0;
  Partition partition;
  std::map<std::size_t, HigherOrderEntry> higher;  // order -> result
  std::optional<DitaSummary> dita;
  std::optional<std::map<std::string, double>> timings;  // seconds
  bool operator==(const AnalysisReport&) const = default;

  bool ambiguous() const;
};

enum class ReportFormat { json, text };

struct AnalyzeOptions {
  std::string source;
  std::size_t order = 2;
  bool force = false;
  std::optional<std::size_t> dita_m;  // inner block size of a Dita split to check
  bool timings = false;
};

/// Runs every analysis up to opts.order. Throws LimitError past the size limits.
AnalysisReport analyze(const HadamardMatrix& h, const AnalyzeOptions& opts);

/// Reads (A, B_j D_j) off H for the split n = m k, taking the first row of
/// each outer block as B_j D_j. Columns are tried in natural order, then
/// interleaved (sorted by (j mod k, j div k)); column permutations leave the
/// profile unchanged. Returns nullopt if neither order gives that form.
struct DitaFactors {
  Matrix a;
  std::vector<Matrix> b;
  bool interleaved_columns = false;
};
std::optional<DitaFactors> extract_dita_factors(const Matrix& h, const DitaShape& shape, double tol = kVerifyTol);

std::string write_report(const AnalysisReport& report, ReportFormat format);
/// Inverse of the JSON form. Throws InputError on schema mismatch.
AnalysisReport read_report(const std::string& json_text);

std::string write_sweep(const SweepResult& sweep, ReportFormat format);

}  // namespace hadsub
