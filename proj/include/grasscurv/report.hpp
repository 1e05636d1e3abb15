#pragma once

// Named curvature evaluations with provenance, serialized as JSON or as an
// aligned text table.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasscurv/io.hpp"

namespace grasscurv {

/// Version tag written into every JSON document the CLI emits.
inline constexpr const char* kSchemaVersion = "grasscurv-report/1";
inline constexpr const char* kLibraryVersion = "1.0.0";

struct ReportEntry {
  std::string name;
  std::string expression;
  std::optional<double> closed;
  std::optional<double> oracle;
  /// |closed - oracle| unless set explicitly (e.g. a maximum over samples).
  std::optional<double> residual;
  std::optional<double> tolerance;
  std::string provenance = "closed-form";
  /// "pass", "fail", "flagged" or "domain-guarded (...)".
  std::string status;
  std::string note;
};

class CurvatureReport {
 public:
  CurvatureReport(int k, int n) : k_(k), n_(n) {}

  /// Fills in the residual from closed/oracle and, when a tolerance is given
  /// and no status is set, the pass/fail status.
  void add(ReportEntry e);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  int k() const { return k_; }
  int n() const { return n_; }

  /// True unless some entry has status "fail".
  bool all_pass() const;

  io::Json to_json() const;
  std::string to_table() const;

 private:
  int k_;
  int n_;
  std::vector<ReportEntry> entries_;
};

struct RunManifest {
  std::string command;
  int k = 0;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> tolerances;
  std::optional<std::string> timestamp;

  io::Json to_json() const;
};

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

/// Which printed formulas are implemented as printed and which with the sign
/// flipped, plus the unreconciled third-fundamental-form values.
io::Json sign_ledger();

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace grasscurv
