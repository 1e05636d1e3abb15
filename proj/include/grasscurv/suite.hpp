#pragma once

// The curvature table and the invariant suite behind `grasscurv table` and
// `grasscurv verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "grasscurv/report.hpp"

namespace grasscurv::suite {

/// One row per tabulated quantity, each with the
/// closed-form value (the coefficient of tr(XY) for forms proportional to g),
/// its oracle, and the largest relative residual over `samples` random
/// evaluations drawn from streams (seed, 0..samples-1).
CurvatureReport table_report(int k, int n, int samples, std::uint64_t seed);

struct Check {
  std::string id;
  std::string module;
  double residual = 0.0;
  double tolerance = 0.0;
  /// "pass", "fail" or "skipped".
  std::string status;
  std::string note;
};

struct VerifyOptions {
  int k = 2;
  int n = 4;
  std::uint64_t seed = 0;
  /// Tolerance of the finite-difference checks.
  double fd_tolerance = 1e-6;
  bool quick = false;
  /// Swap in the opposite sign of II for the finite-difference
  /// agreement checks (mutation sanity run).
  bool flip_sff_sign = false;
};

struct VerifyResult {
  std::vector<Check> checks;

  bool passed() const;
  std::vector<std::string> failed_ids() const;
  io::Json to_json() const;
};

VerifyResult run_verify(const VerifyOptions& opt);

}  // namespace grasscurv::suite
