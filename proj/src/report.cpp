#include "grasscurv/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include <Eigen/Core>

namespace grasscurv {

void CurvatureReport::add(ReportEntry e) {
  if (!e.residual && e.closed && e.oracle) e.residual = std::abs(*e.closed - *e.oracle);
  if (e.status.empty()) {
    if (e.tolerance && e.residual) {
      e.status = *e.residual <= *e.tolerance ? "pass" : "fail";
    } else {
      e.status = "n/a";
    }
  }
  entries_.push_back(std::move(e));
}

bool CurvatureReport::all_pass() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const ReportEntry& e) { return e.status == "fail"; });
}

namespace {

io::Json opt(const std::optional<double>& v) {
  return v ? io::Json(*v) : io::Json(nullptr);
}

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : "-"; }

}  // namespace

io::Json CurvatureReport::to_json() const {
  io::Json rows = io::Json::array();
  for (const auto& e : entries_) {
    io::Json r;
    r["name"] = e.name;
    r["expression"] = e.expression;
    r["closed"] = opt(e.closed);
    r["oracle"] = opt(e.oracle);
    r["residual"] = opt(e.residual);
    r["tolerance"] = opt(e.tolerance);
    r["provenance"] = e.provenance;
    r["status"] = e.status;
    if (!e.note.empty()) r["note"] = e.note;
    rows.push_back(std::move(r));
  }
  io::Json j;
  j["k"] = k_;
  j["n"] = n_;
  j["entries"] = std::move(rows);
  return j;
}

std::string CurvatureReport::to_table() const {
  const std::vector<std::string> head{"curvature", "expression", "closed", "oracle", "residual",
                                      "status"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : entries_) {
    rows.push_back({e.name, e.expression, cell(e.closed), cell(e.oracle), cell(e.residual),
                    e.status});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << r[c];
      if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  };
  out << "Gr(" << k_ << "," << n_ << ")\n";
  line(head);
  std::size_t total = 0;
  for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
  out << std::string(total, '-') << '\n';
  for (const auto& r : rows) line(r);
  for (const auto& e : entries_) {
    if (!e.note.empty()) out << "  " << e.name << ": " << e.note << '\n';
  }
  return out.str();
}

io::Json RunManifest::to_json() const {
  io::Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["k"] = k;
  j["n"] = n;
  j["seed"] = seed ? io::Json(*seed) : io::Json(nullptr);
  io::Json tol = io::Json::object();
  for (const auto& [name, v] : tolerances) tol[name] = v;
  j["tolerances"] = std::move(tol);
  io::Json versions;
  versions["grasscurv"] = kLibraryVersion;
  versions["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." +
                      std::to_string(EIGEN_MAJOR_VERSION) + "." +
                      std::to_string(EIGEN_MINOR_VERSION);
  versions["json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                     std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                     std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  j["versions"] = std::move(versions);
  j["timestamp"] = timestamp ? io::Json(*timestamp) : io::Json(nullptr);
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

io::Json sign_ledger() {
  io::Json rows = io::Json::array();
  auto add = [&](const char* formula, const char* as, const char* note) {
    io::Json r;
    r["formula"] = formula;
    r["implemented"] = as;
    r["note"] = note;
    rows.push_back(std::move(r));
  };
  add("second fundamental form", "sign-flipped",
      "1/2 V diag(-(X0Y0^T + Y0X0^T), X0^TY0 + Y0^TX0) V^T; finite differences and the "
      "Gr(1,2) circle select this sign");
  add("Weingarten map", "sign-flipped", "1/2 V [[0, X0H2 - H1X0], [., 0]] V^T, adjoint of II");
  add("mean curvature vector", "as printed", "1/(2m) V diag(-(n-k)I, kI) V^T");
  add("mean curvature", "as printed", "((k-n) tr H1 + k tr H2)/(2m)");
  add("principal curvatures", "as printed", "(lambda_{k+j} - lambda_i)/2");
  add("Gaussian curvature", "as printed", "2^{-m} prod (lambda_{k+j} - lambda_i)");
  add("Riemann and later intrinsic formulas", "as printed", "quadratic in II, sign-independent");
  add("Jacobi curvature", "halved",
      "1/2 [tr(XYZW) - tr(Y (XZ + ZX)/2 W)] = 1/2 (Rie(X,Y,Z,W) + Rie(Z,Y,X,W)); the unhalved "
      "trace expression is twice the symmetrized tensor");
  add("scalar curvature", "as printed", "k(n-k)(n-2)/8 = tr Ric = 2 sum_{j<l} kappa(e_j, e_l)");
  add("third fundamental form", "as printed, flagged",
      "closed form -1/2 (n/(2m) + (n-2)/4) tr(XY) disagrees with sum_j S(eta_j)^2 = "
      "(n+2)/8 tr(XY); both reported, not reconciled");
  add("Gauss-Obata identity III = <II, H> - Ric", "holds only with the flipped sign of II",
      "with the implemented II the definition satisfies III = <II, m H> - Ric");
  io::Json j;
  j["entries"] = std::move(rows);
  return j;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  io::Json j = x;
  return j.dump();
}

}  // namespace grasscurv
