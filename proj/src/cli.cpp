#include "grasscurv/cli.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grasscurv/extrinsic.hpp"
#include "grasscurv/intrinsic.hpp"
#include "grasscurv/io.hpp"
#include "grasscurv/oracle.hpp"
#include "grasscurv/report.hpp"
#include "grasscurv/suite.hpp"

namespace grasscurv::cli {

namespace ex = grasscurv::extrinsic;
namespace in = grasscurv::intrinsic;
namespace orc = grasscurv::oracle;
using io::Json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string> kCurvNames{
    "fff",       "sff",      "weingarten", "mean",    "principal", "gaussian",
    "third-closed", "third-def", "riemann", "jacobi", "sectional", "ricci",
    "scalar",    "schouten", "cotton",     "weyl",    "bach",      "delta"};

std::string joined(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

void require_kn(int k, int n) {
  if (n < 2 || k < 1 || k >= n) {
    throw UsageError("need 1 <= k < n, got --k " + std::to_string(k) + " --n " +
                     std::to_string(n));
  }
}

void emit(std::ostream& out, const std::string& path, const Json& j) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_file(path, j);
  }
}

// ---------------------------------------------------------------------------
// point / tangent / normal

struct SampleArgs {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string at;
  std::string out_path;
};

void add_sample_flags(CLI::App* sub, SampleArgs& a, bool with_at) {
  sub->add_option("--n", a.n, "ambient dimension");
  sub->add_option("--k", a.k, "subspace dimension");
  sub->add_option("--seed", a.seed, "random seed")->capture_default_str();
  sub->add_option("--out", a.out_path, "output file (default: stdout)");
  if (with_at) sub->add_option("--at", a.at, "anchor point file (default: point drawn from --seed)");
}

struct Drawn {
  GrassmannPoint p;
  Rng rng;
};

Drawn draw_point(const SampleArgs& a) {
  Rng rng = make_rng(a.seed);
  if (!a.at.empty()) {
    return {io::point_from_json(io::read_file(a.at)), std::move(rng)};
  }
  require_kn(a.k, a.n);
  GrassmannPoint p = point_random(a.n, a.k, rng);
  return {std::move(p), std::move(rng)};
}

// ---------------------------------------------------------------------------
// curv

struct CurvArgs {
  std::string name;
  std::vector<std::string> files;
  int n = 0;
  int k = 0;
  int r = 0;
  bool json = false;
  bool table = false;
  bool check = false;
  bool stamp = false;
};

struct Inputs {
  std::vector<TangentVector> tangents;
  std::vector<NormalVector> normals;
  std::optional<GrassmannPoint> point;

  const GrassmannPoint* anchor() const {
    if (!tangents.empty()) return &tangents.front().anchor();
    if (!normals.empty()) return &normals.front().anchor();
    if (point) return &*point;
    return nullptr;
  }
};

Inputs load_inputs(const std::vector<std::string>& files) {
  Inputs in;
  for (const auto& f : files) {
    const Json j = io::read_file(f);
    const std::string kind = io::classify(j);
    if (kind == "point") {
      in.point = io::point_from_json(j);
    } else if (kind == "tangent") {
      in.tangents.push_back(io::tangent_from_json(j));
    } else {
      in.normals.push_back(io::normal_from_json(j));
    }
  }
  const GrassmannPoint* a = in.anchor();
  if (a != nullptr) {
    for (const auto& t : in.tangents) require_common_anchor(*a, t.anchor(), "curv");
    for (const auto& h : in.normals) require_common_anchor(*a, h.anchor(), "curv");
    if (in.point) require_common_anchor(*a, *in.point, "curv");
  }
  return in;
}

struct Result {
  std::string label;
  std::optional<double> value;
  std::optional<Matrix> matrix;
  std::optional<double> oracle;
  std::optional<Matrix> oracle_matrix;
};

void need(const Inputs& in, std::size_t tangents, std::size_t normals, const std::string& name) {
  if (in.tangents.size() != tangents || in.normals.size() != normals) {
    throw UsageError(name + ": expected " + std::to_string(tangents) + " tangent and " +
                     std::to_string(normals) + " normal input file(s), got " +
                     std::to_string(in.tangents.size()) + " and " +
                     std::to_string(in.normals.size()));
  }
}

double kappa_oracle(const TangentVector& x, const TangentVector& y) {
  const double xx = trace_inner(x.matrix(), x.matrix());
  const double yy = trace_inner(y.matrix(), y.matrix());
  const double xy = trace_inner(x.matrix(), y.matrix());
  return orc::gauss_riemann(x, y, y, x) / (xx * yy - xy * xy);
}

GrassmannPoint point_for(const Inputs& in, const CurvArgs& a) {
  if (const GrassmannPoint* p = in.anchor()) return *p;
  require_kn(a.k, a.n);
  return GrassmannPoint::standard(a.k, a.n);
}

std::vector<Result> evaluate(const CurvArgs& a, const Inputs& in) {
  const std::string& name = a.name;
  const auto& t = in.tangents;
  const auto& h = in.normals;
  std::vector<Result> out;
  auto scalar = [&](std::string label, double v, std::optional<double> o) {
    Result r;
    r.label = std::move(label);
    r.value = v;
    r.oracle = o;
    out.push_back(std::move(r));
  };
  auto matrix = [&](std::string label, const Matrix& v, std::optional<Matrix> o) {
    Result r;
    r.label = std::move(label);
    r.matrix = v;
    r.oracle_matrix = std::move(o);
    out.push_back(std::move(r));
  };

  if (name == "fff") {
    need(in, 2, 0, name);
    scalar("fff(X,Y)", ex::first_fundamental_form(t[0], t[1]),
           2.0 * t[0].block().cwiseProduct(t[1].block()).sum());
  } else if (name == "sff") {
    need(in, 2, 0, name);
    matrix("sff(X,Y)", ex::second_fundamental_form(t[0], t[1]).matrix().matrix(),
           a.check ? std::optional<Matrix>(orc::sff_fd(t[0], t[1]).matrix().matrix())
                   : std::nullopt);
  } else if (name == "weingarten") {
    need(in, 1, 1, name);
    std::optional<Matrix> o;
    if (a.check) {
      const TangentBasis b = tangent_basis(t[0].anchor());
      const Matrix s = orc::shape_operator_dense(t[0].anchor(), h[0]);
      o = b.combine(s * b.coordinates(t[0])).matrix().matrix();
    }
    matrix("S(H)X", ex::weingarten(h[0], t[0]).matrix().matrix(), o);
  } else if (name == "mean") {
    if (!t.empty() || h.size() > 1) throw UsageError("mean: expects a point and at most one normal");
    const GrassmannPoint p = point_for(in, a);
    std::optional<Matrix> o;
    if (a.check) {
      const TangentBasis b = tangent_basis(p);
      Matrix acc = Matrix::Zero(p.n(), p.n());
      for (const auto& e : b.vectors) acc += orc::ambient_sff(e, e).matrix().matrix();
      o = acc / static_cast<double>(b.size());
    }
    matrix("mean curvature vector", ex::mean_curvature_vector(p).matrix().matrix(), o);
    if (!h.empty()) {
      scalar("mean curvature(H)", ex::mean_curvature_scalar(p, h[0]),
             orc::shape_operator_dense(p, h[0]).trace() / p.dim());
    }
  } else if (name == "principal") {
    need(in, 0, 1, name);
    const GrassmannPoint& p = h[0].anchor();
    std::vector<double> closed = ex::principal_curvatures(p, h[0]).values;
    std::sort(closed.begin(), closed.end());
    const std::vector<double> dense = orc::principal_dense(p, h[0]);
    for (std::size_t i = 0; i < closed.size(); ++i) {
      scalar("kappa_" + std::to_string(i + 1), closed[i], dense[i]);
    }
  } else if (name == "gaussian") {
    need(in, 0, 1, name);
    const GrassmannPoint& p = h[0].anchor();
    scalar("G(H)", ex::gaussian_curvature(p, h[0]), orc::shape_operator_dense(p, h[0]).determinant());
  } else if (name == "third-closed") {
    need(in, 2, 0, name);
    scalar("III_closed(X,Y)", ex::third_fundamental_form_closed(t[0], t[1]),
           ex::third_fundamental_form_definition(t[0], t[1]));
  } else if (name == "third-def") {
    need(in, 2, 0, name);
    const GrassmannPoint& p = t[0].anchor();
    scalar("III_def(X,Y)", ex::third_fundamental_form_definition(t[0], t[1]),
           p.dim() * trace_inner(orc::ambient_sff(t[0], t[1]).matrix(),
                                 ex::mean_curvature_vector(p).matrix()) -
               orc::ricci_bruteforce(t[0], t[1]));
  } else if (name == "riemann") {
    need(in, 4, 0, name);
    scalar("Rie(X,Y,Z,W)", in::riemann(t[0], t[1], t[2], t[3]),
           orc::gauss_riemann(t[0], t[1], t[2], t[3]));
  } else if (name == "jacobi") {
    need(in, 4, 0, name);
    scalar("J(X,Y,Z,W)", in::jacobi(t[0], t[1], t[2], t[3]),
           0.5 * (orc::gauss_riemann(t[0], t[1], t[2], t[3]) +
                  orc::gauss_riemann(t[2], t[1], t[0], t[3])));
  } else if (name == "sectional") {
    if (t.empty() || t.size() % 2 != 0 || !h.empty()) {
      throw UsageError("sectional: expects tangent files in pairs X1 Y1 [X2 Y2 ...]");
    }
    for (std::size_t i = 0; i < t.size(); i += 2) {
      const std::string j = std::to_string(i / 2 + 1);
      scalar("kappa(X" + j + ",Y" + j + ")", in::sectional(t[i], t[i + 1]),
             kappa_oracle(t[i], t[i + 1]));
    }
  } else if (name == "ricci") {
    need(in, 2, 0, name);
    scalar("Ric(X,Y)", in::ricci(t[0], t[1]), orc::ricci_bruteforce(t[0], t[1]));
  } else if (name == "scalar") {
    const GrassmannPoint p = point_for(in, a);
    scalar("Sc", in::scalar_curvature(p.k(), p.n()), orc::scalar_bruteforce(p));
  } else if (name == "schouten") {
    need(in, 2, 0, name);
    scalar("P(X,Y)", in::schouten(t[0], t[1]), orc::schouten_definition(t[0], t[1]));
  } else if (name == "cotton") {
    need(in, 3, 0, name);
    std::optional<double> o;
    if (a.check) {
      const orc::TensorField p{2, [](const std::vector<TangentVector>& v) {
                                 return orc::schouten_definition(v[0], v[1]);
                               }};
      o = orc::covariant_derivative_fd(t[0], p)({t[1], t[2]}) -
          orc::covariant_derivative_fd(t[1], p)({t[0], t[2]});
    }
    scalar("C(X,Y,Z)", in::cotton(t[0], t[1], t[2]), o);
  } else if (name == "weyl") {
    need(in, 4, 0, name);
    const double w = in::weyl(t[0], t[1], t[2], t[3]);
    std::optional<double> o;
    if (t[0].anchor().dim() > 3) o = orc::weyl_decomposition(t[0], t[1], t[2], t[3]);
    scalar("W(X,Y,Z,W)", w, o);
  } else if (name == "bach") {
    need(in, 2, 0, name);
    scalar("B(X,Y)", in::bach(t[0], t[1]), orc::bach_sum(t[0], t[1]));
  } else if (name == "delta") {
    const GrassmannPoint p = point_for(in, a);
    const in::DeltaInvariants d = in::delta_invariants(p.k(), p.n(), a.r);
    std::optional<double> ou;
    std::optional<double> ol;
    if (a.check) {
      const in::DeltaWitnesses w = in::delta_witnesses(p.k(), p.n(), a.r);
      const double sc = orc::scalar_bruteforce(GrassmannPoint::standard(p.k(), p.n()));
      double smin = 0.0;
      double smax = 0.0;
      for (const auto& [x, y] : w.curvature_min) smin += kappa_oracle(x, y);
      for (const auto& [x, y] : w.curvature_max) smax += kappa_oracle(x, y);
      ou = sc - smin;
      ol = sc - smax;
    }
    scalar("upper", d.upper, ou);
    scalar("lower", d.lower, ol);
  }
  if (!a.check) {
    for (auto& r : out) {
      r.oracle.reset();
      r.oracle_matrix.reset();
    }
  }
  return out;
}

std::optional<double> residual_of(const Result& r) {
  if (r.value && r.oracle) return std::abs(*r.value - *r.oracle);
  if (r.matrix && r.oracle_matrix) return (*r.matrix - *r.oracle_matrix).norm();
  return std::nullopt;
}

int cmd_curv(const CurvArgs& a, int argc, const char* const* argv, std::ostream& out) {
  const Inputs in = load_inputs(a.files);
  const std::vector<Result> results = evaluate(a, in);
  const GrassmannPoint* anchor = in.anchor();
  const int k = anchor ? anchor->k() : a.k;
  const int n = anchor ? anchor->n() : a.n;
  const std::string provenance =
      a.name == "third-closed" ? "closed-form (flagged: disagrees with the definition)" : "closed-form";

  if (a.json) {
    RunManifest man;
    man.command = joined(argc, argv);
    man.k = k;
    man.n = n;
    if (a.check) man.tolerances["fd"] = orc::FDConfig{}.tolerance;
    if (a.stamp) man.timestamp = utc_timestamp();
    Json j;
    j["schema"] = kSchemaVersion;
    j["manifest"] = man.to_json();
    j["name"] = a.name;
    j["provenance"] = provenance;
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row;
      row["label"] = r.label;
      row["value"] = r.value ? Json(*r.value) : io::matrix_to_json(*r.matrix);
      if (r.oracle) row["oracle"] = *r.oracle;
      if (r.oracle_matrix) row["oracle"] = io::matrix_to_json(*r.oracle_matrix);
      if (const auto res = residual_of(r)) row["residual"] = *res;
      rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (a.table) {
    CurvatureReport rep(k, n);
    for (const auto& r : results) {
      ReportEntry e;
      e.name = r.label;
      e.expression = a.name;
      e.provenance = provenance;
      if (r.value) {
        e.closed = r.value;
        e.oracle = r.oracle;
      } else {
        e.closed = r.matrix->norm();
        if (r.oracle_matrix) e.oracle = r.oracle_matrix->norm();
        e.residual = residual_of(r);
        e.note = "matrix value; norm shown";
      }
      e.status = provenance;
      rep.add(e);
    }
    out << rep.to_table();
    return kOk;
  }
  out << a.name << " [" << provenance << "]\n";
  for (const auto& r : results) {
    out << r.label << " = ";
    if (r.value) {
      out << format_double(*r.value);
    } else {
      out << io::matrix_to_json(*r.matrix).dump();
    }
    if (const auto res = residual_of(r)) {
      out << "  oracle = "
          << (r.oracle ? format_double(*r.oracle) : io::matrix_to_json(*r.oracle_matrix).dump())
          << "  residual = " << format_double(*res);
    }
    out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// table

std::string ledger_text() {
  std::ostringstream s;
  s << "sign ledger:\n";
  const Json ledger = sign_ledger();
  for (const auto& e : ledger["entries"]) {
    s << "  " << e["formula"].get<std::string>() << ": " << e["implemented"].get<std::string>()
      << " -- " << e["note"].get<std::string>() << '\n';
  }
  return s.str();
}

struct TableArgs {
  int n = 4;
  int k = 2;
  int samples = 20;
  std::uint64_t seed = 0;
  bool json = false;
  bool stamp = false;
};

int cmd_table(const TableArgs& a, int argc, const char* const* argv, std::ostream& out) {
  require_kn(a.k, a.n);
  if (a.samples < 1) throw UsageError("--samples must be positive");
  const CurvatureReport rep = suite::table_report(a.k, a.n, a.samples, a.seed);
  if (a.json) {
    RunManifest man;
    man.command = joined(argc, argv);
    man.k = a.k;
    man.n = a.n;
    man.seed = a.seed;
    man.tolerances["fd"] = orc::FDConfig{}.tolerance;
    if (a.stamp) man.timestamp = utc_timestamp();
    Json j;
    j["schema"] = kSchemaVersion;
    j["manifest"] = man.to_json();
    j["report"] = rep.to_json();
    j["sign_ledger"] = sign_ledger();
    out << j.dump(2) << '\n';
  } else {
    out << rep.to_table() << '\n' << ledger_text();
  }
  return rep.all_pass() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  int n = 4;
  int k = 2;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  bool quick = false;
  bool stamp = false;
  std::string mutate;
};

int cmd_verify(const VerifyArgs& a, int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  require_kn(a.k, a.n);
  suite::VerifyOptions opt;
  opt.k = a.k;
  opt.n = a.n;
  opt.seed = a.seed;
  opt.fd_tolerance = a.tol;
  opt.quick = a.quick;
  opt.flip_sff_sign = a.mutate == "sff-sign";
  const suite::VerifyResult res = suite::run_verify(opt);

  RunManifest man;
  man.command = joined(argc, argv);
  man.k = a.k;
  man.n = a.n;
  man.seed = a.seed;
  man.tolerances["fd"] = a.tol;
  if (a.stamp) man.timestamp = utc_timestamp();
  Json j;
  j["schema"] = kSchemaVersion;
  j["manifest"] = man.to_json();
  j["result"] = res.to_json();
  j["sign_ledger"] = sign_ledger();
  out << j.dump(2) << '\n';
  if (!res.passed()) {
    err << "failed checks:";
    for (const auto& id : res.failed_ids()) err << ' ' << id;
    err << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// witness

struct WitnessArgs {
  std::string kind;
  int n = 4;
  int k = 2;
  int r = 2;
  bool printed = false;
  bool json = false;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  require_kn(a.k, a.n);
  in::DeltaWitnesses w;
  if (a.printed) {
    if (a.k != 2 || a.n != 4 || a.r != 2) {
      throw UsageError("--printed frames exist only for --n 4 --k 2 --r 2");
    }
    w = in::printed_gr24_witnesses();
  } else {
    w = in::delta_witnesses(a.k, a.n, a.r);
  }
  Json j;
  j["schema"] = kSchemaVersion;
  j["k"] = a.k;
  j["n"] = a.n;
  j["r"] = a.r;
  j["frames"] = a.printed ? "printed" : "constructed";
  for (const auto& [key, set] :
       {std::pair<const char*, const std::vector<in::Plane>*>{"curvature_max", &w.curvature_max},
        {"curvature_min", &w.curvature_min}}) {
    Json planes = Json::array();
    double sum = 0.0;
    for (const auto& [x, y] : *set) {
      const double kappa = in::sectional(x, y);
      sum += kappa;
      Json p;
      p["X"] = io::matrix_to_json(x.matrix().matrix());
      p["Y"] = io::matrix_to_json(y.matrix().matrix());
      p["sectional"] = kappa;
      planes.push_back(std::move(p));
    }
    Json s;
    s["planes"] = std::move(planes);
    s["sum"] = sum;
    j[key] = std::move(s);
  }
  if (a.json) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "delta witnesses on Gr(" << a.k << "," << a.n << "), r = " << a.r << " ("
      << j["frames"].get<std::string>() << ")\n";
  for (const char* key : {"curvature_max", "curvature_min"}) {
    out << key << ":\n";
    int idx = 1;
    for (const auto& p : j[key]["planes"]) {
      for (const char* v : {"X", "Y"}) {
        out << "  " << v << idx << " =\n";
        for (const auto& row : p[v]) {
          out << "   ";
          for (const auto& e : row) out << ' ' << format_double(e.get<double>());
          out << '\n';
        }
      }
      out << "  sectional(X" << idx << ",Y" << idx
          << ") = " << format_double(p["sectional"].get<double>()) << '\n';
      ++idx;
    }
    out << "  sum = " << format_double(j[key]["sum"].get<double>()) << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature of the Grassmannian in the involution model"};
  app.name("grasscurv");
  app.require_subcommand(1);

  SampleArgs point_args;
  SampleArgs tangent_args;
  SampleArgs normal_args;
  CLI::App* point = app.add_subcommand("point", "write a random point");
  add_sample_flags(point, point_args, false);
  CLI::App* tangent = app.add_subcommand("tangent", "write a random tangent vector");
  add_sample_flags(tangent, tangent_args, true);
  CLI::App* normal = app.add_subcommand("normal", "write a random normal vector");
  add_sample_flags(normal, normal_args, true);

  CurvArgs curv_args;
  CLI::App* curv = app.add_subcommand("curv", "evaluate one curvature quantity");
  curv->add_option("--name", curv_args.name, "quantity")
      ->required()
      ->check(CLI::IsMember(kCurvNames));
  curv->add_option("--in", curv_args.files, "input value files (point, tangent, normal)");
  curv->add_option("--n", curv_args.n, "ambient dimension (point-free quantities)");
  curv->add_option("--k", curv_args.k, "subspace dimension (point-free quantities)");
  curv->add_option("--r", curv_args.r, "number of planes (delta)");
  auto* json_flag = curv->add_flag("--json", curv_args.json, "JSON output");
  curv->add_flag("--table", curv_args.table, "aligned table output")->excludes(json_flag);
  curv->add_flag("--check", curv_args.check, "also evaluate the independent oracle");
  curv->add_flag("--stamp", curv_args.stamp, "record a timestamp in the manifest");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "curvature table with oracle residuals");
  table->add_option("--n", table_args.n)->capture_default_str();
  table->add_option("--k", table_args.k)->capture_default_str();
  table->add_option("--samples", table_args.samples)->capture_default_str();
  table->add_option("--seed", table_args.seed)->capture_default_str();
  table->add_flag("--json", table_args.json, "JSON output");
  table->add_flag("--stamp", table_args.stamp, "record a timestamp in the manifest");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--n", verify_args.n)->capture_default_str();
  verify->add_option("--k", verify_args.k)->capture_default_str();
  verify->add_option("--seed", verify_args.seed)->capture_default_str();
  verify->add_option("--tol", verify_args.tol, "finite-difference tolerance")
      ->capture_default_str();
  verify->add_flag("--quick", verify_args.quick, "fewer samples");
  verify->add_flag("--stamp", verify_args.stamp, "record a timestamp in the manifest");
  verify->add_option("--mutate", verify_args.mutate)
      ->check(CLI::IsMember({"sff-sign"}))
      ->group("");

  WitnessArgs witness_args;
  CLI::App* witness = app.add_subcommand("witness", "print delta-invariant witness frames");
  witness->add_option("kind", witness_args.kind)->required()->check(CLI::IsMember({"delta"}));
  witness->add_option("--n", witness_args.n)->capture_default_str();
  witness->add_option("--k", witness_args.k)->capture_default_str();
  witness->add_option("--r", witness_args.r)->capture_default_str();
  witness->add_flag("--printed", witness_args.printed, "the frames as printed for Gr(2,4)");
  witness->add_flag("--json", witness_args.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (point->parsed()) {
      Drawn d = draw_point(point_args);
      emit(out, point_args.out_path, io::to_json(d.p));
    } else if (tangent->parsed()) {
      Drawn d = draw_point(tangent_args);
      emit(out, tangent_args.out_path, io::to_json(tangent_random(d.p, d.rng)));
    } else if (normal->parsed()) {
      Drawn d = draw_point(normal_args);
      emit(out, normal_args.out_path, io::to_json(normal_random(d.p, d.rng)));
    } else if (curv->parsed()) {
      return cmd_curv(curv_args, argc, argv, out);
    } else if (table->parsed()) {
      return cmd_table(table_args, argc, argv, out);
    } else if (verify->parsed()) {
      return cmd_verify(verify_args, argc, argv, out, err);
    } else if (witness->parsed()) {
      return cmd_witness(witness_args, out);
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace grasscurv::cli
