#include "grasscurv/io.hpp"

#include <fstream>
#include <sstream>

namespace grasscurv::io {

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw ModelError("matrix: expected a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  Matrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ModelError("matrix: rows have different lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw ModelError("matrix: non-numeric entry");
      a(i, c) = v.get<double>();
    }
  }
  return a;
}

Json to_json(const GrassmannPoint& p) {
  Json j;
  j["n"] = p.n();
  j["k"] = p.k();
  j["matrix"] = matrix_to_json(p.matrix().matrix());
  return j;
}

Json to_json(const TangentVector& x) {
  Json j = to_json(x.anchor());
  j["matrix"] = matrix_to_json(x.matrix().matrix());
  j["anchor"] = to_json(x.anchor());
  return j;
}

Json to_json(const NormalVector& h) {
  Json j = to_json(h.anchor());
  j["matrix"] = matrix_to_json(h.matrix().matrix());
  j["anchor"] = to_json(h.anchor());
  return j;
}

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw ModelError(std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

SymMatrix square_field(const Json& j, int n) {
  if (!j.contains("matrix")) throw ModelError("missing field \"matrix\"");
  const Matrix a = matrix_from_json(j["matrix"]);
  if (a.rows() != n || a.cols() != n) {
    throw DimensionError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         ", expected " + std::to_string(n) + "x" + std::to_string(n));
  }
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > kShapeTolerance * std::max(1.0, a.norm())) {
    throw ModelError("matrix is not symmetric");
  }
  return SymMatrix(a);
}

GrassmannPoint anchor_of(const Json& j) {
  if (!j.contains("anchor")) throw ModelError("missing field \"anchor\"");
  const GrassmannPoint p = point_from_json(j["anchor"]);
  if (int_field(j, "n") != p.n() || int_field(j, "k") != p.k()) {
    throw ModelError("n/k disagree with the anchor");
  }
  return p;
}

}  // namespace

GrassmannPoint point_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int k = int_field(j, "k");
  if (n < 2 || k < 1 || k >= n) {
    throw DomainError("need 1 <= k < n, got k = " + std::to_string(k) + ", n = " +
                      std::to_string(n));
  }
  return point_from_matrix(square_field(j, n), k);
}

TangentVector tangent_from_json(const Json& j) {
  const GrassmannPoint p = anchor_of(j);
  return TangentVector::from_matrix(p, square_field(j, p.n()));
}

NormalVector normal_from_json(const Json& j) {
  const GrassmannPoint p = anchor_of(j);
  return NormalVector::from_matrix(p, square_field(j, p.n()));
}

std::string classify(const Json& j) {
  if (!j.is_object()) throw ModelError("expected a JSON object");
  if (!j.contains("anchor")) return "point";
  const GrassmannPoint p = anchor_of(j);
  const Matrix a = square_field(j, p.n()).matrix();
  const Matrix& q = p.matrix().matrix();
  const double scale = std::max(1.0, a.norm());
  if ((a * q + q * a).norm() <= kShapeTolerance * scale) return "tangent";
  if ((a * q - q * a).norm() <= kShapeTolerance * scale) return "normal";
  throw ModelError("value is neither tangent nor normal at its anchor");
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ModelError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace grasscurv::io
