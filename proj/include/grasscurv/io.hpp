#pragma once

// JSON value format: {"n": int, "k": int, "matrix": [[...], ...]} with
// row-major decimal floats. Tangent and normal values also carry the point
// they live at under "anchor".

#include <string>

#include <json.hpp>

#include "grasscurv/grassmann.hpp"

namespace grasscurv::io {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& a);
/// Throws ModelError unless `j` is a rectangular array of numbers.
Matrix matrix_from_json(const Json& j);

Json to_json(const GrassmannPoint& p);
Json to_json(const TangentVector& x);
Json to_json(const NormalVector& h);

GrassmannPoint point_from_json(const Json& j);
TangentVector tangent_from_json(const Json& j);
NormalVector normal_from_json(const Json& j);

/// Which kind of value a JSON document holds: "point", "tangent" or "normal".
/// Documents with an anchor are told apart by the commutation test.
std::string classify(const Json& j);

Json read_file(const std::string& path);
/// Writes `j` pretty-printed with a trailing newline.
void write_file(const std::string& path, const Json& j);

}  // namespace grasscurv::io
