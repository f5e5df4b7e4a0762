#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "beztate/bezoutian.hpp"
#include "beztate/exterior.hpp"
#include "beztate/koszul.hpp"
#include "beztate/matrix.hpp"
#include "beztate/poly.hpp"
#include "beztate/report.hpp"
#include "beztate/tate.hpp"

namespace beztate {

using Json = nlohmann::json;

// Every exact number travels as a decimal string ("num" or "num/den").
// Objects are written with sorted keys, so dumps are byte-stable.

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j, const Field& field);

Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j, const Field& field);

Json bipolynomial_to_json(const BiPolynomial& f);
BiPolynomial bipolynomial_from_json(const Json& j, const Field& field);

Json wedge_to_json(const WedgeIndex& w);
WedgeIndex wedge_from_json(const Json& j);

/// Accepts a bare array of polynomials or an object with a "forms" array.
std::vector<Polynomial> forms_from_json(const Json& j, const Field& field);
Json forms_to_json(const std::vector<Polynomial>& forms);

Json bezout_data_to_json(const BezoutData& b);

/// Durations are omitted unless requested: they are the only
/// non-reproducible part of a report.
Json report_to_json(const Report& r, bool with_timing = false);

Json window_to_json(const TateWindow& w);
TateWindow window_from_json(const Json& j);

Json syzygy_space_to_json(const SyzygySpace& s);

Json read_json_file(const std::string& path);
/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace beztate
