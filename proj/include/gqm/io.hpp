#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gqm/algebra.hpp"
#include "gqm/groupoid.hpp"
#include "gqm/states.hpp"

namespace gqm::io {

using Json = nlohmann::ordered_json;

// Text and files.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Parses JSON; syntax errors become InvalidSpecError "source:line:col: ...".
Json parse_json(const std::string& text, const std::string& source);

/// 17 significant digits in scientific notation ("%.16e").
std::string format_number(double x);

/// Serializes with two-space indentation. Floating-point numbers use
/// format_number; integers are printed as integers. Output is a pure
/// function of the document, so repeated runs are byte-identical.
std::string dump(const Json& doc);

/// Comma-joined format_number values.
std::string csv_row(const std::vector<double>& values);

// Documents. Field errors are InvalidSpecError "source: /json/pointer: ...".

/// {"kind": "pair"|"graph"|"pair_times_group"|"explicit", "n", "edges",
/// "m", "tables": {"events", "transitions": [{source, target, label}],
/// "units", "inverse", "compose": [[left, right, result], ...]}}.
Json to_json(const GroupoidSpec& spec);
GroupoidSpec spec_from_json(const Json& doc, const std::string& source);
GroupoidPtr load_groupoid(const std::string& path);

Json complex_to_json(Complex z);
Json to_json(const ComplexVector& v);
/// Row-major [[[re, im], ...], ...].
Json to_json(const Operator& m);
Json to_json(const RealMatrix& m);
Json to_json(const ValidationReport& report, const FiniteGroupoid& g);

Operator operator_from_json(const Json& doc, const std::string& source, const std::string& path);

/// {"groupoid": <spec object or id string>, "coeffs": [[re, im], ...]}.
/// A spec object is built (or, when `bound` is given, checked for
/// structural equality against it). An id string refers to `bound`, which
/// must then be non-null.
Json element_to_json(const AlgebraElement& f);
Json element_to_json(const AlgebraElement& f, const std::string& groupoid_id);
AlgebraElement element_from_json(const Json& doc, const std::string& source, const GroupoidPtr& bound);
AlgebraElement load_element(const std::string& path, const GroupoidPtr& bound);

/// States use the element layout; the coefficients are the weights.
Json state_to_json(const State& rho);
State state_from_json(const Json& doc, const std::string& source, const GroupoidPtr& bound);

}  // namespace gqm::io
