#pragma once

// File formats. Rationals cross the file boundary as "p/q" strings (integers
// as "p"); errors name the source and the offending field.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "jordanaff/calabi.hpp"
#include "jordanaff/catalog.hpp"
#include "jordanaff/hypersurface.hpp"
#include "jordanaff/jordan.hpp"
#include "jordanaff/report.hpp"

namespace jordanaff {

using Json = nlohmann::ordered_json;

/// kSchema with "source: field: message".
[[noreturn]] void schema_error(const std::string& source, const std::string& field, const std::string& msg);

Rational rational_from_json(const Json& v, const std::string& source, const std::string& field);
Json rational_to_json(const Rational& r);

// Algebra: {"name", "dim", "mode", "family", "labels", "unity", "c"}.
Json algebra_to_json(const JordanAlgebra& J);
JordanAlgebra algebra_from_json(const Json& j, const std::string& source);
/// Deterministic text; serialize(deserialize(serialize(J))) is byte-identical.
std::string serialize_algebra(const JordanAlgebra& J);
JordanAlgebra deserialize_algebra(const std::string& text, const std::string& source = "<string>");

Json report_to_json(const VerificationReport& rep);
/// Several reports under one key each, plus an overall "pass".
Json reports_to_json(const std::vector<VerificationReport>& reps);

FamilySpec family_spec_from_json(const Json& j, const std::string& source, const std::string& field);

// Model summary: {family, n, L1, C, k_dim, p_dim, apolarity_ok, gauss_ok} plus
// the algebra, so a summary file can be reloaded for sampling.
Json model_to_json(const HypersurfaceModel& model);
HypersurfaceModel model_from_json(const Json& j, const std::string& source);

/// {"n", "g": [[...]]} and {"n", "A": [[[...]]]}; bare arrays are accepted on input.
Json metric_to_json(const HypersurfaceModel& model);
Json cubic_form_to_json(const HypersurfaceModel& model);
Matrix<Rational> metric_from_json(const Json& j, const std::string& source);
std::vector<Rational> cubic_form_from_json(const Json& j, std::size_t n, const std::string& source);

/// {"factors": [{"family", "params": {"m", "gamma", "q"}, "L1"}], "L1"}.
CalabiSpec calabi_spec_from_json(const Json& j, const std::string& source);

/// One row per point, 17 significant digits.
void write_points_csv(std::ostream& os, const std::vector<Vec<double>>& points);
Json points_to_json(const std::vector<Vec<double>>& points);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace jordanaff
