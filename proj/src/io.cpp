#include "jordanaff/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace jordanaff {

void schema_error(const std::string& source, const std::string& field, const std::string& msg) {
  throw AlgebraError(ErrorKind::kSchema, source + ": " + field + ": " + msg);
}

Rational rational_from_json(const Json& v, const std::string& source, const std::string& field) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_float()) return Rational::parse(v.dump());
  } catch (const std::exception& e) {
    schema_error(source, field, e.what());
  }
  schema_error(source, field, "expected a rational as \"p/q\" or an integer");
}

Json rational_to_json(const Rational& r) { return r.str(); }

namespace {

Json vec_to_json(const Vec<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

Vec<Rational> vec_from_json(const Json& j, std::size_t n, const std::string& source, const std::string& field) {
  if (!j.is_array()) schema_error(source, field, "expected an array");
  if (j.size() != n) schema_error(source, field, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  Vec<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational_from_json(j[i], source, field + "[" + std::to_string(i) + "]"));
  return v;
}

const Json& require(const Json& j, const char* key, const std::string& source, const std::string& prefix = "") {
  if (!j.is_object()) schema_error(source, prefix.empty() ? "<root>" : prefix, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(source, prefix + key, "missing");
  return *it;
}

std::size_t size_from_json(const Json& v, const std::string& source, const std::string& field) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) schema_error(source, field, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<int> signs_from_json(const Json& v, const std::string& source, const std::string& field) {
  if (!v.is_array()) schema_error(source, field, "expected an array of +1/-1");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || (v[i].get<int>() != 1 && v[i].get<int>() != -1))
      schema_error(source, field + "[" + std::to_string(i) + "]", "expected +1 or -1");
    out.push_back(v[i].get<int>());
  }
  return out;
}

}  // namespace

Json algebra_to_json(const JordanAlgebra& J) {
  Json j;
  j["name"] = J.name();
  j["dim"] = J.dim();
  j["mode"] = to_string(J.mode());
  j["family"] = J.family();
  j["labels"] = J.labels();
  j["unity"] = J.unity() ? vec_to_json(*J.unity()) : Json(nullptr);
  Json c = Json::array();
  for (const auto& plane : J.tensor()) {
    Json p = Json::array();
    for (const auto& row : plane) p.push_back(vec_to_json(row));
    c.push_back(std::move(p));
  }
  j["c"] = std::move(c);
  return j;
}

JordanAlgebra algebra_from_json(const Json& j, const std::string& source) {
  const std::string name = [&] {
    const Json& v = require(j, "name", source);
    if (!v.is_string()) schema_error(source, "name", "expected a string");
    return v.get<std::string>();
  }();
  const std::size_t d = size_from_json(require(j, "dim", source), source, "dim");
  if (d == 0) schema_error(source, "dim", "must be positive");
  Mode mode = Mode::kRational;
  {
    const Json& v = require(j, "mode", source);
    if (v == "rational")
      mode = Mode::kRational;
    else if (v == "float")
      mode = Mode::kFloat;
    else
      schema_error(source, "mode", "expected \"rational\" or \"float\"");
  }
  const Json& cj = require(j, "c", source);
  if (!cj.is_array() || cj.size() != d) schema_error(source, "c", "expected " + std::to_string(d) + " planes");
  std::vector<std::vector<Vec<Rational>>> c(d, std::vector<Vec<Rational>>(d));
  for (std::size_t a = 0; a < d; ++a) {
    const std::string fa = "c[" + std::to_string(a) + "]";
    if (!cj[a].is_array() || cj[a].size() != d) schema_error(source, fa, "expected " + std::to_string(d) + " rows");
    for (std::size_t b = 0; b < d; ++b) c[a][b] = vec_from_json(cj[a][b], d, source, fa + "[" + std::to_string(b) + "]");
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k)
        if (c[a][b][k] != c[b][a][k])
          schema_error(source, "c[" + std::to_string(a) + "][" + std::to_string(b) + "][" + std::to_string(k) + "]",
                       "tensor not symmetric: differs from c[" + std::to_string(b) + "][" + std::to_string(a) + "][" +
                           std::to_string(k) + "]");
  std::optional<Vec<Rational>> unity;
  if (auto it = j.find("unity"); it != j.end() && !it->is_null()) unity = vec_from_json(*it, d, source, "unity");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array() || it->size() != d) schema_error(source, "labels", "expected " + std::to_string(d) + " strings");
    for (const auto& l : *it) {
      if (!l.is_string()) schema_error(source, "labels", "expected strings");
      labels.push_back(l.get<std::string>());
    }
  }
  JordanAlgebra J = JordanAlgebra::from_tensor(name, c, std::nullopt, mode, std::move(labels));
  if (unity) {
    if (t_operator<Rational>(J, *unity) != Matrix<Rational>::identity(d))
      schema_error(source, "unity", "T_e is not the identity");
    J.set_unity(std::move(unity));
  }
  if (auto it = j.find("family"); it != j.end() && it->is_string()) J.set_family(it->get<std::string>());
  return J;
}

std::string serialize_algebra(const JordanAlgebra& J) {
  const Json j = algebra_to_json(J);
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) os << ",\n";
    first = false;
    os << "  " << Json(key).dump() << ": ";
    if (key != "c") {
      os << value.dump();
      continue;
    }
    os << "[\n";
    for (std::size_t a = 0; a < value.size(); ++a) os << "    " << value[a].dump() << (a + 1 < value.size() ? ",\n" : "\n");
    os << "  ]";
  }
  os << "\n}\n";
  return os.str();
}

JordanAlgebra deserialize_algebra(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error(source, "<root>", std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(j, source);
}

Json report_to_json(const VerificationReport& rep) {
  Json j;
  j["target"] = rep.target;
  j["mode"] = to_string(rep.mode);
  j["pass"] = rep.pass();
  j["elapsed_ms"] = rep.elapsed_ms;
  Json checks = Json::array();
  Json results = Json::object();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["max_residual"] = c.max_residual;
    cj["samples"] = c.samples;
    cj["seed"] = c.seed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
    results[c.name] = Json{{"pass", c.pass}, {"max_residual", c.max_residual}};
  }
  j["checks"] = std::move(checks);
  j["results"] = std::move(results);
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

Json reports_to_json(const std::vector<VerificationReport>& reps) {
  Json j;
  bool pass = true;
  Json arr = Json::array();
  for (const auto& r : reps) {
    pass = pass && r.pass();
    arr.push_back(report_to_json(r));
  }
  j["pass"] = pass;
  j["reports"] = std::move(arr);
  return j;
}

FamilySpec family_spec_from_json(const Json& j, const std::string& source, const std::string& field) {
  const Json& fam = require(j, "family", source, field + ".");
  if (!fam.is_string()) schema_error(source, field + ".family", "expected a string");
  const auto f = parse_family(fam.get<std::string>());
  if (!f) schema_error(source, field + ".family", "unknown family '" + fam.get<std::string>() + "'");
  FamilySpec spec;
  spec.family = *f;
  const FamilyInfo& info = family_info(*f);
  const Json* params = &j;
  if (auto it = j.find("params"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) schema_error(source, field + ".params", "expected an object");
    params = &*it;
  }
  const std::string pf = params == &j ? field + "." : field + ".params.";
  if (auto it = params->find("m"); it != params->end()) spec.m = size_from_json(*it, source, pf + "m");
  else if (info.has_m) schema_error(source, pf + "m", "missing");
  if (!info.has_m && spec.m == 0 && (*f == Family::kOctonionHermitian3 || *f == Family::kSplitOctonionHermitian3R ||
                                      *f == Family::kSplitOctonionHermitian3C))
    spec.m = 3;
  if (auto it = params->find("gamma"); it != params->end()) spec.gamma_signs = signs_from_json(*it, source, pf + "gamma");
  if (auto it = params->find("q"); it != params->end()) spec.q_signature = signs_from_json(*it, source, pf + "q");
  if (auto it = params->find("strict"); it != params->end()) spec.strict = it->get<bool>();
  try {
    validate(spec);
  } catch (const AlgebraError& e) {
    schema_error(source, field, e.what());
  }
  return spec;
}

Json model_to_json(const HypersurfaceModel& m) {
  Json j;
  j["family"] = m.family.empty() ? m.algebra.name() : m.family;
  j["n"] = m.n();
  j["L1"] = m.L1.to_double();
  j["L1_exact"] = m.L1.str();
  j["C"] = m.C;
  j["k_dim"] = m.pair ? Json(m.pair->k.dim()) : Json(nullptr);
  j["p_dim"] = m.pair ? Json(m.pair->p_ops.size()) : Json(nullptr);
  j["apolarity_ok"] = m.apolarity_ok;
  j["gauss_ok"] = m.gauss_ok ? Json(*m.gauss_ok) : Json(nullptr);
  j["symmetric_ok"] = m.symmetric_ok;
  j["algebra"] = algebra_to_json(m.algebra);
  return j;
}

HypersurfaceModel model_from_json(const Json& j, const std::string& source) {
  const JordanAlgebra J = algebra_from_json(require(j, "algebra", source), source + ":algebra");
  Rational L1 = j.contains("L1_exact") ? rational_from_json(j["L1_exact"], source, "L1_exact")
                                        : rational_from_json(require(j, "L1", source), source, "L1");
  if (L1.is_zero()) schema_error(source, "L1", "must be nonzero");
  ModelOptions opts;
  opts.compute_pair = false;
  opts.check_gauss = false;
  return build_model(J, L1, opts);
}

Json metric_to_json(const HypersurfaceModel& m) {
  Json g = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) { const auto r = m.g.row(i); g.push_back(vec_to_json(Vec<Rational>(r.begin(), r.end()))); }
  return Json{{"n", m.n()}, {"g", std::move(g)}};
}

Json cubic_form_to_json(const HypersurfaceModel& m) {
  const std::size_t n = m.n();
  Json a = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json p = Json::array();
    for (std::size_t jdx = 0; jdx < n; ++jdx) {
      Json r = Json::array();
      for (std::size_t k = 0; k < n; ++k) r.push_back(rational_to_json(m.A_at(i, jdx, k)));
      p.push_back(std::move(r));
    }
    a.push_back(std::move(p));
  }
  return Json{{"n", n}, {"A", std::move(a)}};
}

Matrix<Rational> metric_from_json(const Json& j, const std::string& source) {
  const Json& g = j.is_object() ? require(j, "g", source) : j;
  if (!g.is_array()) schema_error(source, "g", "expected an n x n array");
  const std::size_t n = g.size();
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<Rational> row = vec_from_json(g[i], n, source, "g[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = row[k];
  }
  return m;
}

std::vector<Rational> cubic_form_from_json(const Json& j, std::size_t n, const std::string& source) {
  const Json& a = j.is_object() ? require(j, "A", source) : j;
  if (!a.is_array() || a.size() != n) schema_error(source, "A", "expected an n x n x n array with n = " + std::to_string(n));
  std::vector<Rational> out;
  out.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string fi = "A[" + std::to_string(i) + "]";
    if (!a[i].is_array() || a[i].size() != n) schema_error(source, fi, "expected " + std::to_string(n) + " rows");
    for (std::size_t k = 0; k < n; ++k) {
      const Vec<Rational> row = vec_from_json(a[i][k], n, source, fi + "[" + std::to_string(k) + "]");
      out.insert(out.end(), row.begin(), row.end());
    }
  }
  return out;
}

CalabiSpec calabi_spec_from_json(const Json& j, const std::string& source) {
  CalabiSpec spec;
  spec.L1 = rational_from_json(require(j, "L1", source), source, "L1");
  if (spec.L1.is_zero()) schema_error(source, "L1", "must be nonzero");
  const Json& fs = require(j, "factors", source);
  if (!fs.is_array() || fs.empty()) schema_error(source, "factors", "expected a nonempty array");
  for (std::size_t a = 0; a < fs.size(); ++a) {
    const std::string field = "factors[" + std::to_string(a) + "]";
    const FamilySpec fspec = family_spec_from_json(fs[a], source, field);
    const Rational L1 = rational_from_json(require(fs[a], "L1", source, field + "."), source, field + ".L1");
    if (L1.is_zero()) schema_error(source, field + ".L1", "must be nonzero");
    spec.factors.push_back({build(fspec), L1});
  }
  return spec;
}

void write_points_csv(std::ostream& os, const std::vector<Vec<double>>& points) {
  os << std::setprecision(17);
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << '\n';
  }
}

Json points_to_json(const std::vector<Vec<double>>& points) {
  Json a = Json::array();
  for (const auto& p : points) a.push_back(p);
  return a;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_error(path, "<file>", "cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    schema_error(path, "<root>", std::string("invalid JSON: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw AlgebraError(ErrorKind::kSchema, path + ": <file>: cannot write");
  out << text;
}

}  // namespace jordanaff
