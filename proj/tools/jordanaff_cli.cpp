// jordanaff command-line driver. Exit status: 0 when every requested check
// passes, 1 when a check fails, 2 on malformed input or usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jordanaff/calabi.hpp"
#include "jordanaff/catalog.hpp"
#include "jordanaff/hypersurface.hpp"
#include "jordanaff/io.hpp"
#include "jordanaff/jordan.hpp"
#include "jordanaff/triple.hpp"
#include "jordanaff/verify.hpp"

using namespace jordanaff;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

Mode default_mode() {
  const char* env = std::getenv("JORDANAFF_MODE");
  if (env == nullptr || std::string(env).empty() || std::string(env) == "rational") return Mode::kRational;
  if (std::string(env) == "float") return Mode::kFloat;
  throw AlgebraError(ErrorKind::kSchema, "JORDANAFF_MODE: expected rational or float, got '" + std::string(env) + "'");
}

std::vector<int> parse_signs(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "+" || tok == "+1" || tok == "1")
      out.push_back(1);
    else if (tok == "-" || tok == "-1")
      out.push_back(-1);
    else
      throw AlgebraError(ErrorKind::kSchema, "--" + flag + ": expected comma-separated +/- signs, got '" + tok + "'");
  }
  return out;
}

struct AlgebraSource {
  std::string alg_path;
  std::string family;
  std::size_t m{0};
  std::string gamma;
  std::string q;
  bool strict{false};

  void add_to(CLI::App* cmd, bool allow_alg = true) {
    if (allow_alg) cmd->add_option("--alg", alg_path, "Algebra JSON file");
    cmd->add_option("--family", family, "Catalog family (see 'catalog list')");
    cmd->add_option("--m", m, "Size parameter");
    cmd->add_option("--gamma", gamma, "Twist signs, e.g. +,-,+");
    cmd->add_option("--q", q, "Quadratic-factor signs, e.g. +,-");
    cmd->add_flag("--strict", strict, "Enforce classification size thresholds");
  }

  [[nodiscard]] FamilySpec spec() const {
    if (family.empty()) throw AlgebraError(ErrorKind::kSchema, "--family: required");
    const auto f = parse_family(family);
    if (!f) throw AlgebraError(ErrorKind::kSchema, "--family: unknown family '" + family + "'");
    FamilySpec s;
    s.family = *f;
    s.m = m;
    if (!gamma.empty()) s.gamma_signs = parse_signs(gamma, "gamma");
    if (!q.empty()) s.q_signature = parse_signs(q, "q");
    s.strict = strict;
    validate(s);
    return s;
  }

  [[nodiscard]] JordanAlgebra load(Mode mode) const {
    if (!alg_path.empty() && !family.empty())
      throw AlgebraError(ErrorKind::kSchema, "--alg/--family: give one, not both");
    if (alg_path.empty() && family.empty()) throw AlgebraError(ErrorKind::kSchema, "--alg or --family: required");
    JordanAlgebra J = alg_path.empty() ? build(spec()) : algebra_from_json(read_json_file(alg_path), alg_path);
    J.set_mode(mode);
    return J;
  }
};

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw AlgebraError(ErrorKind::kSchema, "--" + flag + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

int finish(const std::vector<VerificationReport>& reps, bool json) {
  bool pass = true;
  for (const auto& r : reps) pass = pass && r.pass();
  if (json) {
    std::cout << reports_to_json(reps).dump(2) << '\n';
  } else {
    for (const auto& r : reps) {
      for (const auto& c : r.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << r.target << " " << c.name << " max_residual=" << c.max_residual
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
      for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
    }
    std::cout << (pass ? "pass" : "FAIL") << '\n';
  }
  return pass ? 0 : kExitFail;
}

VerificationReport model_report(const HypersurfaceModel& model, Mode mode) {
  VerificationReport rep;
  rep.target = model.algebra.name();
  rep.mode = mode;
  rep.checks.push_back(symmetry_check(model));
  rep.checks.push_back(apolarity_check(model));
  if (model.gauss_ok) rep.checks.push_back(gauss_check(model));
  rep.checks.push_back(affine_normal_check(model));
  rep.checks.push_back(trace_form_check(model));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan algebras and equiaffine symmetric hypersurfaces"};
  app.require_subcommand(1);
  bool json = false;
  std::string mode_name;
  app.add_flag("--json", json, "Machine-readable report on stdout");
  app.add_option("--mode", mode_name, "rational or float (default: $JORDANAFF_MODE or rational)")
      ->check(CLI::IsMember({"rational", "float"}));

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Simple families");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List family names");
  auto* cat_build = catalog->add_subcommand("build", "Write a family's structure constants");
  AlgebraSource cat_src;
  std::string cat_out;
  cat_src.add_to(cat_build, false);
  cat_build->add_option("-o,--output", cat_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  std::string verify_kind;
  AlgebraSource ver_src;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::string verify_L1 = "-1";
  verify->add_option("kind", verify_kind, "jordan|semisimple|triple|pair|detformula|gauss")
      ->required()
      ->check(CLI::IsMember({"jordan", "semisimple", "triple", "pair", "detformula", "gauss"}));
  ver_src.add_to(verify);
  verify->add_option("--samples", samples, "Random samples per identity");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--L1", verify_L1, "Model constant for 'gauss'");

  // model
  auto* model = app.add_subcommand("model", "Hypersurface models");
  model->require_subcommand(1);
  auto* model_build = model->add_subcommand("build", "Build the hypersurface of an algebra");
  AlgebraSource mod_src;
  std::string L1_text, model_out, export_g, export_A;
  bool no_pair = false;
  mod_src.add_to(model_build);
  model_build->add_option("--L1", L1_text, "Nonzero rational")->required();
  model_build->add_option("-o,--output", model_out, "Output model summary (default stdout)");
  model_build->add_option("--export-g", export_g, "Write the metric as {n, g}");
  model_build->add_option("--export-A", export_A, "Write the cubic form as {n, A}");
  model_build->add_flag("--no-pair", no_pair, "Skip the symmetric pair");
  auto* model_sample = model->add_subcommand("sample", "Sample points on the hypersurface");
  std::string model_path, points_out;
  std::size_t count = 200;
  std::uint64_t sample_seed = 1;
  model_sample->add_option("--model", model_path, "Model summary JSON")->required();
  model_sample->add_option("--count", count, "Number of points");
  model_sample->add_option("--seed", sample_seed, "Random seed");
  model_sample->add_option("-o,--output", points_out, "CSV (or .json) output (default stdout)");

  // calabi
  auto* calabi = app.add_subcommand("calabi", "Calabi products");
  calabi->require_subcommand(1);
  auto* compose_cmd = calabi->add_subcommand("compose", "Compose factor models");
  std::string spec_path, compose_out;
  compose_cmd->add_option("--spec", spec_path, "CalabiSpec JSON")->required();
  compose_cmd->add_option("-o,--output", compose_out, "Output model summary (default stdout)");

  // reconstruct
  auto* recon = app.add_subcommand("reconstruct", "Algebra from (g, A, L1)");
  std::string g_path, A_path, recon_L1, recon_out;
  recon->add_option("--g", g_path, "Metric JSON")->required();
  recon->add_option("--A", A_path, "Cubic form JSON")->required();
  recon->add_option("--L1", recon_L1, "Nonzero rational")->required();
  recon->add_option("-o,--output", recon_out, "Output algebra JSON (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    const Mode mode = mode_name.empty() ? default_mode() : (mode_name == "float" ? Mode::kFloat : Mode::kRational);

    if (cat_list->parsed()) {
      if (json) {
        Json arr = Json::array();
        for (const auto& f : family_table())
          arr.push_back({{"family", f.cli_name}, {"display", f.display}, {"has_m", f.has_m},
                         {"twistable", f.twistable}, {"complex", f.complex}});
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& f : family_table())
          std::cout << f.cli_name << '\t' << f.display << (f.has_m ? "\t--m" : "") << (f.twistable ? "\t--gamma" : "")
                    << '\n';
      }
      return 0;
    }

    if (cat_build->parsed()) {
      JordanAlgebra J = build(cat_src.spec());
      J.set_mode(mode);
      emit(cat_out, serialize_algebra(J));
      return 0;
    }

    if (verify->parsed()) {
      std::vector<VerificationReport> reps;
      if (verify_kind == "detformula") {
        reps.push_back(verify_det_formula(ver_src.spec(), samples, seed));
        return finish(reps, json);
      }
      const JordanAlgebra J = ver_src.load(mode);
      if (verify_kind == "jordan") {
        reps.push_back(check_jordan(J, seed, samples));
      } else if (verify_kind == "semisimple") {
        const SemisimpleResult s = is_semisimple(J);
        VerificationReport rep;
        rep.target = J.name();
        rep.mode = mode;
        rep.checks.push_back({"semisimple", s.semisimple, 0.0, 0, seed, ""});
        rep.notes.push_back("trace form signature (+" + std::to_string(s.signature.positive) + ", -" +
                            std::to_string(s.signature.negative) + ", 0:" + std::to_string(s.signature.zero) +
                            "), det " + s.gram_det.str());
        reps.push_back(std::move(rep));
      } else if (verify_kind == "triple") {
        reps.push_back(check_triple(J, samples, seed));
        reps.push_back(check_operator_identities(J, samples, seed));
      } else if (verify_kind == "pair") {
        const SymmetricPair pair = restricted_pair(J);
        reps.push_back(check_pair(pair, J, seed));
        reps.push_back(check_k_action(J, pair, samples, seed));
      } else {
        ModelOptions opts;
        opts.compute_pair = false;
        const HypersurfaceModel m = build_model(J, rational_arg(verify_L1, "L1"), opts);
        reps.push_back(model_report(m, mode));
      }
      for (auto& r : reps) r.mode = mode;
      return finish(reps, json);
    }

    if (model_build->parsed()) {
      const JordanAlgebra J = mod_src.load(mode);
      ModelOptions opts;
      opts.compute_pair = !no_pair;
      const HypersurfaceModel m = build_model(J, rational_arg(L1_text, "L1"), opts);
      if (!json || !model_out.empty()) emit(model_out, model_to_json(m).dump(2) + "\n");
      if (!export_g.empty()) write_text_file(export_g, metric_to_json(m).dump(2) + "\n");
      if (!export_A.empty()) write_text_file(export_A, cubic_form_to_json(m).dump() + "\n");
      if (json) return finish({model_report(m, mode)}, true);
      return (m.symmetric_ok && m.apolarity_ok && m.gauss_ok.value_or(true)) ? 0 : kExitFail;
    }

    if (model_sample->parsed()) {
      const HypersurfaceModel m = model_from_json(read_json_file(model_path), model_path);
      const auto pts = sample_points(m, count, sample_seed);
      std::ostringstream os;
      if (points_out.size() > 5 && points_out.ends_with(".json"))
        os << points_to_json(pts).dump() << '\n';
      else
        write_points_csv(os, pts);
      if (!json || !points_out.empty()) emit(points_out, os.str());
      VerificationReport rep;
      rep.target = m.algebra.name();
      rep.mode = mode;
      rep.checks.push_back(level_set_check(m, count, sample_seed));
      if (json) return finish({rep}, true);
      if (!rep.pass()) std::cerr << "level_set: max residual " << rep.checks[0].max_residual << '\n';
      return rep.pass() ? 0 : kExitFail;
    }

    if (compose_cmd->parsed()) {
      const CalabiSpec spec = calabi_spec_from_json(read_json_file(spec_path), spec_path);
      const CalabiModel cm = compose(spec);
      Json j = model_to_json(cm.model);
      j["calabi"] = {{"offsets", cm.offsets}, {"dims", cm.dims}, {"C_factor", cm.C_factor}, {"c", cm.c}};
      emit(compose_out, j.dump(2) + "\n");
      const bool ok = cm.model.symmetric_ok && cm.model.apolarity_ok && cm.model.gauss_ok.value_or(true);
      return ok ? 0 : kExitFail;
    }

    if (recon->parsed()) {
      const Matrix<Rational> g = metric_from_json(read_json_file(g_path), g_path);
      const std::vector<Rational> A = cubic_form_from_json(read_json_file(A_path), g.rows(), A_path);
      const Reconstruction r = reconstruct_algebra(g.rows(), g, A, rational_arg(recon_L1, "L1"));
      JordanAlgebra out = r.algebra;
      out.set_mode(mode);
      emit(recon_out, serialize_algebra(out));
      VerificationReport rep = r.report;
      rep.mode = mode;
      if (json) std::cout << reports_to_json({rep}).dump(2) << '\n';
      return (r.jordan && r.semisimple) ? 0 : kExitFail;
    }
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
