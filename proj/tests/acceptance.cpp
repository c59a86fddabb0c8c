// Acceptance gate: one PASS/FAIL line per criterion AC1..AC11.
// Usage: acceptance [AC1 AC4 ...]   (no arguments runs all)

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jordanaff/calabi.hpp"
#include "jordanaff/catalog.hpp"
#include "jordanaff/hypersurface.hpp"
#include "jordanaff/jordan.hpp"
#include "jordanaff/triple.hpp"
#include "jordanaff/verify.hpp"

using namespace jordanaff;

namespace {

constexpr std::uint64_t kSeed = 20260;
constexpr std::size_t kStructureSamples = 100;
constexpr std::size_t kLevelPoints = 200;
constexpr double kLevelTol = 1e-8;
constexpr double kDetRelTol = 1e-9;
constexpr double kMinOrder = 0.99;
constexpr double kAc1Budget = 300.0;
const std::vector<Rational> kL1s = {Rational(-1), Rational(1), Rational(2)};

struct Entry {
  FamilySpec spec;
  JordanAlgebra J;
};

struct Outcome {
  bool pass{true};
  std::string summary;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 20) failures.push_back(what);
  }
  /// Exact criteria: the check must pass with residual exactly zero.
  void require_exact(const Check& c, const std::string& where, double& worst) {
    worst = std::max(worst, c.max_residual);
    if (!c.pass || c.max_residual != 0.0)
      fail(where + " " + c.name + " residual " + std::to_string(c.max_residual) +
           (c.detail.empty() ? "" : " at " + c.detail));
  }
  void require_exact(const VerificationReport& rep, const std::string& where, double& worst) {
    for (const auto& c : rep.checks) require_exact(c, where, worst);
  }
};

FamilySpec twisted(Family f, std::size_t m, std::vector<int> gamma) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  s.gamma_signs = std::move(gamma);
  return s;
}

std::vector<Entry>& algebras() {
  static std::vector<Entry> out = [] {
    std::vector<Entry> v;
    std::vector<FamilySpec> specs = desk_specs();
    specs.push_back(twisted(Family::kSymmetricR, 3, {1, -1, 1}));
    specs.push_back(twisted(Family::kHermitianC, 3, {1, 1, -1}));
    specs.push_back(twisted(Family::kHermitianH, 2, {1, -1}));
    specs.push_back(twisted(Family::kOctonionHermitian3, 3, {1, -1, 1}));
    for (const auto& s : specs) v.push_back({s, build(s)});
    return v;
  }();
  return out;
}

std::string key(const Entry& e) { return e.spec.str(); }

/// Models without the symmetric pair, one per (algebra, L1).
const HypersurfaceModel& model_for(const Entry& e, const Rational& L1) {
  static std::map<std::string, std::unique_ptr<HypersurfaceModel>> cache;
  const std::string k = key(e) + "|" + L1.str();
  auto it = cache.find(k);
  if (it == cache.end()) {
    ModelOptions opts;
    opts.compute_pair = false;
    opts.check_gauss = false;
    it = cache.emplace(k, std::make_unique<HypersurfaceModel>(build_model(e.J, L1, opts))).first;
  }
  return *it->second;
}

const SymmetricPair& pair_for(const Entry& e) {
  static std::map<std::string, std::unique_ptr<SymmetricPair>> cache;
  auto it = cache.find(key(e));
  if (it == cache.end()) it = cache.emplace(key(e), std::make_unique<SymmetricPair>(restricted_pair(e.J))).first;
  return *it->second;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

Outcome ac1() {
  Outcome o;
  std::set<Family> seen;
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& e : algebras()) {
    seen.insert(e.spec.family);
    o.require_exact(check_jordan(e.J, kSeed, 5), key(e), worst);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (seen.size() != family_table().size() || seen.size() != 17) o.fail("families covered: " + std::to_string(seen.size()));
  if (secs >= kAc1Budget) o.fail("runtime " + fmt(secs) + "s exceeds budget");
  o.summary = std::to_string(algebras().size()) + " algebras over " + std::to_string(seen.size()) +
              " families, max residual " + fmt(worst) + ", " + fmt(secs) + "s";
  return o;
}

Outcome ac2() {
  Outcome o;
  std::size_t audited = 0, discrepancies = 0;
  double worst = 0.0;
  for (const auto& e : algebras()) {
    const VerificationReport rep = verify_det_formula(e.spec, 20, kSeed);
    for (const auto& c : rep.checks) {
      worst = std::max(worst, c.max_residual);
      if (!c.pass) o.fail(key(e) + " " + c.name + " residual " + fmt(c.max_residual));
      // Polynomial forms are exact; the others carry the relative tolerance.
      if (c.name == "det_formula" && c.max_residual > kDetRelTol) o.fail(key(e) + " residual above tolerance");
    }
    for (const auto& n : rep.notes) {
      if (n.rfind("table audit", 0) != 0) continue;
      ++audited;
      if (n.find("matches literally") == std::string::npos) {
        ++discrepancies;
        std::cout << "  audit: " << n << '\n';
      }
    }
  }
  if (audited < algebras().size()) o.fail("audit notes missing");
  o.summary = std::to_string(algebras().size()) + " algebras, max residual " + fmt(worst) + ", " +
              std::to_string(discrepancies) + " published-table discrepancies reported";
  return o;
}

Outcome ac3() {
  Outcome o;
  double worst = 0.0;
  std::size_t models = 0;
  for (const auto& e : algebras())
    for (const auto& L1 : kL1s) {
      o.require_exact(trace_form_check(model_for(e, L1)), key(e) + " L1=" + L1.str(), worst);
      ++models;
    }
  o.summary = std::to_string(models) + " models, max residual " + fmt(worst);
  return o;
}

Outcome ac4() {
  Outcome o;
  double worst = 0.0;
  for (const auto& e : algebras()) {
    o.require_exact(check_operator_identities(e.J, kStructureSamples, kSeed), key(e), worst);
    const VerificationReport tr = check_triple(e.J, kStructureSamples, kSeed);
    o.require_exact(tr, key(e), worst);
    o.require_exact(check_k_action(e.J, pair_for(e), kStructureSamples, kSeed), key(e), worst);
    for (const auto& c : tr.checks)
      if (c.samples < kStructureSamples) o.fail(key(e) + " " + c.name + " ran on fewer samples");
  }
  o.summary = std::to_string(algebras().size()) + " algebras x " + std::to_string(kStructureSamples) +
              " samples, max residual " + fmt(worst);
  return o;
}

Outcome ac5() {
  Outcome o;
  double worst = 0.0;
  for (const auto& e : algebras()) o.require_exact(check_pair(pair_for(e), e.J, kSeed), key(e), worst);
  o.summary = std::to_string(algebras().size()) + " symmetric pairs, max rank residual " + fmt(worst);
  return o;
}

Outcome ac6() {
  Outcome o;
  double worst = 0.0;
  std::size_t models = 0;
  for (const auto& e : algebras())
    for (const auto& L1 : kL1s) {
      const HypersurfaceModel& m = model_for(e, L1);
      o.require_exact(gauss_check(m), key(e) + " L1=" + L1.str(), worst);
      ++models;
    }
  o.summary = std::to_string(models) + " models, all basis triples, max residual " + fmt(worst);
  return o;
}

Outcome ac7() {
  Outcome o;
  double worst = 0.0;
  std::size_t models = 0;
  for (const auto& e : algebras())
    for (const auto& L1 : kL1s) {
      const HypersurfaceModel& m = model_for(e, L1);
      o.require_exact(symmetry_check(m), key(e) + " L1=" + L1.str(), worst);
      o.require_exact(apolarity_check(m), key(e) + " L1=" + L1.str(), worst);
      ++models;
    }
  o.summary = std::to_string(models) + " models, max residual " + fmt(worst);
  return o;
}

Outcome ac8() {
  Outcome o;
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& e : algebras()) {
    o.require_exact(roundtrip_check(model_for(e, Rational(-1))), key(e), worst);
    ++count;
  }
  std::vector<const Entry*> small;
  for (const auto& e : algebras())
    if (e.J.dim() <= 10) small.push_back(&e);
  std::mt19937_64 rng(kSeed);
  for (int k = 0; k < 3; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    const std::size_t r = 2 + static_cast<std::size_t>(k % 2);
    std::vector<JordanAlgebra> parts;
    std::string name;
    for (std::size_t a = 0; a < r; ++a) {
      const Entry* e = small[pick(rng)];
      parts.push_back(e->J);
      name += (a ? "+" : "") + key(*e);
    }
    const JordanAlgebra sum = direct_sum(parts);
    ModelOptions opts;
    opts.compute_pair = false;
    opts.check_gauss = false;
    const Rational L1(static_cast<std::int64_t>(k) - 1 == 0 ? 2 : static_cast<std::int64_t>(k) - 1);
    o.require_exact(roundtrip_check(build_model(sum, L1, opts)), name, worst);
    std::cout << "  direct sum " << name << " (dim " << sum.dim() << ", L1=" << L1.str() << ")\n";
    ++count;
  }
  o.summary = std::to_string(count) + " roundtrips, max residual " + fmt(worst);
  return o;
}

Outcome ac9() {
  Outcome o;
  double worst_level = 0.0, worst_normal = 0.0;
  std::size_t models = 0;
  for (const auto& e : algebras())
    for (const auto& L1 : kL1s) {
      const HypersurfaceModel& m = model_for(e, L1);
      const Check lv = level_set_check(m, kLevelPoints, kSeed);
      worst_level = std::max(worst_level, lv.max_residual);
      if (!lv.pass || lv.max_residual > kLevelTol || lv.samples < kLevelPoints)
        o.fail(key(e) + " L1=" + L1.str() + " level residual " + fmt(lv.max_residual));
      o.require_exact(affine_normal_check(m), key(e) + " L1=" + L1.str(), worst_normal);
      ++models;
    }
  o.summary = std::to_string(models) + " models x " + std::to_string(kLevelPoints) + " points, max level residual " +
              fmt(worst_level) + ", affine normal residual " + fmt(worst_normal);
  return o;
}

/// Scale constant written out independently of the library.
double expected_C(std::size_t n, double L1) {
  const double np1 = static_cast<double>(n) + 1.0;
  return (L1 > 0 ? -1.0 : 1.0) * std::sqrt(np1) / std::pow(np1 * std::abs(L1), (np1 + 1.0) / 2.0);
}

CalabiSpec make_spec(const std::vector<std::pair<FamilySpec, Rational>>& factors, const Rational& L1) {
  CalabiSpec s;
  s.L1 = L1;
  for (const auto& [f, l] : factors) s.factors.push_back({build(f), l});
  return s;
}

FamilySpec plain(Family f, std::size_t m = 0) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  return s;
}

Outcome ac10() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> normal(0.0, 0.4);
  FamilySpec q3 = plain(Family::kQuadraticFactor, 3);
  q3.q_signature = {1, -1};
  const std::vector<CalabiSpec> specs = {
      make_spec({{plain(Family::kReals), Rational(-1)}, {plain(Family::kReals), Rational(2)}}, Rational(-1)),
      make_spec({{plain(Family::kComplexField), Rational(1)}, {plain(Family::kSymmetricR, 2), Rational(-1)}},
                Rational(2)),
      make_spec({{q3, Rational(-1)}, {plain(Family::kReals), Rational(1)}, {plain(Family::kHermitianC, 2), Rational(2)}},
                Rational(-1)),
  };
  double worst_level = 0.0;
  for (const auto& spec : specs) {
    const CalabiModel cm = compose(spec);
    std::vector<JordanAlgebra> parts;
    for (const auto& f : spec.factors) parts.push_back(f.algebra);
    const HypersurfaceModel direct = build_model(direct_sum(parts), spec.L1);
    const std::string name = cm.model.algebra.name();
    if (cm.model.algebra.tensor() != direct.algebra.tensor() || cm.model.e != direct.e || !(cm.model.g == direct.g) ||
        cm.model.A != direct.A)
      o.fail(name + ": compose differs from build_model(direct_sum)");
    if (!cm.model.gauss_ok.value_or(false) || !cm.model.apolarity_ok) o.fail(name + ": composed model checks");

    std::vector<std::vector<Vec<double>>> fpts;
    for (const auto& f : spec.factors) {
      ModelOptions opts;
      opts.compute_pair = false;
      opts.check_gauss = false;
      fpts.push_back(sample_points(build_model(f.algebra, f.L1, opts), kLevelPoints, rng()));
    }
    const std::size_t r = spec.factors.size();
    for (std::size_t s = 0; s < kLevelPoints; ++s) {
      std::vector<double> t(r);
      double acc = 0.0;
      for (std::size_t a = 0; a + 1 < r; ++a) {
        t[a] = normal(rng);
        acc += static_cast<double>(cm.dims[a]) * t[a];
      }
      t[r - 1] = -acc / static_cast<double>(cm.dims[r - 1]);
      std::vector<Vec<double>> pts;
      for (std::size_t a = 0; a < r; ++a) pts.push_back(fpts[a][s]);
      const double res = std::abs(level_residual(cm.model, compose_point(cm, t, pts)));
      worst_level = std::max(worst_level, res);
      if (!(res <= kLevelTol)) o.fail(name + ": composed point " + std::to_string(s) + " residual " + fmt(res));
    }
  }

  // R + R: every composed point lies on u1 u2 = C^2.
  double worst_hyp = 0.0;
  for (const auto& L1 : kL1s) {
    const CalabiModel cm = compose(
        make_spec({{plain(Family::kReals), Rational(-1)}, {plain(Family::kReals), Rational(-1)}}, L1));
    const double C = expected_C(1, L1.to_double());
    if (std::abs(cm.model.C - C) > 1e-15) o.fail("R+R scale constant");
    for (const auto& p : sample_points(cm.model, kLevelPoints, kSeed)) {
      const double rel = std::abs(p[0] * p[1] - C * C) / (C * C);
      worst_hyp = std::max(worst_hyp, rel);
      if (!(rel <= kLevelTol)) o.fail("R+R L1=" + L1.str() + " off the hyperbola by " + fmt(rel));
    }
    // The factors are single points; moving along the central direction keeps the product.
    for (double t1 : {-0.7, 0.2, 1.3}) {
      const std::vector<double> t = {t1, -t1};
      const Vec<double> p = compose_point(cm, t, {{expected_C(0, -1.0)}, {expected_C(0, -1.0)}});
      const double rel = std::abs(p[0] * p[1] - C * C) / (C * C);
      worst_hyp = std::max(worst_hyp, rel);
      if (!(rel <= kLevelTol)) o.fail("R+R composed point off the hyperbola");
    }
    bool rejected = false;
    try {
      const std::vector<double> bad = {0.1, 0.1};
      compose_point(cm, bad, {{expected_C(0, -1.0)}, {expected_C(0, -1.0)}});
    } catch (const AlgebraError& e) {
      rejected = e.kind() == ErrorKind::kConstraintViolated;
    }
    if (!rejected) o.fail("T0 violation was not rejected");
  }
  o.summary = std::to_string(specs.size()) + " compositions, max level residual " + fmt(worst_level) +
              ", hyperbola residual " + fmt(worst_hyp) + ", T0 violations rejected";
  return o;
}

Outcome ac11() {
  Outcome o;
  double worst = 1e9;
  for (const auto& e : algebras()) {
    if (e.J.dim() < 2) continue;
    const TangentOrder t = tangent_order(e.J, kSeed);
    worst = std::min(worst, t.order);
    if (!(t.order >= kMinOrder)) o.fail(key(e) + " observed order " + fmt(t.order));
  }
  o.summary = "min observed order " + fmt(worst) + " over h in {1e-2, 1e-3, 1e-4}";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  bool ok = true;
  for (const auto& [name, fn] : all) {
    if (!wanted.empty() && !wanted.count(name)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << name << " " << (out.pass ? "PASS" : "FAIL") << " " << out.summary << " [" << fmt(secs) << "s]"
              << std::endl;
    for (const auto& f : out.failures) std::cout << "  failure: " << f << '\n';
    ok = ok && out.pass;
  }
  return ok ? 0 : 1;
}
