#include "k3v/run.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <set>

namespace k3v {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kWitnessCandidates = 4;

void apply_jobs(const RunConfig& config) {
  if (config.jobs < 0) throw UsageError("--jobs must be non-negative");
  if (config.jobs > 0) omp_set_num_threads(config.jobs);
}

void check_bounds(const RunConfig& config) {
  if (config.box_bound < 1) throw UsageError("--bound must be positive");
  if (config.norm_bound < 1) throw UsageError("--norm-bound must be positive");
}

std::vector<std::string> k3_labels() { return build(SpaceKind::K3).labels; }

Json candidate_json(const RootCandidate& c) { return {{"w", c.w}, {"d1", c.d1}, {"d2", c.d2}}; }

Json outcome_json(const ExclusionOutcome& o) {
  Json trace = Json::array();
  for (const auto& t : o.trace) trace.push_back({t.split, t.value});
  Json solution = Json::object();
  for (const auto& [v, x] : o.solution) solution[v] = x;
  return {{"verdict", verdict_string(o.verdict)}, {"kind", witness_kind_string(o.kind)}, {"path", o.path()},
          {"trace", trace}, {"witness", o.witness.to_string()}, {"solution", solution}, {"reason", o.reason}};
}

std::string point_label(const ParamPoint& point) {
  std::string out;
  for (const auto& [v, x] : point) out += (out.empty() ? "" : ",") + std::string(name_of(v)) + "=" + to_string(x);
  return out;
}

Json point_json(const ParamPoint& point) {
  Json out = Json::object();
  for (const auto& [v, x] : point) out[std::string(name_of(v))] = to_string(x);
  return out;
}

std::string candidates_text(const std::vector<RootCandidate>& roots, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < roots.size() && i < kWitnessCandidates; ++i) {
    out += (i ? "; " : "") + format_vector(labels, roots[i].assemble());
  }
  if (roots.size() > kWitnessCandidates) out += "; ...";
  return out;
}

Report start(std::string command, std::string family, const std::vector<std::string>& basis) {
  Report r;
  r.command = std::move(command);
  r.family = std::move(family);
  r.basis = basis;
  return r;
}

template <typename Body>
Report timed(const RunConfig& config, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = body();
  if (config.timing) r.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.finalize();
  return r;
}

CheckReport lattice_checks() {
  CheckReport out;
  const LatticeSpace k3 = build(SpaceKind::K3);
  const Signature sig = signature(k3);
  out.add("lattice.signature", sig == Signature{3, 19, 0},
          "(" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) + "), kernel " + std::to_string(sig.zero));
  const BigInt det = determinant(k3);
  out.add("lattice.determinant", det == -1, "det = " + det.get_str());
  out.add("lattice.even", is_even(k3), "diagonal entries even");
  const LatticeSpace e8 = build(SpaceKind::E8);
  const std::size_t n2 = enumerate_by_norm(e8, 2).size();
  const std::size_t n4 = enumerate_by_norm(e8, 4).size();
  out.add("lattice.e8_norm2", n2 == 240, std::to_string(n2) + " vectors");
  out.add("lattice.e8_norm4", n4 == 2160, std::to_string(n4) + " vectors");
  return out;
}

CheckReport isometry_checks(const FamilySpec& family) {
  CheckReport out;
  const LatticeSpace k3 = build(SpaceKind::K3);
  for (const auto& g : family.generators) out.add("isometry." + g.label, is_isometry(k3, g.gamma), "M^T G M = G");
  return out;
}

std::string mode_string(EquivarianceMode m) {
  switch (m) {
    case EquivarianceMode::Exact:
      return "exact";
    case EquivarianceMode::Projective:
      return "projective";
    case EquivarianceMode::Failed:
      break;
  }
  return "failed";
}

CheckReport equivariance_checks(const FamilySpec& family) {
  CheckReport out;
  for (std::size_t i = 0; i < family.generators.size(); ++i) {
    const EquivarianceResult r = check_equivariance(family, i);
    out.add("equivariance." + family.generators[i].label, r.passed(), mode_string(r.mode) + ", " + r.shift,
            r.passed() ? std::nullopt : std::optional<std::string>(r.first_difference));
  }
  return out;
}

CheckReport period_checks(const FamilySpec& family) {
  CheckReport out = check_komega(family.triple);
  const LatticeSpace k3 = build(SpaceKind::K3);
  const BigRational q = family.npq ? BigRational((*family.npq)[2]) : BigRational(1);
  const auto profile = [&](const std::string& name, const PolyVector& v, const NormProfile& expected) {
    try {
      const NormProfile p = norm_profile(k3, v);
      out.add(name, p == expected, "(" + p.constant_part.to_string() + ", " + to_string(p.e_coefficient) + ")");
    } catch (const NonStandardEPart& e) {
      out.add(name, false, e.what());
    }
  };
  profile("period.f1_profile", family.triple.f1, {MultiPoly(4L), 0});
  profile("period.f2_profile", family.triple.f2, {MultiPoly(4 * q * q), 1});
  return out;
}

CheckReport variation_checks(const FamilySpec& family) {
  CheckReport out;
  const auto labels = k3_labels();
  try {
    const LinearVariation lv = linear_variation(family);
    std::string detail = "a = " + format_vector(labels, lv.base);
    const auto params = family.params();
    for (std::size_t i = 0; i < lv.coefficients.size(); ++i) {
      detail += "; a_" + std::string(name_of(params[i])) + " = " + format_vector(labels, lv.coefficients[i]);
    }
    out.add("linear_variation", true, detail);
  } catch (const LinearVariationError& e) {
    out.add("linear_variation", false, e.what());
  }
  return out;
}

std::string affine_string(const AffineMap& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.linear.size(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < f.linear[i].size(); ++j) out += (j ? " " : "") + std::to_string(f.linear[i][j]);
  }
  out += "), (";
  for (std::size_t i = 0; i < f.translation.size(); ++i) out += (i ? ", " : "") + to_string(f.translation[i]);
  return out + ")";
}

CheckReport affine_checks(const FamilySpec& family) {
  CheckReport out;
  std::vector<AffineMap> actions;
  for (const auto& g : family.generators) {
    out.add("affine.strongly_integral." + g.label, is_strongly_integral(g.action), affine_string(g.action));
    actions.push_back(g.action);
  }
  if (actions.size() == 2) {
    const TorusClass cls = classify_strongly_integral_torus(actions);
    TorusClass expected;
    expected.free_and_proper = true;
    if (family.npq) {
      expected.tag = TorusTag::NonStandard;
      expected.n = (*family.npq)[0];
      expected.p = (*family.npq)[1];
      expected.q = (*family.npq)[2];
    } else {
      expected.tag = TorusTag::Standard;
    }
    out.add("affine.classification", cls == expected, cls.to_string());
    out.add("affine.commute", verify_generator_relations(family), "phi psi = psi phi");
  }
  return out;
}

struct PointSearch {
  CheckReport checks;
  Json points = Json::array();
};

PointSearch point_searches(const FamilySpec& family, const std::vector<ParamPoint>& points, const RunConfig& config) {
  PointSearch out;
  const auto labels = k3_labels();
  const auto lists = e8_norm_lists(config.norm_bound);
  for (const auto& pt : points) {
    const auto roots = root_search_at_point(family.triple, pt, config.box_bound, lists);
    out.checks.add("root_search[" + point_label(pt) + "]", roots.empty(),
                   std::to_string(roots.size()) + " candidates",
                   roots.empty() ? std::nullopt : std::optional<std::string>(candidates_text(roots, labels)));
    Json found = Json::array();
    for (const auto& c : roots) found.push_back(candidate_json(c));
    out.points.push_back({{"point", point_json(pt)}, {"candidates", std::move(found)}});
  }
  return out;
}

}  // namespace

std::vector<BigRational> default_grid() {
  return {BigRational(0), BigRational(1, 3), BigRational(1, 2), BigRational(2, 3), BigRational(5, 7)};
}

FamilySpec family_from_config(const RunConfig& config) {
  const bool any = config.n || config.p || config.q;
  if (config.family != FamilyName::TorusNpq) {
    if (any) throw UsageError("--n, --p, --q only apply to --family torus");
    if (config.family == FamilyName::Circle && !config.r_values.empty()) {
      throw UsageError("--r does not apply to --family circle");
    }
    return build_family(config.family);
  }
  if (!config.n || !config.p || !config.q) throw UsageError("--family torus requires --n, --p and --q");
  if (*config.n < 1 || *config.p < 1 || *config.q < 1) throw UsageError("--n, --p, --q must be >= 1");
  return build_family(config.family, *config.n, *config.p, *config.q);
}

std::vector<ParamPoint> sample_points(const RunConfig& config, const FamilySpec& family) {
  const auto s_values = config.s_values.empty() ? default_grid() : config.s_values;
  const auto r_values = config.r_values.empty() ? default_grid() : config.r_values;
  std::vector<ParamPoint> out;
  const auto params = family.params();
  for (const auto& s : s_values) {
    if (params.size() == 1) {
      out.push_back({{Var::s, s}});
      continue;
    }
    for (const auto& r : r_values) out.push_back({{Var::s, s}, {Var::r, r}});
  }
  return out;
}

Report run_verify(const RunConfig& config) {
  apply_jobs(config);
  check_bounds(config);
  if (config.control) throw UsageError("--control only applies to root-search");
  const FamilySpec family = family_from_config(config);
  const auto points = sample_points(config, family);
  return timed(config, [&] {
    Report r = start("verify", family.descriptor(), k3_labels());
    r.add_section("lattice", lattice_checks());
    r.add_section("isometry", isometry_checks(family));
    r.add_section("equivariance", equivariance_checks(family));
    r.add_section("period", period_checks(family));
    r.add_section("linear_variation", variation_checks(family));
    r.add_section("affine", affine_checks(family));
    r.add_section("system", match_expected_system(family).report);
    r.add_section("identities", verify_identity_bank());

    PointSearch ps = point_searches(family, points, config);
    r.add_section("root_search", ps.checks);
    r.data["root_search"] = {
        {"bound", config.box_bound}, {"norm_bound", config.norm_bound}, {"points", std::move(ps.points)}};

    const SweepResult sweep = exclusion_sweep(family, config.box_bound, config.norm_bound);
    CheckReport sc;
    sc.add("sweep.excluded", sweep.all_excluded(),
           std::to_string(sweep.excluded) + " of " + std::to_string(sweep.candidates) + " candidates excluded, " +
               std::to_string(sweep.engine_runs) + " engine runs",
           sweep.flagged.empty() ? std::nullopt
                                 : std::optional<std::string>(sweep.flagged.front().candidate.to_string() + ": " +
                                                              sweep.flagged.front().outcome.path()));
    r.add_section("sweep", sc);
    Json paths = Json::object();
    for (const auto& [p, n] : sweep.paths) paths[p] = n;
    Json flagged = Json::array();
    for (const auto& f : sweep.flagged) {
      flagged.push_back({{"candidate", candidate_json(f.candidate)}, {"outcome", outcome_json(f.outcome)}});
    }
    r.data["sweep"] = {{"bound", config.box_bound},
                       {"norm_bound", config.norm_bound},
                       {"candidates", sweep.candidates},
                       {"excluded", sweep.excluded},
                       {"solution_found", sweep.solution_found},
                       {"inconclusive", sweep.inconclusive},
                       {"engine_runs", sweep.engine_runs},
                       {"paths", std::move(paths)},
                       {"flagged", std::move(flagged)}};
    return r;
  });
}

Report run_root_search(const RunConfig& config) {
  apply_jobs(config);
  check_bounds(config);
  const auto labels = k3_labels();
  if (!config.control) {
    const FamilySpec family = family_from_config(config);
    const auto points = sample_points(config, family);
    return timed(config, [&] {
      Report r = start("root-search", family.descriptor(), labels);
      PointSearch ps = point_searches(family, points, config);
      r.add_section("root_search", ps.checks);
      r.data["root_search"] = {
          {"bound", config.box_bound}, {"norm_bound", config.norm_bound}, {"points", std::move(ps.points)}};
      return r;
    });
  }
  if (config.n || config.p || config.q || !config.s_values.empty() || !config.r_values.empty()) {
    throw UsageError("--control takes no family parameters or samples");
  }
  const ControlKind kind = *config.control;
  return timed(config, [&] {
    const std::string name = kind == ControlKind::NonK0 ? "non-k0" : "hyperbolic";
    Report r = start("root-search", "control:" + name, labels);
    const auto roots = root_search_at_point(control_triple(kind), {}, config.box_bound, config.norm_bound);
    RootCandidate plus;
    plus.w = {1, -1, 0, 0, 0, 0};
    RootCandidate minus;
    minus.w = {-1, 1, 0, 0, 0, 0};
    const bool has_pair = std::binary_search(roots.begin(), roots.end(), plus) &&
                          std::binary_search(roots.begin(), roots.end(), minus);
    CheckReport checks;
    if (kind == ControlKind::NonK0) {
      checks.add("control.non-k0", roots.size() == 2 && has_pair,
                 std::to_string(roots.size()) + " candidates: " + candidates_text(roots, labels));
    } else {
      // +-(u-v), +-(x-y), +-(z-t) and the 480 roots of the two E8 blocks
      const std::size_t expected = 6 + 480;
      checks.add("control.hyperbolic", has_pair && roots.size() == expected,
                 std::to_string(roots.size()) + " candidates, expected " + std::to_string(expected) + ": " +
                     candidates_text(roots, labels));
    }
    r.add_section("root_search", checks);
    Json found = Json::array();
    for (const auto& c : roots) found.push_back(candidate_json(c));
    r.data["root_search"] = {{"bound", config.box_bound}, {"norm_bound", config.norm_bound}, {"candidates", found}};
    return r;
  });
}

Report run_enumerate(SpaceKind lattice, std::int64_t norm, bool list, const RunConfig& config) {
  apply_jobs(config);
  if (lattice != SpaceKind::E8 && lattice != SpaceKind::MinusE8) throw UsageError("--lattice must be e8 or minus-e8");
  if (norm < 0) throw UsageError("--norm must be non-negative");
  const LatticeSpace space = build(lattice);
  return timed(config, [&] {
    Report r = start("enumerate", space.name, space.labels);
    const auto vectors = enumerate_by_norm(space, norm);
    const std::int64_t sign = lattice == SpaceKind::E8 ? 1 : -1;
    const bool norms_ok = std::all_of(vectors.begin(), vectors.end(),
                                      [&](const IntVector& v) { return inner(space, v, v) == sign * norm; });
    const std::set<IntVector> distinct(vectors.begin(), vectors.end());
    bool closed = true;
    for (const auto& v : vectors) {
      IntVector neg(v.size());
      std::transform(v.begin(), v.end(), neg.begin(), [](std::int64_t x) { return -x; });
      closed = closed && distinct.count(neg) == 1;
    }
    CheckReport checks;
    checks.add("enumerate.count", true, "count " + std::to_string(vectors.size()));
    checks.add("enumerate.norm", norms_ok, "(v,v) = " + std::to_string(sign * norm));
    checks.add("enumerate.distinct", distinct.size() == vectors.size(), "no duplicates");
    checks.add("enumerate.negation_closed", closed, "v in list implies -v in list");
    r.add_section("enumerate", checks);
    r.data["norm"] = norm;
    r.data["count"] = vectors.size();
    if (list) r.data["vectors"] = vectors;
    return r;
  });
}

Report run_identities(const RunConfig& config) {
  apply_jobs(config);
  return timed(config, [&] {
    Report r = start("identities", "", {});
    r.add_section("identities", verify_identity_bank());
    return r;
  });
}

int exit_code(const Report& report) { return report.passed() ? 0 : 1; }

std::string format_vector(const std::vector<std::string>& labels, const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t c = v[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += labels.at(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace k3v
