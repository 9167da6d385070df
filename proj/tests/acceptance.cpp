// One line per acceptance criterion: status, what was checked, wall time
// against the limit. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "k3v/run.hpp"
#include "oracles.hpp"

namespace k3v {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = "failed: " + what;
    ok = ok && cond;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // <= 0: no limit
  std::function<Outcome()> body;
};

std::vector<FamilySpec> cube_families() {
  std::vector<FamilySpec> out;
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t p = 1; p <= 3; ++p) {
      for (std::int64_t q = 1; q <= 3; ++q) out.push_back(build_family(FamilyName::TorusNpq, n, p, q));
    }
  }
  return out;
}

IntVector unit(std::size_t i) { return basis_vector(k3::rank, i); }

Outcome ac1() {
  Outcome o;
  const LatticeSpace k3 = build(SpaceKind::K3);
  o.require(signature(k3) == Signature{3, 19, 0}, "signature");
  o.require(determinant(k3) == -1, "determinant");
  bool even = true;
  for (std::size_t i = 0; i < k3.rank(); ++i) even = even && k3.gram[i][i] % 2 == 0;
  o.require(even, "diagonal parity");
  if (o.ok) o.detail = "signature (3,19), det -1, even diagonal";
  return o;
}

Outcome ac2() {
  Outcome o;
  const LatticeSpace e8 = build(SpaceKind::E8);
  for (const int norm : {2, 4}) {
    const auto vs = enumerate_by_norm(e8, norm);
    const std::set<IntVector> set(vs.begin(), vs.end());
    bool closed = set.size() == vs.size();
    for (const auto& v : vs) {
      IntVector neg = v;
      for (auto& x : neg) x = -x;
      closed = closed && set.count(neg) == 1;
    }
    o.require(vs.size() == oracle::e8_coordinate_count(norm), "count at norm " + std::to_string(norm));
    o.require(closed, "negation closure at norm " + std::to_string(norm));
  }
  o.require(enumerate_by_norm(e8, 2).size() == 240 && enumerate_by_norm(e8, 4).size() == 2160, "240 / 2160");
  if (o.ok) o.detail = "240 at norm 2, 2160 at norm 4, matching the coordinate model; closed under negation";
  return o;
}

Outcome ac3() {
  Outcome o;
  const LatticeSpace k3 = build(SpaceKind::K3);
  std::vector<FamilySpec> families = {build_family(FamilyName::Circle), build_family(FamilyName::TorusStandard)};
  for (auto& f : cube_families()) families.push_back(std::move(f));
  std::size_t checked = 0;
  for (const auto& f : families) {
    for (const auto& g : f.generators) {
      o.require(is_isometry(k3, g.gamma), f.descriptor() + " " + g.label);
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " generators satisfy M^T G M = G";
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto exact = [&](const FamilySpec& f, std::size_t i, const std::string& expected) {
    const EquivarianceResult r = check_equivariance(f, i);
    o.require(r.mode == EquivarianceMode::Exact, f.descriptor() + " generator " + std::to_string(i) + " not exact");
    o.require(r.shift == expected, f.descriptor() + ": " + r.shift + " != " + expected);
  };
  exact(build_family(FamilyName::Circle), 0, "s -> s + 1");
  const FamilySpec std_torus = build_family(FamilyName::TorusStandard);
  exact(std_torus, 0, "(s, r) -> (s + 1, r)");
  exact(std_torus, 1, "(s, r) -> (s, r + 1)");
  for (const auto& f : cube_families()) {
    const auto [n, p, q] = *f.npq;
    const Bindings npq = {{Var::n, MultiPoly(static_cast<long>(n))},
                          {Var::p, MultiPoly(static_cast<long>(p))},
                          {Var::q, MultiPoly(static_cast<long>(q))}};
    const auto show = [&](const char* text) { return substitute(parse_poly(text), npq).to_string(); };
    exact(f, 0, "(s, r) -> (" + show("s + p") + ", r)");
    exact(f, 1, "(s, r) -> (" + show("s + n*r") + ", " + show("r + q") + ")");
  }
  if (o.ok) o.detail = "exact mode for all generators; s+1, (s,r+1), (s+nr,r+q) on the (n,p,q) cube";
  return o;
}

Outcome ac5() {
  Outcome o;
  const LatticeSpace k3 = build(SpaceKind::K3);
  const auto check = [&](const FamilySpec& f, const MultiPoly& f2_constant) {
    o.require(check_omega(f.triple).passed(), f.descriptor() + " omega");
    o.require(check_komega(f.triple).passed(), f.descriptor() + " komega");
    o.require(norm_profile(k3, f.triple.f1) == NormProfile{MultiPoly(4L), 0}, f.descriptor() + " f1 profile");
    o.require(norm_profile(k3, f.triple.f2) == NormProfile{f2_constant, 1}, f.descriptor() + " f2 profile");
  };
  check(build_family(FamilyName::Circle), MultiPoly(4L));
  check(build_family(FamilyName::TorusStandard), MultiPoly(4L));
  check(build_symbolic_npq(), parse_poly("4*q^2"));
  for (const auto& f : cube_families()) check(f, MultiPoly(4 * (*f.npq)[2] * (*f.npq)[2]));
  if (o.ok) o.detail = "Omega and K-Omega hold; f1 (4,0), f2 (4,1) / (4,1) / (4q^2,1)";
  return o;
}

Outcome ac6() {
  Outcome o;
  IntVector a = unit(k3::u);
  a[k3::u] = 2;
  a[k3::v] = 1;
  const auto check = [&](const FamilySpec& f, const std::vector<IntVector>& coefficients) {
    try {
      const LinearVariation lv = linear_variation(f);
      o.require(lv.base == a, f.descriptor() + " base");
      o.require(lv.coefficients == coefficients, f.descriptor() + " coefficients");
    } catch (const LinearVariationError& e) {
      o.require(false, f.descriptor() + ": " + e.what());
    }
  };
  check(build_family(FamilyName::Circle), {unit(k3::y)});
  check(build_family(FamilyName::TorusStandard), {unit(k3::y), unit(k3::t)});
  for (const auto& f : cube_families()) check(f, {unit(k3::y), unit(k3::t)});
  if (o.ok) o.detail = "a = 2u + v with integral independent coefficients (y) / (y,t) / (y,t)";
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const FamilySpec& f : {build_family(FamilyName::Circle), build_family(FamilyName::TorusStandard),
                              build_symbolic_npq(), build_family(FamilyName::TorusNpq, 2, 1, 3)}) {
    o.require(match_expected_system(f).matched, f.descriptor());
  }
  if (o.ok) o.detail = "derived systems equal the hand-written ones (torus with symbolic n, q)";
  return o;
}

Outcome ac8() {
  Outcome o;
  const CheckReport bank = verify_identity_bank();
  for (const auto& item : bank.items) o.require(item.passed, item.name);
  o.require(bank.find("torus.mixed_terms") != nullptr, "mixed-terms identity present");
  if (o.ok) o.detail = std::to_string(bank.items.size()) + " identities with zero difference";
  return o;
}

Outcome ac9() {
  Outcome o;
  const std::uint64_t expected = oracle::sweep_candidate_tally(3, {1, 240, 2160});
  std::uint64_t total = 0;
  std::uint64_t runs = 0;
  for (const FamilySpec& f : {build_family(FamilyName::Circle), build_family(FamilyName::TorusStandard),
                              build_family(FamilyName::TorusNpq, 1, 1, 1), build_family(FamilyName::TorusNpq, 2, 1, 3)}) {
    const SweepResult r = exclusion_sweep(f, 3, 2);
    o.require(r.candidates == expected, f.descriptor() + " candidate count");
    o.require(r.excluded == r.candidates, f.descriptor() + " not all excluded");
    o.require(r.solution_found == 0, f.descriptor() + " SolutionFound");
    o.require(r.inconclusive == 0, f.descriptor() + " Inconclusive");
    total += r.candidates;
    runs += r.engine_runs;
  }
  if (o.ok) {
    o.detail = std::to_string(total) + " candidates over 4 families all Excluded (" + std::to_string(runs) +
               " class certificates)";
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  RunConfig base;
  for (const auto& [name, npq] : std::vector<std::pair<FamilyName, std::array<std::int64_t, 3>>>{
           {FamilyName::Circle, {0, 0, 0}},
           {FamilyName::TorusStandard, {0, 0, 0}},
           {FamilyName::TorusNpq, {1, 1, 1}},
           {FamilyName::TorusNpq, {2, 1, 3}}}) {
    RunConfig c = base;
    c.family = name;
    if (name == FamilyName::TorusNpq) {
      c.n = npq[0];
      c.p = npq[1];
      c.q = npq[2];
    }
    const FamilySpec f = family_from_config(c);
    const auto lists = e8_norm_lists(c.norm_bound);
    for (const auto& pt : sample_points(c, f)) {
      o.require(root_search_at_point(f.triple, pt, c.box_bound, lists).empty(), f.descriptor());
    }
  }
  RootCandidate plus, minus;
  plus.w = {1, -1, 0, 0, 0, 0};
  minus.w = {-1, 1, 0, 0, 0, 0};
  const auto control = root_search_at_point(control_triple(ControlKind::NonK0), {}, base.box_bound, base.norm_bound);
  o.require(control == std::vector<RootCandidate>{minus, plus}, "control roots");
  if (o.ok) o.detail = "no roots on the 5x5 grid (N=5, m=2); control yields exactly +-(u - v)";
  return o;
}

Outcome ac11() {
  Outcome o;
  const auto actions = [](const FamilySpec& f) {
    std::vector<AffineMap> out;
    for (const auto& g : f.generators) out.push_back(g.action);
    return out;
  };
  o.require(classify_strongly_integral_torus(actions(build_family(FamilyName::TorusStandard))).tag == TorusTag::Standard,
            "standard torus");
  for (const auto& f : cube_families()) {
    const TorusClass c = classify_strongly_integral_torus(actions(f));
    o.require(c.tag == TorusTag::NonStandard && c.n == (*f.npq)[0] && c.p == (*f.npq)[1] && c.q == (*f.npq)[2],
              f.descriptor());
  }
  std::vector<FamilySpec> all = {build_family(FamilyName::Circle), build_family(FamilyName::TorusStandard)};
  for (auto& f : cube_families()) all.push_back(std::move(f));
  for (const auto& f : all) {
    for (const auto& g : f.generators) o.require(is_strongly_integral(g.action), f.descriptor() + " " + g.label);
  }
  o.require(!is_strongly_integral(make_affine({{1, 0}, {0, 1}}, {BigRational(1, 2), 0})), "(I,(1/2,0)) control");
  if (o.ok) o.detail = "Standard / NonStandard(n,p,q) recovered; all actions strongly integral, (I,(1/2,0)) is not";
  return o;
}

Outcome ac12() {
  Outcome o;
  std::vector<RunConfig> configs(2);
  configs[1].family = FamilyName::TorusNpq;
  configs[1].n = 2;
  configs[1].p = 1;
  configs[1].q = 3;
  for (RunConfig c : configs) {
    c.jobs = 1;
    const std::string a = serialize(run_verify(c));
    c.jobs = 2;
    const std::string b = serialize(run_verify(c));
    const std::string name = family_from_config(c).descriptor();
    o.require(a == b, name + " reports differ");
    o.require(parse_report(a).summary == "pass", name + " verify failed");
  }
  if (o.ok) o.detail = "verify circle and torus(2,1,3): byte-identical JSON with --jobs 1 and 2";
  return o;
}

}  // namespace
}  // namespace k3v

int main() {
  using namespace k3v;
  const std::vector<Criterion> criteria = {
      {"AC1", "lattice sanity", 1, ac1},          {"AC2", "E8 enumeration", 5, ac2},
      {"AC3", "isometries", 1, ac3},              {"AC4", "equivariance", 5, ac4},
      {"AC5", "period membership", 5, ac5},       {"AC6", "linear variation", 1, ac6},
      {"AC7", "system match", 5, ac7},            {"AC8", "identity bank", 5, ac8},
      {"AC9", "root exclusion sweep", 600, ac9},  {"AC10", "point searches", 60, ac10},
      {"AC11", "affine layer", 1, ac11},          {"AC12", "determinism", 0, ac12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    const std::string limit = c.limit_seconds > 0 ? " < " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : "";
    std::printf("%-4s %s  %-20s %.3f s%s  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs, limit.c_str(),
                o.detail.c_str(), in_time ? "" : " (time limit exceeded)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
