#include "k3v/reference.hpp"

#include <algorithm>
#include <stdexcept>

#include "lattice/short_vectors.hpp"

namespace k3v::reference {

namespace {

template <typename Visit>
void for_each_candidate(std::int64_t box_bound, const std::vector<std::vector<IntVector>>& lists, Visit&& visit) {
  const auto m = static_cast<std::int64_t>(lists.size()) - 1;
  RootCandidate cand;
  const auto rec = [&](auto&& self, int k) -> void {
    if (k == 6) {
      const auto& w = cand.w;
      const std::int64_t t = w[0] * w[1] + w[2] * w[3] + w[4] * w[5] + 1;
      for (std::int64_t n1 = 0; n1 <= m; ++n1) {
        const std::int64_t n2 = t - n1;
        if (n2 < 0 || n2 > m) continue;
        for (const auto& d1 : lists[n1]) {
          for (const auto& d2 : lists[n2]) {
            cand.d1 = d1;
            cand.d2 = d2;
            visit(cand);
          }
        }
      }
      return;
    }
    for (cand.w[k] = -box_bound; cand.w[k] <= box_bound; ++cand.w[k]) self(self, k + 1);
  };
  rec(rec, 0);
}

}  // namespace

std::vector<IntVector> enumerate_by_norm(const LatticeSpace& space, std::int64_t target_norm) {
  if (target_norm < 0) throw std::invalid_argument("enumerate_by_norm: negative target");
  const detail::QuadraticForm form = detail::decompose(detail::definite_gram(space));
  std::vector<IntVector> out;
  for (const std::int64_t outer : detail::outer_range(form, target_norm)) {
    detail::enumerate_with_outer(form, target_norm, outer, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootCandidate> root_search_at_point(const PeriodTriple& triple, const ParamPoint& point,
                                                std::int64_t box_bound,
                                                const std::vector<std::vector<IntVector>>& lists) {
  const LatticeSpace k3 = build(SpaceKind::K3);
  Bindings bind;
  for (const auto& [v, x] : point) bind.emplace(v, MultiPoly(x));
  std::vector<PolyVector> fs;
  for (const PolyVector* f : {&triple.f1, &triple.f2, &triple.f3}) {
    PolyVector g(f->size());
    for (std::size_t i = 0; i < f->size(); ++i) g[i] = substitute((*f)[i], bind);
    fs.push_back(std::move(g));
  }
  std::vector<RootCandidate> out;
  for_each_candidate(box_bound, lists, [&](const RootCandidate& cand) {
    const IntVector d = cand.assemble();
    if (inner(k3, d, d) != -2) return;
    PolyVector dp(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) dp[i] = MultiPoly(static_cast<long>(d[i]));
    for (const auto& f : fs) {
      if (!inner(k3, dp, f).is_zero()) return;
    }
    out.push_back(cand);
  });
  std::sort(out.begin(), out.end());
  return out;
}

SweepResult exclusion_sweep(const FamilySpec& family, std::int64_t box_bound,
                            const std::vector<std::vector<IntVector>>& lists) {
  const ExclusionEngine engine(family);
  SweepResult out;
  for_each_candidate(box_bound, lists, [&](const RootCandidate& cand) {
    ExclusionOutcome o = engine.run(cand);
    ++out.candidates;
    ++out.engine_runs;
    switch (o.verdict) {
      case Verdict::Excluded:
        ++out.excluded;
        break;
      case Verdict::SolutionFound:
        ++out.solution_found;
        break;
      case Verdict::Inconclusive:
        ++out.inconclusive;
        break;
    }
    ++out.paths[o.path()];
    if (o.verdict != Verdict::Excluded && out.flagged.size() < 10) out.flagged.push_back({cand, std::move(o)});
  });
  return out;
}

}  // namespace k3v::reference
