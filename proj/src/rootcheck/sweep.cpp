#include <map>
#include <stdexcept>

#include "k3v/rootcheck.hpp"

namespace k3v {

namespace {

constexpr std::size_t kMaxFlagged = 10;

struct GramClass {
  std::int64_t g12 = 0;
  std::uint64_t count = 0;
  const IntVector* d1 = nullptr;
  const IntVector* d2 = nullptr;
};

// classes[n1][n2]: pairs grouped by d1.Cartan.d2, first pair in list order as representative.
std::vector<std::vector<std::vector<GramClass>>> gram_classes(const std::vector<std::vector<IntVector>>& lists) {
  const IntMatrix& c = e8_cartan();
  const std::size_t m = lists.size();
  std::vector<std::vector<std::vector<GramClass>>> out(m, std::vector<std::vector<GramClass>>(m));
  for (std::size_t n2 = 0; n2 < m; ++n2) {
    std::vector<std::array<std::int64_t, 8>> cd2;
    for (const auto& x : lists[n2]) {
      std::array<std::int64_t, 8> y{};
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) y[i] += c[i][j] * x[j];
      }
      cd2.push_back(y);
    }
    for (std::size_t n1 = 0; n1 < m; ++n1) {
      std::map<std::int64_t, GramClass> by_g;
      for (const auto& x1 : lists[n1]) {
        for (std::size_t k = 0; k < lists[n2].size(); ++k) {
          std::int64_t g = 0;
          for (int i = 0; i < 8; ++i) g += x1[i] * cd2[k][i];
          GramClass& cls = by_g[g];
          if (cls.count++ == 0) {
            cls.g12 = g;
            cls.d1 = &x1;
            cls.d2 = &lists[n2][k];
          }
        }
      }
      for (const auto& [g, cls] : by_g) out[n1][n2].push_back(cls);
    }
  }
  return out;
}

struct Tally {
  std::uint64_t candidates = 0, excluded = 0, solution_found = 0, inconclusive = 0, engine_runs = 0;
  std::map<std::string, std::uint64_t> paths;

  void add(const ExclusionOutcome& o, std::uint64_t weight) {
    candidates += weight;
    ++engine_runs;
    switch (o.verdict) {
      case Verdict::Excluded:
        excluded += weight;
        break;
      case Verdict::SolutionFound:
        solution_found += weight;
        break;
      case Verdict::Inconclusive:
        inconclusive += weight;
        break;
    }
    paths[o.path()] += weight;
  }

  void merge(const Tally& t) {
    candidates += t.candidates;
    excluded += t.excluded;
    solution_found += t.solution_found;
    inconclusive += t.inconclusive;
    engine_runs += t.engine_runs;
    for (const auto& [p, n] : t.paths) paths[p] += n;
  }
};

}  // namespace

bool has_scalar_e_blocks(const PeriodTriple& triple) {
  for (const PolyVector* f : {&triple.f1, &triple.f2, &triple.f3}) {
    for (std::size_t offset : {k3::e8a, k3::e8b}) {
      const MultiPoly& first = (*f)[offset];
      const BigRational alpha = first.coefficient(Monomial(e_var(0)));
      for (int j = 0; j < 8; ++j) {
        if ((*f)[offset + j] != MultiPoly::var(e_var(j)).scaled(alpha)) return false;
      }
    }
  }
  return true;
}

SweepResult exclusion_sweep(const FamilySpec& family, std::int64_t box_bound,
                            const std::vector<std::vector<IntVector>>& lists) {
  if (!has_scalar_e_blocks(family.triple)) {
    throw std::invalid_argument("exclusion_sweep: E8 blocks are not scalar multiples of e");
  }
  if (lists.empty()) throw std::invalid_argument("exclusion_sweep: empty E8 lists");
  const auto classes = gram_classes(lists);
  const auto m = static_cast<std::int64_t>(lists.size()) - 1;

  std::vector<std::array<std::int64_t, 6>> ws;
  std::array<std::int64_t, 6> w{};
  const auto rec = [&](auto&& self, int k) -> void {
    if (k == 6) {
      const std::int64_t t = w[0] * w[1] + w[2] * w[3] + w[4] * w[5] + 1;
      if (t >= 0 && t <= 2 * m) ws.push_back(w);
      return;
    }
    for (w[k] = -box_bound; w[k] <= box_bound; ++w[k]) self(self, k + 1);
  };
  rec(rec, 0);

  const ExclusionEngine engine(family);
  std::vector<std::vector<FlaggedCandidate>> flagged(ws.size());
  Tally total;
  const auto count = static_cast<std::int64_t>(ws.size());
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& wi = ws[static_cast<std::size_t>(i)];
      const std::int64_t t = wi[0] * wi[1] + wi[2] * wi[3] + wi[4] * wi[5] + 1;
      for (std::int64_t n1 = 0; n1 <= std::min(t, m); ++n1) {
        const std::int64_t n2 = t - n1;
        if (n2 > m) continue;
        for (const GramClass& cls : classes[n1][n2]) {
          RootCandidate cand{wi, *cls.d1, *cls.d2};
          ExclusionOutcome o = engine.run(cand);
          local.add(o, cls.count);
          if (o.verdict != Verdict::Excluded && flagged[i].size() < kMaxFlagged) {
            flagged[i].push_back({std::move(cand), std::move(o)});
          }
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }

  SweepResult out;
  out.candidates = total.candidates;
  out.excluded = total.excluded;
  out.solution_found = total.solution_found;
  out.inconclusive = total.inconclusive;
  out.engine_runs = total.engine_runs;
  out.paths = std::move(total.paths);
  for (auto& f : flagged) {
    for (auto& c : f) {
      if (out.flagged.size() < kMaxFlagged) out.flagged.push_back(std::move(c));
    }
  }
  return out;
}

SweepResult exclusion_sweep(const FamilySpec& family, std::int64_t box_bound, std::int64_t norm_bound) {
  if (box_bound < 0 || norm_bound < 0) throw std::invalid_argument("exclusion_sweep: negative bound");
  return exclusion_sweep(family, box_bound, e8_norm_lists(norm_bound));
}

}  // namespace k3v
