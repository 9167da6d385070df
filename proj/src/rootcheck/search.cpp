#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "k3v/rootcheck.hpp"
#include "search_rows.hpp"

namespace k3v {

namespace detail {

SearchRows search_rows(const PeriodTriple& triple, const ParamPoint& point) {
  Bindings bind;
  for (const auto& [v, value] : point) bind[v] = MultiPoly(value);
  const LatticeSpace space = build(SpaceKind::K3);
  std::map<std::pair<std::size_t, Monomial>, std::vector<BigRational>> rational_rows;
  std::size_t i = 0;
  for (const PolyVector* f : {&triple.f1, &triple.f2, &triple.f3}) {
    PolyVector at(k3::rank);
    for (std::size_t k = 0; k < k3::rank; ++k) {
      at[k] = substitute((*f)[k], bind);
      if ((at[k].support() & ~e_vars()).any()) {
        throw std::invalid_argument("root search: parameter point leaves free variables in " +
                                    at[k].to_string());
      }
    }
    for (std::size_t k = 0; k < k3::rank; ++k) {
      MultiPoly gk;
      for (std::size_t j = 0; j < k3::rank; ++j) {
        if (space.gram[k][j] != 0) gk += at[j].scaled(BigRational(space.gram[k][j]));
      }
      for (const auto& [m, c] : gk.terms()) {
        auto& row = rational_rows[{i, m}];
        if (row.empty()) row.assign(k3::rank, 0);
        row[k] = c;
      }
    }
    ++i;
  }

  SearchRows rows;
  for (const auto& [key, r] : rational_rows) {
    BigInt lcm = 1;
    for (const auto& c : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    FullRow out{};
    bool nonzero = false;
    for (std::size_t k = 0; k < k3::rank; ++k) {
      const BigRational scaled = r[k] * lcm;
      if (!scaled.get_num().fits_slong_p()) throw std::overflow_error("root search: row entry too large");
      out[k] = scaled.get_num().get_si();
      nonzero = nonzero || out[k] != 0;
    }
    if (nonzero) rows.push_back(out);
  }
  return rows;
}

bool row_holds(const FullRow& row, const IntVector& d) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < k3::rank; ++k) total += row[k] * d[k];
  return total == 0;
}

}  // namespace detail

namespace {

using Key = std::vector<std::int64_t>;

struct BlockClass {
  std::int64_t n;
  Key blind;
  Key visible;
  std::vector<const IntVector*> members;
};

std::vector<BlockClass> block_classes(const std::vector<std::vector<IntVector>>& lists,
                                      const std::vector<detail::FullRow>& blind,
                                      const std::vector<detail::FullRow>& visible, std::size_t offset) {
  std::map<std::tuple<std::int64_t, Key, Key>, std::size_t> index;
  std::vector<BlockClass> classes;
  const auto dot = [&](const detail::FullRow& row, const IntVector& x) {
    std::int64_t total = 0;
    for (int j = 0; j < 8; ++j) total += row[offset + j] * x[j];
    return total;
  };
  for (std::size_t n = 0; n < lists.size(); ++n) {
    for (const IntVector& x : lists[n]) {
      Key b, v;
      for (const auto& row : blind) b.push_back(dot(row, x));
      for (const auto& row : visible) v.push_back(dot(row, x));
      auto key = std::make_tuple(static_cast<std::int64_t>(n), b, v);
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(key, classes.size()).first;
        classes.push_back({static_cast<std::int64_t>(n), std::move(b), std::move(v), {}});
      }
      classes[it->second].members.push_back(&x);
    }
  }
  return classes;
}

}  // namespace

std::vector<std::vector<IntVector>> e8_norm_lists(std::int64_t m) {
  const LatticeSpace e8 = build(SpaceKind::E8);
  std::vector<std::vector<IntVector>> lists;
  for (std::int64_t k = 0; k <= m; ++k) lists.push_back(enumerate_by_norm(e8, 2 * k));
  return lists;
}

std::vector<RootCandidate> root_search_at_point(const PeriodTriple& triple, const ParamPoint& point,
                                                std::int64_t box_bound,
                                                const std::vector<std::vector<IntVector>>& lists) {
  if (box_bound < 0) throw std::invalid_argument("root search: negative box bound");
  const auto rows = detail::search_rows(triple, point);
  std::vector<detail::FullRow> blind, visible;
  for (const auto& row : rows) {
    const bool has_u = std::any_of(row.begin(), row.begin() + 6, [](std::int64_t c) { return c != 0; });
    (has_u ? visible : blind).push_back(row);
  }

  const auto c1 = block_classes(lists, blind, visible, k3::e8a);
  const auto c2 = block_classes(lists, blind, visible, k3::e8b);
  std::map<Key, std::vector<std::size_t>> by_blind;
  for (std::size_t j = 0; j < c2.size(); ++j) by_blind[c2[j].blind].push_back(j);

  // (n1 + n2, visible sum) -> class pairs
  std::map<std::pair<std::int64_t, Key>, std::vector<std::pair<std::size_t, std::size_t>>> table;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    Key want = c1[i].blind;
    for (auto& x : want) x = -x;
    const auto it = by_blind.find(want);
    if (it == by_blind.end()) continue;
    for (std::size_t j : it->second) {
      Key vis = c1[i].visible;
      for (std::size_t r = 0; r < vis.size(); ++r) vis[r] += c2[j].visible[r];
      table[{c1[i].n + c2[j].n, vis}].emplace_back(i, j);
    }
  }

  const std::int64_t side = 2 * box_bound + 1;
  const std::int64_t max_t = 2 * static_cast<std::int64_t>(lists.size() - 1);
  std::vector<std::vector<RootCandidate>> parts(static_cast<std::size_t>(side * side));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t ab = 0; ab < side * side; ++ab) {
    std::array<std::int64_t, 6> w{};
    w[0] = ab / side - box_bound;
    w[1] = ab % side - box_bound;
    auto& out = parts[static_cast<std::size_t>(ab)];
    for (w[2] = -box_bound; w[2] <= box_bound; ++w[2]) {
      for (w[3] = -box_bound; w[3] <= box_bound; ++w[3]) {
        for (w[4] = -box_bound; w[4] <= box_bound; ++w[4]) {
          for (w[5] = -box_bound; w[5] <= box_bound; ++w[5]) {
            const std::int64_t t = w[0] * w[1] + w[2] * w[3] + w[4] * w[5] + 1;
            if (t < 0 || t > max_t) continue;
            Key need;
            need.reserve(visible.size());
            for (const auto& row : visible) {
              std::int64_t total = 0;
              for (int k = 0; k < 6; ++k) total += row[k] * w[k];
              need.push_back(-total);
            }
            const auto it = table.find({t, need});
            if (it == table.end()) continue;
            for (const auto& [i, j] : it->second) {
              for (const IntVector* x1 : c1[i].members) {
                for (const IntVector* x2 : c2[j].members) out.push_back({w, *x1, *x2});
              }
            }
          }
        }
      }
    }
  }
  std::vector<RootCandidate> found;
  for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<RootCandidate> root_search_at_point(const PeriodTriple& triple, const ParamPoint& point,
                                                std::int64_t box_bound, std::int64_t norm_bound) {
  if (norm_bound < 0) throw std::invalid_argument("root search: negative norm bound");
  return root_search_at_point(triple, point, box_bound, e8_norm_lists(norm_bound));
}

std::vector<RootCandidate> root_search_at_point(const FamilySpec& family, const ParamPoint& point,
                                                std::int64_t box_bound, std::int64_t norm_bound) {
  return root_search_at_point(family.triple, point, box_bound, norm_bound);
}

}  // namespace k3v
