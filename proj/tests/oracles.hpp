#pragma once

// Independent oracles that share no code with the library.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace k3v::oracle {

/// Vectors of norm `norm` in E8 = {x in Z^8 u (Z+1/2)^8 : sum x even}, by
/// backtracking in doubled coordinates y = 2x: one parity throughout,
/// sum y = 0 mod 4, sum y^2 = 4 * norm.
inline std::size_t e8_coordinate_count(int norm) {
  const int target = 4 * norm;
  const int reach = static_cast<int>(std::sqrt(target));
  std::size_t count = 0;
  std::array<int, 8> y{};
  const auto rec = [&](auto&& self, int i, int sq, int sum) -> void {
    if (i == 8) {
      if (sq == target && ((sum % 4) + 4) % 4 == 0) ++count;
      return;
    }
    for (int v = -reach; v <= reach; ++v) {
      if (i > 0 && ((v - y[0]) % 2) != 0) continue;
      if (sq + v * v > target) continue;
      y[i] = v;
      self(self, i + 1, sq + v * v, sum + v);
    }
  };
  rec(rec, 0, 0, 0);
  return count;
}

/// Number of candidates with |A..F| <= n and d_i of norm 2 n_i, n_i <= m,
/// given list sizes sizes[k] = #{norm 2k}: sum over t of W(t) * P(t) where
/// t = AB + CD + EF + 1 = n1 + n2.
inline std::uint64_t sweep_candidate_tally(int n, const std::vector<std::uint64_t>& sizes) {
  const int m = static_cast<int>(sizes.size()) - 1;
  std::vector<std::uint64_t> w(2 * m + 1, 0);
  std::vector<std::uint64_t> products(2 * n * n + 1, 0);  // index AB + n^2
  const int offset = n * n;
  for (int a = -n; a <= n; ++a) {
    for (int b = -n; b <= n; ++b) ++products[a * b + offset];
  }
  for (std::size_t i = 0; i < products.size(); ++i) {
    for (std::size_t j = 0; j < products.size(); ++j) {
      for (std::size_t k = 0; k < products.size(); ++k) {
        const long t = static_cast<long>(i + j + k) - 3L * offset + 1;
        if (t >= 0 && t <= 2 * m) w[t] += products[i] * products[j] * products[k];
      }
    }
  }
  std::uint64_t total = 0;
  for (int t = 0; t <= 2 * m; ++t) {
    std::uint64_t pairs = 0;
    for (int n1 = 0; n1 <= m; ++n1) {
      if (t - n1 >= 0 && t - n1 <= m) pairs += sizes[n1] * sizes[t - n1];
    }
    total += w[t] * pairs;
  }
  return total;
}

}  // namespace k3v::oracle
