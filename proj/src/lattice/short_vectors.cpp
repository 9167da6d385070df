#include "short_vectors.hpp"

#include <cmath>
#include <stdexcept>

namespace k3v::detail {

namespace {

// Integers x with (x - c)^2 <= bound, bound >= 0.
std::pair<std::int64_t, std::int64_t> window(const BigRational& c, const BigRational& bound) {
  const double radius = std::sqrt(std::max(0.0, bound.get_d()));
  const double center = c.get_d();
  auto lo = static_cast<std::int64_t>(std::floor(center - radius)) - 1;
  auto hi = static_cast<std::int64_t>(std::ceil(center + radius)) + 1;
  const auto fits = [&](std::int64_t x) {
    const BigRational d = BigRational(x) - c;
    return d * d <= bound;
  };
  while (lo <= hi && !fits(lo)) ++lo;
  while (hi >= lo && !fits(hi)) --hi;
  return {lo, hi};
}

struct Search {
  const QuadraticForm& form;
  std::vector<IntVector>& out;
  IntVector x;

  // Chooses x[i] given x[i+1..], with `remaining` budget left.
  void descend(std::size_t i, const BigRational& remaining) {
    BigRational c = 0;
    for (std::size_t j = i + 1; j < form.size(); ++j) c -= form.q[i][j] * x[j];
    const BigRational& qii = form.q[i][i];
    const auto [lo, hi] = window(c, remaining / qii);
    for (std::int64_t xi = lo; xi <= hi; ++xi) {
      const BigRational d = BigRational(xi) - c;
      const BigRational left = remaining - qii * d * d;
      if (left < 0) continue;
      x[i] = xi;
      if (i == 0) {
        if (left == 0) out.push_back(x);
      } else {
        descend(i - 1, left);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

QuadraticForm decompose(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  QuadraticForm f;
  f.q.assign(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.q[i][j] = BigRational(gram[i][j]);
  }
  auto& q = f.q;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw std::invalid_argument("form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }
  return f;
}

std::vector<std::int64_t> outer_range(const QuadraticForm& form, std::int64_t target) {
  const std::size_t last = form.size() - 1;
  const auto [lo, hi] = window(0, BigRational(target) / form.q[last][last]);
  std::vector<std::int64_t> values;
  for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
  return values;
}

void enumerate_with_outer(const QuadraticForm& form, std::int64_t target, std::int64_t outer,
                          std::vector<IntVector>& out) {
  const std::size_t last = form.size() - 1;
  const BigRational left = BigRational(target) - form.q[last][last] * outer * outer;
  if (left < 0) return;
  if (last == 0) {
    if (left == 0) out.push_back({outer});
    return;
  }
  Search search{form, out, IntVector(form.size(), 0)};
  search.x[last] = outer;
  search.descend(last - 1, left);
}

IntMatrix definite_gram(const LatticeSpace& space) {
  const Signature sig = signature(space);
  const int rank = static_cast<int>(space.rank());
  if (sig.plus == rank) return space.gram;
  if (sig.minus == rank) {
    IntMatrix g = space.gram;
    for (auto& row : g) {
      for (auto& entry : row) entry = -entry;
    }
    return g;
  }
  throw std::invalid_argument("enumerate_by_norm: lattice '" + space.name + "' is not definite");
}

}  // namespace k3v::detail
