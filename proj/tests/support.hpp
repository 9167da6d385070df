#pragma once

#include <random>

#include "k3v/poly.hpp"

namespace k3v::testing {

inline constexpr std::uint64_t kSeed = 20240611;
inline constexpr int kCases = 200;

inline BigRational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 6) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Sparse polynomial over `vars` with small rational coefficients.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> width(0, 3);
  MultiPoly out;
  for (int i = 0; i < terms; ++i) {
    MultiPoly t(random_rational(rng));
    const int w = width(rng);
    for (int j = 0; j < w; ++j) t *= MultiPoly::var(vars[pick(rng)]).pow(exp(rng));
    out += t;
  }
  return out;
}

inline std::vector<Var> small_alphabet() { return {Var::s, Var::r, Var::e1, Var::e2, Var::A, Var::B, Var::q}; }

}  // namespace k3v::testing
