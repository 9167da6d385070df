#pragma once

// The variable alphabet shared by every polynomial in the toolkit.
//
// Core symbols: the family parameters s, r and the eight coordinates e1..e8
// of the generic vector e. Extension symbols: the U-block coefficients A..F of
// a root candidate, the integer family parameters n, p, q, and the coordinates
// of the two E8 blocks of a candidate (d1_1..d1_8, d2_1..d2_8).
//
// Declaration order is the variable order used by the monomial order:
// s < r < e1 < ... < e8 < A < ... < F < n < p < q < d1_1 < ... < d2_8.

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace k3v {

enum class Var : std::uint8_t {
  s, r,
  e1, e2, e3, e4, e5, e6, e7, e8,
  A, B, C, D, E, F,
  n, p, q,
  d1_1, d1_2, d1_3, d1_4, d1_5, d1_6, d1_7, d1_8,
  d2_1, d2_2, d2_3, d2_4, d2_5, d2_6, d2_7, d2_8,
};

inline constexpr std::size_t kNumVars = 35;

using VarSet = std::bitset<kNumVars>;

constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

std::string_view name_of(Var v);

/// Throws std::invalid_argument for symbols outside the alphabet.
Var parse_var(std::string_view symbol);

VarSet make_varset(std::initializer_list<Var> vars);

/// e_j for j in 0..7.
Var e_var(int j);
/// Coordinate j (0..7) of candidate block 1 or 2.
Var d_var(int block, int j);

VarSet e_vars();
VarSet param_vars();  // {s, r}

}  // namespace k3v
