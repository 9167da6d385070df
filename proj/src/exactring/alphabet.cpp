#include "k3v/alphabet.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace k3v {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "s",    "r",    "e1",   "e2",   "e3",   "e4",   "e5",   "e6",   "e7",
    "e8",   "A",    "B",    "C",    "D",    "E",    "F",    "n",    "p",
    "q",    "d1_1", "d1_2", "d1_3", "d1_4", "d1_5", "d1_6", "d1_7", "d1_8",
    "d2_1", "d2_2", "d2_3", "d2_4", "d2_5", "d2_6", "d2_7", "d2_8",
};

}  // namespace

std::string_view name_of(Var v) { return kNames[index_of(v)]; }

Var parse_var(std::string_view symbol) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kNames[i] == symbol) return static_cast<Var>(i);
  }
  throw std::invalid_argument("unknown variable '" + std::string(symbol) + "'");
}

VarSet make_varset(std::initializer_list<Var> vars) {
  VarSet out;
  for (Var v : vars) out.set(index_of(v));
  return out;
}

Var e_var(int j) {
  if (j < 0 || j >= 8) throw std::out_of_range("e index");
  return static_cast<Var>(index_of(Var::e1) + static_cast<std::size_t>(j));
}

Var d_var(int block, int j) {
  if (j < 0 || j >= 8 || (block != 1 && block != 2)) throw std::out_of_range("d index");
  const Var base = block == 1 ? Var::d1_1 : Var::d2_1;
  return static_cast<Var>(index_of(base) + static_cast<std::size_t>(j));
}

VarSet e_vars() {
  VarSet out;
  for (int j = 0; j < 8; ++j) out.set(index_of(e_var(j)));
  return out;
}

VarSet param_vars() { return make_varset({Var::s, Var::r}); }

}  // namespace k3v
