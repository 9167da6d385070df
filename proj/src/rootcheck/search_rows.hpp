#pragma once

// Integer linear conditions on d in Z^22 equivalent to (d, f_i) = 0 at a
// parameter point with e formal: one row per (equation, e-monomial).

#include <array>

#include "k3v/rootcheck.hpp"

namespace k3v::detail {

using FullRow = std::array<std::int64_t, k3::rank>;
using SearchRows = std::vector<FullRow>;

SearchRows search_rows(const PeriodTriple& triple, const ParamPoint& point);
bool row_holds(const FullRow& row, const IntVector& d);

}  // namespace k3v::detail
