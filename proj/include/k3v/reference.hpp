#pragma once

// Serial, unoptimised counterparts of the parallel kernels. Used as test
// oracles and as the baseline in the benchmarks.

#include "k3v/rootcheck.hpp"

namespace k3v::reference {

/// Single-threaded Fincke-Pohst over the same exact decomposition.
std::vector<IntVector> enumerate_by_norm(const LatticeSpace& space, std::int64_t target_norm);

/// Brute force over every w in the box and every (d1, d2) from lists with
/// n1 + n2 = w.U-norm + 1, testing (d,d) = -2 and (d, f_i) = 0 with the
/// full polynomial inner product. Sorted.
std::vector<RootCandidate> root_search_at_point(const PeriodTriple& triple, const ParamPoint& point,
                                                std::int64_t box_bound,
                                                const std::vector<std::vector<IntVector>>& lists);

/// Runs the exclusion engine on every candidate, with no class reduction.
SweepResult exclusion_sweep(const FamilySpec& family, std::int64_t box_bound,
                            const std::vector<std::vector<IntVector>>& lists);

}  // namespace k3v::reference
