#pragma once

// Fincke-Pohst enumeration over an exact rational quadratic form. Shared by
// the parallel kernel and the serial reference.

#include <vector>

#include "k3v/lattice.hpp"

namespace k3v::detail {

/// Q(x) = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2.
struct QuadraticForm {
  std::vector<std::vector<BigRational>> q;
  std::size_t size() const { return q.size(); }
};

/// Requires a positive definite Gram matrix.
QuadraticForm decompose(const IntMatrix& gram);

/// Candidate values of the last coordinate for Q(x) <= target.
std::vector<std::int64_t> outer_range(const QuadraticForm& form, std::int64_t target);

/// Appends every x with Q(x) = target and last coordinate `outer`.
void enumerate_with_outer(const QuadraticForm& form, std::int64_t target, std::int64_t outer,
                          std::vector<IntVector>& out);

/// Positive definite Gram for enumeration; throws for indefinite spaces.
IntMatrix definite_gram(const LatticeSpace& space);

}  // namespace k3v::detail
