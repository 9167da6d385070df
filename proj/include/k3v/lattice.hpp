#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3v/poly.hpp"

namespace k3v {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;
using PolyVector = std::vector<MultiPoly>;

/// Integer symmetric bilinear form on Z^rank with named basis vectors.
struct LatticeSpace {
  std::string name;
  IntMatrix gram;
  std::vector<std::string> labels;

  std::size_t rank() const { return gram.size(); }
};

enum class SpaceKind { U, E8, MinusE8, K3 };

/// E8 uses the Cartan matrix in Bourbaki numbering. K3 is U+U+U+(-E8)+(-E8)
/// with basis u, v, x, y, z, t, e8a_1..e8a_8, e8b_1..e8b_8.
LatticeSpace build(SpaceKind kind);
LatticeSpace direct_sum(const std::vector<LatticeSpace>& summands, std::string name);

/// Cartan matrix of E8, Bourbaki numbering.
const IntMatrix& e8_cartan();

namespace k3 {
inline constexpr std::size_t u = 0, v = 1, x = 2, y = 3, z = 4, t = 5;
inline constexpr std::size_t e8a = 6;   // first -E8 block, holds b = (e, 0)
inline constexpr std::size_t e8b = 14;  // second -E8 block, holds a = (0, e)
inline constexpr std::size_t rank = 22;
}  // namespace k3

IntVector basis_vector(std::size_t rank, std::size_t i);
PolyVector embed(const IntVector& v);
PolyVector zero_poly_vector(std::size_t rank);

/// The symbolic vector (e1..e8) placed in the E8 block starting at `offset`.
PolyVector e_block_vector(std::size_t offset);

/// Q_e = (e,e) in -E8 at the symbolic vector e = (e1..e8).
const MultiPoly& e_form();

/// v^T G w. Throws std::invalid_argument on rank mismatch.
MultiPoly inner(const LatticeSpace& space, const PolyVector& v, const PolyVector& w);
std::int64_t inner(const LatticeSpace& space, const IntVector& v, const IntVector& w);

PolyVector add(const PolyVector& v, const PolyVector& w);
PolyVector scale(const PolyVector& v, const MultiPoly& c);

/// Integer matrix acting on coordinates; column j is the image of basis vector j.
struct Isometry {
  IntMatrix matrix;
};

Isometry identity_isometry(std::size_t rank);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
PolyVector apply(const Isometry& m, const PolyVector& v);
IntVector apply(const Isometry& m, const IntVector& v);

/// True iff M^T G M = G exactly (and the ranks agree).
bool is_isometry(const LatticeSpace& space, const Isometry& m);

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia by exact rational congruence diagonalization.
Signature signature(const LatticeSpace& space);
/// Fraction-free (Bareiss) determinant.
BigInt determinant(const LatticeSpace& space);
bool is_even(const LatticeSpace& space);

/// All v with |(v,v)| = target_norm, sorted lexicographically. The space or
/// its negation must be positive definite; throws std::invalid_argument
/// otherwise. The outermost coordinate is split across OpenMP threads.
std::vector<IntVector> enumerate_by_norm(const LatticeSpace& space, std::int64_t target_norm);

}  // namespace k3v
