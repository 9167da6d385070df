#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "k3v/lattice.hpp"
#include "k3v/reference.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace k3v {
namespace {

using testing::kSeed;

double float_determinant(const IntMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(g[i][j]);
  }
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
    }
    if (a[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

// Random unimodular matrix as a product of elementary operations.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix m = identity_isometry(n).matrix;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) m[k][i] += c * m[k][j];
  }
  return m;
}

Isometry reflection(const LatticeSpace& space, const IntVector& root) {
  // x -> x - 2 (x, a)/(a, a) a, with (a,a) = +-2
  const std::int64_t aa = inner(space, root, root);
  Isometry m = identity_isometry(space.rank());
  for (std::size_t j = 0; j < space.rank(); ++j) {
    const std::int64_t xa = inner(space, basis_vector(space.rank(), j), root);
    for (std::size_t i = 0; i < space.rank(); ++i) m.matrix[i][j] -= 2 * xa / aa * root[i];
  }
  return m;
}

TEST(Lattice, K3Invariants) {
  const LatticeSpace k3 = build(SpaceKind::K3);
  EXPECT_EQ(k3.rank(), 22U);
  EXPECT_EQ(signature(k3), (Signature{3, 19, 0}));
  EXPECT_EQ(determinant(k3), -1);
  EXPECT_TRUE(is_even(k3));
  EXPECT_EQ(k3.labels.front(), "u");
  EXPECT_EQ(k3.labels[k3::e8a], "e8a_1");
  EXPECT_EQ(k3.labels[k3::e8b + 7], "e8b_8");
}

TEST(Lattice, SummandInvariants) {
  EXPECT_EQ(signature(build(SpaceKind::U)), (Signature{1, 1, 0}));
  EXPECT_EQ(determinant(build(SpaceKind::U)), -1);
  EXPECT_EQ(signature(build(SpaceKind::E8)), (Signature{8, 0, 0}));
  EXPECT_EQ(signature(build(SpaceKind::MinusE8)), (Signature{0, 8, 0}));
  EXPECT_EQ(determinant(build(SpaceKind::E8)), 1);
  EXPECT_EQ(determinant(build(SpaceKind::MinusE8)), 1);
  EXPECT_FALSE(is_even(LatticeSpace{"odd", {{1}}, {"w"}}));
  EXPECT_EQ(signature(LatticeSpace{"degenerate", {{0, 0}, {0, 1}}, {"a", "b"}}), (Signature{1, 0, 1}));
}

TEST(Lattice, CartanShape) {
  const IntMatrix& c = e8_cartan();
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(c[i][i], 2);
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(c[i][j], c[j][i]);
  }
  int edges = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) edges += c[i][j] == -1;
  }
  EXPECT_EQ(edges, 7);
  EXPECT_EQ(c[1][3], -1);  // node 2 hangs off node 4
}

TEST(Lattice, DeterminantMatchesFloatingPoint) {
  for (const SpaceKind kind : {SpaceKind::U, SpaceKind::E8, SpaceKind::MinusE8, SpaceKind::K3}) {
    const LatticeSpace s = build(kind);
    EXPECT_NEAR(float_determinant(s.gram), determinant(s).get_d(), 1e-6) << s.name;
  }
}

TEST(Lattice, CongruenceInvarianceProperty) {
  std::mt19937_64 rng(kSeed);
  const LatticeSpace k3 = build(SpaceKind::K3);
  for (int i = 0; i < 20; ++i) {
    const IntMatrix p = random_unimodular(rng, k3.rank(), 30);
    const LatticeSpace moved{"moved", multiply(transpose(p), multiply(k3.gram, p)), k3.labels};
    EXPECT_EQ(signature(moved), (Signature{3, 19, 0}));
    EXPECT_EQ(determinant(moved), -1);
    EXPECT_TRUE(is_even(moved));
  }
}

TEST(Lattice, InnerRankMismatchThrows) {
  const LatticeSpace e8 = build(SpaceKind::E8);
  EXPECT_THROW(inner(e8, IntVector(7, 0), IntVector(8, 0)), std::invalid_argument);
  EXPECT_THROW(inner(e8, embed(IntVector(8, 1)), zero_poly_vector(9)), std::invalid_argument);
}

TEST(Lattice, EFormIsMinusE8Norm) {
  const LatticeSpace k3 = build(SpaceKind::K3);
  const PolyVector a = e_block_vector(k3::e8b);
  EXPECT_EQ(inner(k3, a, a), e_form());
  EXPECT_EQ(e_form().coefficient(Monomial(Var::e1, 2)), BigRational(-2));
  EXPECT_EQ(e_form().coefficient(Monomial(Var::e1) * Monomial(Var::e3)), BigRational(2));
}

TEST(Enumerate, E8CountsMatchCoordinateModel) {
  const LatticeSpace e8 = build(SpaceKind::E8);
  EXPECT_EQ(oracle::e8_coordinate_count(2), 240U);
  EXPECT_EQ(oracle::e8_coordinate_count(4), 2160U);
  EXPECT_EQ(enumerate_by_norm(e8, 2).size(), oracle::e8_coordinate_count(2));
  EXPECT_EQ(enumerate_by_norm(e8, 4).size(), oracle::e8_coordinate_count(4));
  EXPECT_EQ(enumerate_by_norm(e8, 6).size(), oracle::e8_coordinate_count(6));
  EXPECT_EQ(enumerate_by_norm(e8, 0).size(), 1U);
  EXPECT_TRUE(enumerate_by_norm(e8, 3).empty());
}

TEST(Enumerate, OutputInvariants) {
  for (const SpaceKind kind : {SpaceKind::E8, SpaceKind::MinusE8}) {
    const LatticeSpace s = build(kind);
    const std::int64_t sign = kind == SpaceKind::E8 ? 1 : -1;
    for (const std::int64_t norm : {2, 4}) {
      const auto vs = enumerate_by_norm(s, norm);
      EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
      const std::set<IntVector> distinct(vs.begin(), vs.end());
      EXPECT_EQ(distinct.size(), vs.size());
      for (const auto& v : vs) {
        EXPECT_EQ(inner(s, v, v), sign * norm);
        IntVector neg = v;
        for (auto& x : neg) x = -x;
        EXPECT_TRUE(distinct.count(neg));
      }
    }
  }
}

TEST(Enumerate, ParallelMatchesSerialReference) {
  const LatticeSpace e8 = build(SpaceKind::E8);
  for (const std::int64_t norm : {0, 2, 4}) {
    EXPECT_EQ(enumerate_by_norm(e8, norm), reference::enumerate_by_norm(e8, norm));
  }
  const LatticeSpace a2{"A2", {{2, -1}, {-1, 2}}, {"a", "b"}};
  EXPECT_EQ(enumerate_by_norm(a2, 2).size(), 6U);
  EXPECT_EQ(enumerate_by_norm(a2, 2), reference::enumerate_by_norm(a2, 2));
}

TEST(Enumerate, RejectsIndefiniteAndNegative) {
  EXPECT_THROW(enumerate_by_norm(build(SpaceKind::K3), 2), std::invalid_argument);
  EXPECT_THROW(enumerate_by_norm(build(SpaceKind::U), 2), std::invalid_argument);
  EXPECT_THROW(enumerate_by_norm(build(SpaceKind::E8), -2), std::invalid_argument);
}

TEST(Isometry, ReflectionsInRootsProperty) {
  std::mt19937_64 rng(kSeed + 1);
  const LatticeSpace k3 = build(SpaceKind::K3);
  const auto roots = enumerate_by_norm(build(SpaceKind::MinusE8), 2);
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  for (int i = 0; i < 20; ++i) {
    Isometry m = identity_isometry(k3.rank());
    for (int j = 0; j < 3; ++j) {
      IntVector root(k3.rank(), 0);
      const std::size_t offset = j % 2 ? k3::e8a : k3::e8b;
      const auto& r = roots[pick(rng)];
      std::copy(r.begin(), r.end(), root.begin() + static_cast<std::ptrdiff_t>(offset));
      m.matrix = multiply(m.matrix, reflection(k3, root).matrix);
    }
    EXPECT_TRUE(is_isometry(k3, m));
    // (Mx, My) = (x, y) on random integer vectors
    std::uniform_int_distribution<int> c(-3, 3);
    IntVector x(k3.rank()), y(k3.rank());
    for (auto& v : x) v = c(rng);
    for (auto& v : y) v = c(rng);
    EXPECT_EQ(inner(k3, k3v::apply(m, x), k3v::apply(m, y)), inner(k3, x, y));
    m.matrix[0][0] += 1;
    EXPECT_FALSE(is_isometry(k3, m));
  }
  EXPECT_FALSE(is_isometry(k3, identity_isometry(8)));
}

TEST(Isometry, PolyApplyMatchesIntApply) {
  const LatticeSpace k3 = build(SpaceKind::K3);
  Isometry m = identity_isometry(k3.rank());
  m.matrix[k3::y][k3::v] = 2;
  m.matrix[k3::u][k3::x] = -2;
  IntVector x(k3.rank(), 0);
  x[k3::v] = 3;
  x[k3::x] = 1;
  EXPECT_EQ(k3v::apply(m, embed(x)), embed(k3v::apply(m, x)));
  EXPECT_TRUE(is_isometry(k3, m));
}

}  // namespace
}  // namespace k3v
