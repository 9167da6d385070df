#include <gtest/gtest.h>

#include <random>

#include "k3v/affine.hpp"
#include "k3v/families.hpp"
#include "support.hpp"

namespace k3v {
namespace {

using testing::kSeed;
using testing::random_rational;

AffineMap random_affine(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  // upper times lower unitriangular, det 1
  const std::int64_t a = c(rng), b = c(rng);
  IntMatrix m = {{1 + a * b, a}, {b, 1}};
  if (c(rng) < 0) m[0] = {-m[0][0], -m[0][1]};
  return make_affine(m, {random_rational(rng), random_rational(rng)});
}

std::vector<MultiPoly> point(const BigRational& x, const BigRational& y) { return {MultiPoly(x), MultiPoly(y)}; }

TEST(Affine, Validation) {
  EXPECT_THROW(make_affine({{2, 0}, {0, 1}}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(make_affine({{1, 0}}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(make_affine({{1, 0}, {0, 1}}, {0}), std::invalid_argument);
  EXPECT_NO_THROW(make_affine({{0, 1}, {1, 0}}, {0, 0}));
  EXPECT_THROW(compose(affine_identity(1), affine_identity(2)), std::invalid_argument);
}

TEST(Affine, GroupLawsProperty) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    const AffineMap f = random_affine(rng), g = random_affine(rng), h = random_affine(rng);
    EXPECT_EQ(compose(f, invert(f)), affine_identity(2));
    EXPECT_EQ(compose(invert(f), f), affine_identity(2));
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    const auto x = point(random_rational(rng), random_rational(rng));
    EXPECT_EQ(k3v::apply(compose(f, g), x), k3v::apply(f, k3v::apply(g, x)));
  }
}

TEST(Affine, ApplyOnPolynomialPoint) {
  const AffineMap psi = make_affine({{1, 2}, {0, 1}}, {0, 3});
  const auto image = k3v::apply(psi, {MultiPoly::var(Var::s), MultiPoly::var(Var::r)});
  EXPECT_EQ(image[0], parse_poly("s + 2*r"));
  EXPECT_EQ(image[1], parse_poly("r + 3"));
}

TEST(Affine, StrongIntegrality) {
  EXPECT_TRUE(is_strongly_integral(make_affine({{1, 0}, {0, 1}}, {1, 0})));
  EXPECT_FALSE(is_strongly_integral(make_affine({{1, 0}, {0, 1}}, {BigRational(1, 2), 0})));
  for (const FamilySpec& f : {build_family(FamilyName::Circle), build_family(FamilyName::TorusStandard),
                              build_family(FamilyName::TorusNpq, 2, 1, 3), build_family(FamilyName::TorusNpq, 3, 3, 1)}) {
    for (const auto& g : f.generators) EXPECT_TRUE(is_strongly_integral(g.action)) << f.descriptor() << g.label;
  }
}

TEST(Classification, NormalForms) {
  const AffineMap t1 = make_affine({{1, 0}, {0, 1}}, {1, 0});
  const AffineMap t2 = make_affine({{1, 0}, {0, 1}}, {0, 1});
  const TorusClass standard = classify_strongly_integral_torus({t1, t2});
  EXPECT_EQ(standard.tag, TorusTag::Standard);
  EXPECT_TRUE(standard.free_and_proper);
  EXPECT_EQ(classify_strongly_integral_torus({t2, t1}).tag, TorusTag::Standard);

  const AffineMap phi = make_affine({{1, 0}, {0, 1}}, {2, 0});
  const AffineMap psi = make_affine({{1, 3}, {0, 1}}, {0, 5});
  for (const auto& order : {std::vector<AffineMap>{phi, psi}, std::vector<AffineMap>{psi, phi}}) {
    const TorusClass c = classify_strongly_integral_torus(order);
    EXPECT_EQ(c.tag, TorusTag::NonStandard);
    EXPECT_EQ(c.n, 3);
    EXPECT_EQ(c.p, 2);
    EXPECT_EQ(c.q, 5);
    EXPECT_TRUE(c.free_and_proper);
  }
}

TEST(Classification, Unrecognized) {
  const AffineMap half = make_affine({{1, 0}, {0, 1}}, {BigRational(1, 2), 0});
  const AffineMap t2 = make_affine({{1, 0}, {0, 1}}, {0, 1});
  const AffineMap flip = make_affine({{1, 0}, {0, -1}}, {0, 1});
  const AffineMap shear_back = make_affine({{1, -1}, {0, 1}}, {0, 1});
  const AffineMap phi = make_affine({{1, 0}, {0, 1}}, {1, 0});
  for (const auto& gens : {std::vector<AffineMap>{half, t2}, std::vector<AffineMap>{phi, flip},
                           std::vector<AffineMap>{phi, shear_back}, std::vector<AffineMap>{t2, t2}}) {
    const TorusClass c = classify_strongly_integral_torus(gens);
    EXPECT_EQ(c.tag, TorusTag::Unrecognized);
    EXPECT_FALSE(c.free_and_proper);
  }
  EXPECT_THROW(classify_strongly_integral_torus({phi}), std::invalid_argument);
  EXPECT_THROW(classify_strongly_integral_torus({affine_identity(1), affine_identity(1)}), std::invalid_argument);
}

TEST(Classification, FamilyActions) {
  const auto actions = [](const FamilySpec& f) {
    std::vector<AffineMap> out;
    for (const auto& g : f.generators) out.push_back(g.action);
    return out;
  };
  EXPECT_EQ(classify_strongly_integral_torus(actions(build_family(FamilyName::TorusStandard))).tag,
            TorusTag::Standard);
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t p = 1; p <= 3; ++p) {
      for (std::int64_t q = 1; q <= 3; ++q) {
        const TorusClass c = classify_strongly_integral_torus(actions(build_family(FamilyName::TorusNpq, n, p, q)));
        EXPECT_EQ(c.tag, TorusTag::NonStandard);
        EXPECT_EQ(c.n, n);
        EXPECT_EQ(c.p, p);
        EXPECT_EQ(c.q, q);
      }
    }
  }
}

}  // namespace
}  // namespace k3v
