#include <gtest/gtest.h>

#include "k3v/families.hpp"

namespace k3v {
namespace {

IntVector unit(std::size_t i) { return basis_vector(k3::rank, i); }

IntVector a0() {
  IntVector a(k3::rank, 0);
  a[k3::u] = 2;
  a[k3::v] = 1;
  return a;
}

TEST(Families, GeneratorsAreIsometriesOnSampledCube) {
  const LatticeSpace k3 = build(SpaceKind::K3);
  EXPECT_TRUE(is_isometry(k3, build_family(FamilyName::Circle).generators.at(0).gamma));
  for (const auto& g : build_family(FamilyName::TorusStandard).generators) EXPECT_TRUE(is_isometry(k3, g.gamma));
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t p = 1; p <= 3; ++p) {
      for (std::int64_t q = 1; q <= 3; ++q) {
        const FamilySpec f = build_family(FamilyName::TorusNpq, n, p, q);
        ASSERT_EQ(f.generators.size(), 2U);
        for (const auto& g : f.generators) EXPECT_TRUE(is_isometry(k3, g.gamma)) << f.descriptor() << g.label;
      }
    }
  }
}

TEST(Families, Descriptors) {
  EXPECT_EQ(build_family(FamilyName::Circle).descriptor(), "circle");
  EXPECT_EQ(build_family(FamilyName::TorusStandard).descriptor(), "torus-std");
  EXPECT_EQ(build_family(FamilyName::TorusNpq, 2, 1, 3).descriptor(), "torus(n=2,p=1,q=3)");
  EXPECT_EQ(family_name_string(FamilyName::TorusNpq), "torus");
  EXPECT_EQ(build_family(FamilyName::Circle).params(), std::vector<Var>{Var::s});
  EXPECT_EQ(build_family(FamilyName::TorusStandard).params(), (std::vector<Var>{Var::s, Var::r}));
}

TEST(Families, TorusNeedsPositiveParameters) {
  EXPECT_THROW(build_family(FamilyName::TorusNpq), std::invalid_argument);
  EXPECT_THROW(build_family(FamilyName::TorusNpq, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(build_family(FamilyName::TorusNpq, 1, 1, -2), std::invalid_argument);
}

TEST(Equivariance, ExactShifts) {
  const auto shift = [](const FamilySpec& f, std::size_t i) {
    const EquivarianceResult r = check_equivariance(f, i);
    EXPECT_EQ(r.mode, EquivarianceMode::Exact) << f.descriptor() << " " << i << " " << r.first_difference;
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.c, 1);
    EXPECT_EQ(r.d, 0);
    return r.shift;
  };
  EXPECT_EQ(shift(build_family(FamilyName::Circle), 0), "s -> s + 1");
  const FamilySpec std_torus = build_family(FamilyName::TorusStandard);
  EXPECT_EQ(shift(std_torus, 0), "(s, r) -> (s + 1, r)");
  EXPECT_EQ(shift(std_torus, 1), "(s, r) -> (s, r + 1)");
  EXPECT_EQ(shift(build_family(FamilyName::TorusNpq, 2, 1, 3), 1), "(s, r) -> (2*r + s, r + 3)");
  EXPECT_EQ(shift(build_family(FamilyName::TorusNpq, 1, 2, 1), 0), "(s, r) -> (s + 2, r)");
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t q = 1; q <= 3; ++q) {
      const FamilySpec f = build_family(FamilyName::TorusNpq, n, 3, q);
      shift(f, 0);
      shift(f, 1);
    }
  }
}

TEST(Equivariance, WrongActionFails) {
  const FamilySpec f = build_family(FamilyName::TorusStandard);
  Generator g = f.generators.at(1);
  g.action = make_affine({{1, 0}, {0, 1}}, {0, 2});
  const EquivarianceResult r = check_equivariance(f.triple, f.params(), g);
  EXPECT_EQ(r.mode, EquivarianceMode::Failed);
  EXPECT_FALSE(r.first_difference.empty());
  EXPECT_FALSE(r.report.passed());
}

TEST(Equivariance, ProjectiveFallback) {
  // gamma = -1 on the x,y,z,t,E8 part maps f2 + i f3 to -(f2 + i f3) at the same point
  const FamilySpec f = build_family(FamilyName::Circle);
  PeriodTriple t = f.triple;
  t.f1 = embed(a0());
  t.f2 = add(embed(unit(k3::x)), add(scale(embed(unit(k3::y)), MultiPoly(2L)), e_block_vector(k3::e8b)));
  t.f3 = add(embed(unit(k3::z)), add(scale(embed(unit(k3::t)), MultiPoly(2L)), e_block_vector(k3::e8a)));
  Isometry minus = identity_isometry(k3::rank);
  for (std::size_t i = k3::x; i < k3::rank; ++i) minus.matrix[i][i] = -1;
  const Generator g{minus, affine_identity(1), "minus"};
  const EquivarianceResult r = check_equivariance(t, f.params(), g);
  EXPECT_EQ(r.mode, EquivarianceMode::Projective);
  EXPECT_EQ(r.c, -1);
  EXPECT_EQ(r.d, 0);
}

TEST(LinearVariation, FamilyDecompositions) {
  const LinearVariation circle = linear_variation(build_family(FamilyName::Circle));
  EXPECT_EQ(circle.base, a0());
  EXPECT_EQ(circle.coefficients, std::vector<IntVector>{unit(k3::y)});
  for (const FamilySpec& f : {build_family(FamilyName::TorusStandard), build_family(FamilyName::TorusNpq, 2, 1, 3)}) {
    const LinearVariation lv = linear_variation(f);
    EXPECT_EQ(lv.base, a0());
    EXPECT_EQ(lv.coefficients, (std::vector<IntVector>{unit(k3::y), unit(k3::t)}));
  }
}

TEST(LinearVariation, Errors) {
  const auto kind_of = [](const PolyVector& f1, const std::vector<Var>& params) {
    try {
      linear_variation(f1, params);
    } catch (const LinearVariationError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return LinearVariationError::Kind::NotAffineInParams;
  };
  PolyVector f1 = embed(a0());
  f1[k3::y] = parse_poly("s^2");
  EXPECT_EQ(kind_of(f1, {Var::s}), LinearVariationError::Kind::NotAffineInParams);
  f1[k3::y] = parse_poly("1/2*s");
  EXPECT_EQ(kind_of(f1, {Var::s}), LinearVariationError::Kind::NonIntegralCoefficients);
  f1[k3::y] = parse_poly("s + 2*r");
  EXPECT_EQ(kind_of(f1, {Var::s, Var::r}), LinearVariationError::Kind::DependentCoefficients);
  f1[k3::y] = parse_poly("s");
  f1[k3::u] = parse_poly("e1");
  EXPECT_EQ(kind_of(f1, {Var::s}), LinearVariationError::Kind::NotAffineInParams);
}

TEST(Relations, GeneratorsCommute) {
  EXPECT_TRUE(verify_generator_relations(build_family(FamilyName::TorusStandard)));
  for (std::int64_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(verify_generator_relations(build_family(FamilyName::TorusNpq, n, 2, 3)));
  }
  EXPECT_THROW(verify_generator_relations(build_family(FamilyName::Circle)), std::invalid_argument);
}

}  // namespace
}  // namespace k3v
