#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3v/affine.hpp"
#include "k3v/check.hpp"
#include "k3v/lattice.hpp"
#include "k3v/period.hpp"

namespace k3v {

enum class FamilyName { Circle, TorusStandard, TorusNpq };

/// An isometry of L together with the parameter action it induces.
struct Generator {
  Isometry gamma;
  AffineMap action;
  std::string label;
};

struct FamilySpec {
  FamilyName name = FamilyName::Circle;
  std::optional<std::array<std::int64_t, 3>> npq;  // (n, p, q) for TorusNpq
  bool symbolic = false;  // n, p, q kept as alphabet variables (no generators)
  PeriodTriple triple;
  std::vector<Generator> generators;

  /// Parameters in order (s) or (s, r).
  std::vector<Var> params() const;
  std::string descriptor() const;
};

std::string family_name_string(FamilyName name);

/// For TorusNpq, n, p, q >= 1 is required; throws std::invalid_argument.
FamilySpec build_family(FamilyName name, std::int64_t n = 0, std::int64_t p = 0, std::int64_t q = 0);
/// The (n,p,q)-torus triple with n, p, q as variables.
FamilySpec build_symbolic_npq();

enum class EquivarianceMode { Exact, Projective, Failed };

struct EquivarianceResult {
  EquivarianceMode mode = EquivarianceMode::Failed;
  std::string shift;  // e.g. "(s, r) -> (2*r + s, r + 5)"
  /// Complex scalar c + i d with gamma(f2 + i f3) = (c + i d) f'(shifted); (1, 0) in exact mode.
  BigRational c = 1, d = 0;
  std::string first_difference;  // empty on success
  CheckReport report;

  bool passed() const { return mode != EquivarianceMode::Failed; }
};

EquivarianceResult check_equivariance(const PeriodTriple& triple, const std::vector<Var>& params,
                                      const Generator& generator);
EquivarianceResult check_equivariance(const FamilySpec& family, std::size_t generator_index);

/// f1 = base + sum_i params_i * coefficients_i.
struct LinearVariation {
  IntVector base;
  std::vector<IntVector> coefficients;
};

class LinearVariationError : public std::runtime_error {
 public:
  enum class Kind { NotAffineInParams, NonIntegralCoefficients, DependentCoefficients };
  LinearVariationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

LinearVariation linear_variation(const FamilySpec& family);
LinearVariation linear_variation(const PolyVector& f1, const std::vector<Var>& params);

/// phi psi = psi phi; throws std::invalid_argument unless there are two generators.
bool verify_generator_relations(const FamilySpec& family);

}  // namespace k3v
