#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "k3v/report.hpp"
#include "k3v/rootcheck.hpp"

namespace k3v {

/// Bad flags or parameter values; the front end maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  FamilyName family = FamilyName::Circle;
  std::optional<std::int64_t> n, p, q;
  std::vector<BigRational> s_values;  // empty: default grid
  std::vector<BigRational> r_values;
  std::int64_t box_bound = 5;
  std::int64_t norm_bound = 2;
  int jobs = 0;  // 0: OpenMP default
  bool timing = false;
  std::optional<ControlKind> control;  // root-search only
};

/// {0, 1/3, 1/2, 2/3, 5/7}
std::vector<BigRational> default_grid();

/// The family named by the config; throws UsageError on missing or
/// inapplicable n, p, q.
FamilySpec family_from_config(const RunConfig& config);
/// Cartesian product of the s and r samples over the family parameters.
std::vector<ParamPoint> sample_points(const RunConfig& config, const FamilySpec& family);

/// Lattice, isometry, equivariance, period, linear variation, affine,
/// system, identity, point-search and sweep checks, in that order.
Report run_verify(const RunConfig& config);
Report run_root_search(const RunConfig& config);
Report run_enumerate(SpaceKind lattice, std::int64_t norm, bool list, const RunConfig& config);
Report run_identities(const RunConfig& config);

/// Exit code for a finished report: 0 on pass, 1 on fail.
int exit_code(const Report& report);

/// "2*u + v - y" in the K3 basis labels.
std::string format_vector(const std::vector<std::string>& labels, const IntVector& v);

}  // namespace k3v
