#pragma once

#include <stdexcept>

#include "k3v/check.hpp"
#include "k3v/lattice.hpp"

namespace k3v {

/// (k, [f2 + i f3]) over the K3 lattice with polynomial coordinates.
struct PeriodTriple {
  PolyVector f1, f2, f3;
  VarSet params;
};

/// (v,v) = constant_part + e_coefficient * Q_e.
struct NormProfile {
  MultiPoly constant_part;
  BigRational e_coefficient;
  friend bool operator==(const NormProfile&, const NormProfile&) = default;
};

class NonStandardEPart : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws NonStandardEPart when the e-dependent part of (v,v) is not a
/// rational multiple of Q_e.
NormProfile norm_profile(const LatticeSpace& space, const PolyVector& v);

/// (f2,f2) = (f3,f3), (f2,f3) = 0 identically and (f2,f2) > 0 under
/// |Q_e| <= 1/2, for all integers n, p, q >= 1 when they appear.
CheckReport check_omega(const PeriodTriple& triple);
/// check_omega plus (f1,f1) a positive constant and (f1,f2) = (f1,f3) = 0.
CheckReport check_komega(const PeriodTriple& triple);

}  // namespace k3v
