#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3v/lattice.hpp"

namespace k3v {

/// x -> linear * x + translation; linear has determinant +-1.
struct AffineMap {
  IntMatrix linear;
  std::vector<BigRational> translation;

  std::size_t dim() const { return translation.size(); }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Validates shapes and det(linear) = +-1; throws std::invalid_argument.
AffineMap make_affine(IntMatrix linear, std::vector<BigRational> translation);
AffineMap affine_identity(std::size_t dim);

/// (A1,b1) o (A2,b2) = (A1 A2, A1 b2 + b1). Throws on dimension mismatch.
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap invert(const AffineMap& f);

/// Image of a point whose coordinates may be polynomials.
std::vector<MultiPoly> apply(const AffineMap& f, const std::vector<MultiPoly>& point);

bool is_strongly_integral(const AffineMap& f);

enum class TorusTag { Standard, NonStandard, Unrecognized };

struct TorusClass {
  TorusTag tag = TorusTag::Unrecognized;
  std::int64_t n = 0, p = 0, q = 0;  // set for NonStandard
  /// Recognized classes are free and proper by the classification.
  bool free_and_proper = false;

  std::string to_string() const;
  friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

/// Syntactic match against the normal forms
///   (a) (I,(1,0)), (I,(0,1))
///   (b) (I,(p,0)), ((1 n; 0 1),(0,q)) with n,p,q >= 1,
/// after putting generators with identity linear part first.
/// Throws std::invalid_argument unless given two maps of dimension 2.
TorusClass classify_strongly_integral_torus(const std::vector<AffineMap>& generators);

}  // namespace k3v
