#include "k3v/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3v {

namespace {

std::vector<std::vector<BigRational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<BigRational>> out(m.size(), std::vector<BigRational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = BigRational(m[i][j]);
  }
  return out;
}

// Gauss-Jordan inverse; throws if singular.
std::vector<std::vector<BigRational>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  auto a = to_rational(m);
  std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular linear part");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const BigRational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const BigRational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool is_identity(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool integer_at_least_one(const BigRational& x) { return is_integer(x) && x >= 1; }

}  // namespace

AffineMap make_affine(IntMatrix linear, std::vector<BigRational> translation) {
  const std::size_t n = translation.size();
  if (linear.size() != n) throw std::invalid_argument("affine map: shape mismatch");
  for (const auto& row : linear) {
    if (row.size() != n) throw std::invalid_argument("affine map: linear part not square");
  }
  const BigInt det = determinant(LatticeSpace{"linear", linear, {}});
  if (det != 1 && det != -1) throw std::invalid_argument("affine map: linear part not in GL(Z)");
  return {std::move(linear), std::move(translation)};
}

AffineMap affine_identity(std::size_t dim) {
  return {identity_isometry(dim).matrix, std::vector<BigRational>(dim)};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("compose: dimension mismatch");
  AffineMap out{multiply(f.linear, g.linear), f.translation};
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t j = 0; j < f.dim(); ++j) out.translation[i] += f.linear[i][j] * g.translation[j];
  }
  return out;
}

AffineMap invert(const AffineMap& f) {
  const auto inv = rational_inverse(f.linear);
  AffineMap out{IntMatrix(f.dim(), IntVector(f.dim())), std::vector<BigRational>(f.dim())};
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t j = 0; j < f.dim(); ++j) {
      if (!is_integer(inv[i][j])) throw std::invalid_argument("invert: linear part not in GL(Z)");
      out.linear[i][j] = inv[i][j].get_num().get_si();
      out.translation[i] -= inv[i][j] * f.translation[j];
    }
  }
  return out;
}

std::vector<MultiPoly> apply(const AffineMap& f, const std::vector<MultiPoly>& point) {
  if (point.size() != f.dim()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    MultiPoly x(f.translation[i]);
    for (std::size_t j = 0; j < f.dim(); ++j) {
      if (f.linear[i][j] != 0) x += point[j].scaled(BigRational(f.linear[i][j]));
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool is_strongly_integral(const AffineMap& f) {
  return std::all_of(f.translation.begin(), f.translation.end(),
                     [](const BigRational& b) { return is_integer(b); });
}

std::string TorusClass::to_string() const {
  switch (tag) {
    case TorusTag::Standard:
      return "Standard";
    case TorusTag::NonStandard:
      return "NonStandard(" + std::to_string(n) + "," + std::to_string(p) + "," +
             std::to_string(q) + ")";
    case TorusTag::Unrecognized:
      break;
  }
  return "Unrecognized";
}

TorusClass classify_strongly_integral_torus(const std::vector<AffineMap>& generators) {
  if (generators.size() != 2) throw std::invalid_argument("classify: expected two generators");
  for (const auto& g : generators) {
    if (g.dim() != 2 || g.linear.size() != 2) throw std::invalid_argument("classify: expected dimension 2");
  }
  std::vector<AffineMap> gens = generators;
  std::stable_partition(gens.begin(), gens.end(),
                        [](const AffineMap& g) { return is_identity(g.linear); });
  const AffineMap& g1 = gens[0];
  const AffineMap& g2 = gens[1];
  TorusClass out;
  if (!is_identity(g1.linear)) return out;

  const auto& b1 = g1.translation;
  const auto& b2 = g2.translation;
  if (is_identity(g2.linear)) {
    const bool forward = b1[0] == 1 && b1[1] == 0 && b2[0] == 0 && b2[1] == 1;
    const bool swapped = b2[0] == 1 && b2[1] == 0 && b1[0] == 0 && b1[1] == 1;
    if (forward || swapped) {
      out.tag = TorusTag::Standard;
      out.free_and_proper = true;
    }
    return out;
  }
  const IntMatrix& a2 = g2.linear;
  const bool shear = a2[0][0] == 1 && a2[1][0] == 0 && a2[1][1] == 1 && a2[0][1] >= 1;
  if (shear && integer_at_least_one(b1[0]) && b1[1] == 0 && b2[0] == 0 &&
      integer_at_least_one(b2[1])) {
    out.tag = TorusTag::NonStandard;
    out.n = a2[0][1];
    out.p = b1[0].get_num().get_si();
    out.q = b2[1].get_num().get_si();
    out.free_and_proper = true;
  }
  return out;
}

}  // namespace k3v
