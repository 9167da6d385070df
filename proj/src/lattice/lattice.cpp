#include "k3v/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "short_vectors.hpp"

namespace k3v {

namespace {

LatticeSpace make_u() { return {"U", {{0, 1}, {1, 0}}, {"u", "v"}}; }

LatticeSpace make_e8(bool negate, const std::string& prefix) {
  IntMatrix g = e8_cartan();
  if (negate) {
    for (auto& row : g) {
      for (auto& entry : row) entry = -entry;
    }
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back(prefix + std::to_string(i));
  return {negate ? "-E8" : "E8", g, labels};
}

void check_rank(const LatticeSpace& space, std::size_t a, std::size_t b) {
  if (a != space.rank() || b != space.rank()) {
    throw std::invalid_argument("vector rank does not match lattice '" + space.name + "'");
  }
}

}  // namespace

const IntMatrix& e8_cartan() {
  static const IntMatrix cartan = [] {
    IntMatrix c(8, IntVector(8, 0));
    for (int i = 0; i < 8; ++i) c[i][i] = 2;
    // Bourbaki: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (const auto& [a, b] : edges) {
      c[a - 1][b - 1] = -1;
      c[b - 1][a - 1] = -1;
    }
    return c;
  }();
  return cartan;
}

LatticeSpace direct_sum(const std::vector<LatticeSpace>& summands, std::string name) {
  std::size_t rank = 0;
  for (const auto& s : summands) rank += s.rank();
  LatticeSpace out{std::move(name), IntMatrix(rank, IntVector(rank, 0)), {}};
  std::size_t offset = 0;
  for (const auto& s : summands) {
    for (std::size_t i = 0; i < s.rank(); ++i) {
      for (std::size_t j = 0; j < s.rank(); ++j) out.gram[offset + i][offset + j] = s.gram[i][j];
    }
    out.labels.insert(out.labels.end(), s.labels.begin(), s.labels.end());
    offset += s.rank();
  }
  return out;
}

LatticeSpace build(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::U:
      return make_u();
    case SpaceKind::E8:
      return make_e8(false, "e");
    case SpaceKind::MinusE8:
      return make_e8(true, "e");
    case SpaceKind::K3: {
      LatticeSpace u1{"U", {{0, 1}, {1, 0}}, {"u", "v"}};
      LatticeSpace u2{"U", {{0, 1}, {1, 0}}, {"x", "y"}};
      LatticeSpace u3{"U", {{0, 1}, {1, 0}}, {"z", "t"}};
      return direct_sum({u1, u2, u3, make_e8(true, "e8a_"), make_e8(true, "e8b_")}, "K3");
    }
  }
  throw std::invalid_argument("unknown lattice kind");
}

IntVector basis_vector(std::size_t rank, std::size_t i) {
  IntVector v(rank, 0);
  v.at(i) = 1;
  return v;
}

PolyVector embed(const IntVector& v) {
  PolyVector out;
  out.reserve(v.size());
  for (auto c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

PolyVector zero_poly_vector(std::size_t rank) { return PolyVector(rank); }

PolyVector e_block_vector(std::size_t offset) {
  PolyVector out(k3::rank);
  for (int j = 0; j < 8; ++j) out.at(offset + j) = MultiPoly::var(e_var(j));
  return out;
}

const MultiPoly& e_form() {
  static const MultiPoly form = [] {
    const LatticeSpace minus_e8 = build(SpaceKind::MinusE8);
    PolyVector e(8);
    for (int j = 0; j < 8; ++j) e[j] = MultiPoly::var(e_var(j));
    return inner(minus_e8, e, e);
  }();
  return form;
}

MultiPoly inner(const LatticeSpace& space, const PolyVector& v, const PolyVector& w) {
  check_rank(space, v.size(), w.size());
  MultiPoly total;
  const std::size_t n = space.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    MultiPoly gw;
    for (std::size_t j = 0; j < n; ++j) {
      if (space.gram[i][j] != 0 && !w[j].is_zero()) {
        gw += w[j].scaled(BigRational(space.gram[i][j]));
      }
    }
    if (!gw.is_zero()) total += v[i] * gw;
  }
  return total;
}

std::int64_t inner(const LatticeSpace& space, const IntVector& v, const IntVector& w) {
  check_rank(space, v.size(), w.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < space.rank(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < space.rank(); ++j) total += v[i] * space.gram[i][j] * w[j];
  }
  return total;
}

PolyVector add(const PolyVector& v, const PolyVector& w) {
  if (v.size() != w.size()) throw std::invalid_argument("add: rank mismatch");
  PolyVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[i];
  return out;
}

PolyVector scale(const PolyVector& v, const MultiPoly& c) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * c);
  return out;
}

Isometry identity_isometry(std::size_t rank) {
  Isometry m{IntMatrix(rank, IntVector(rank, 0))};
  for (std::size_t i = 0; i < rank; ++i) m.matrix[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || a.front().size() != b.size()) throw std::invalid_argument("multiply: shape");
  IntMatrix out(a.size(), IntVector(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix out(a.front().size(), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

PolyVector apply(const Isometry& m, const PolyVector& v) {
  if (m.matrix.size() != v.size()) throw std::invalid_argument("apply: rank mismatch");
  PolyVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m.matrix[i][j] != 0 && !v[j].is_zero()) out[i] += v[j].scaled(BigRational(m.matrix[i][j]));
    }
  }
  return out;
}

IntVector apply(const Isometry& m, const IntVector& v) {
  if (m.matrix.size() != v.size()) throw std::invalid_argument("apply: rank mismatch");
  IntVector out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m.matrix[i][j] * v[j];
  }
  return out;
}

bool is_isometry(const LatticeSpace& space, const Isometry& m) {
  if (m.matrix.size() != space.rank()) return false;
  for (const auto& row : m.matrix) {
    if (row.size() != space.rank()) return false;
  }
  return multiply(transpose(m.matrix), multiply(space.gram, m.matrix)) == space.gram;
}

Signature signature(const LatticeSpace& space) {
  const std::size_t n = space.rank();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRational(space.gram[i][j]);
  }
  const auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  // row/col i += row/col j
  const auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
    for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i) {
      if (a[i][i] != 0) piv = i;
    }
    if (piv == n) {
      // Zero diagonal: combine a hyperbolic pair (i, j) with a_ij != 0.
      for (std::size_t i = k; i < n && piv == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j] != 0) {
            add_index(i, j);
            piv = i;
            break;
          }
        }
      }
    }
    if (piv == n) {
      sig.zero += static_cast<int>(n - k);
      break;
    }
    swap_index(k, piv);
    const BigRational pivot = a[k][k];
    (pivot > 0 ? sig.plus : sig.minus) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const BigRational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] -= f * a[j][k];
    }
  }
  return sig;
}

BigInt determinant(const LatticeSpace& space) {
  const std::size_t n = space.rank();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = BigInt(static_cast<long>(space.gram[i][j]));
  }
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_even(const LatticeSpace& space) {
  for (std::size_t i = 0; i < space.rank(); ++i) {
    if (space.gram[i][i] % 2 != 0) return false;
  }
  return true;
}

std::vector<IntVector> enumerate_by_norm(const LatticeSpace& space, std::int64_t target_norm) {
  if (target_norm < 0) throw std::invalid_argument("enumerate_by_norm: negative target");
  const detail::QuadraticForm form = detail::decompose(detail::definite_gram(space));
  const std::vector<std::int64_t> outer = detail::outer_range(form, target_norm);
  std::vector<std::vector<IntVector>> parts(outer.size());
  const auto count = static_cast<std::int64_t>(outer.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    detail::enumerate_with_outer(form, target_norm, outer[i], parts[i]);
  }
  std::vector<IntVector> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3v
