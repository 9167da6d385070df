#include "k3v/families.hpp"

#include <utility>

namespace k3v {

namespace {

using Entry = std::pair<std::size_t, MultiPoly>;

PolyVector vec(std::initializer_list<Entry> entries) {
  PolyVector out(k3::rank);
  for (const auto& [i, c] : entries) out[i] += c;
  return out;
}

MultiPoly P(Var v) { return MultiPoly::var(v); }
MultiPoly P(long c) { return MultiPoly(c); }

const PolyVector& vec_a() {
  static const PolyVector a = e_block_vector(k3::e8b);
  return a;
}

const PolyVector& vec_b() {
  static const PolyVector b = e_block_vector(k3::e8a);
  return b;
}

using Image = std::vector<std::pair<std::size_t, std::int64_t>>;

Isometry from_images(std::initializer_list<std::pair<std::size_t, Image>> images) {
  Isometry m = identity_isometry(k3::rank);
  for (const auto& [col, image] : images) {
    for (std::size_t i = 0; i < k3::rank; ++i) m.matrix[i][col] = 0;
    for (const auto& [row, c] : image) m.matrix[row][col] += c;
  }
  return m;
}

AffineMap translation_map(std::vector<BigRational> b) {
  IntMatrix linear = identity_isometry(b.size()).matrix;
  return make_affine(std::move(linear), std::move(b));
}

// Circle/std phi with step p: v -> v + p y, x -> x - p u.
Isometry phi_matrix(std::int64_t p) {
  using namespace k3;
  return from_images({{v, {{v, 1}, {y, p}}}, {x, {{x, 1}, {u, -p}}}});
}

PeriodTriple circle_triple() {
  using namespace k3;
  const MultiPoly s = P(Var::s);
  PeriodTriple t;
  t.f1 = vec({{u, 2}, {v, 1}, {y, s}});
  t.f2 = add(vec({{x, 1}, {u, -s}, {y, 2}}), vec_a());
  t.f3 = add(vec({{z, 1}, {k3::t, 2}}), vec_b());
  t.params = make_varset({Var::s});
  return t;
}

PeriodTriple torus_standard_triple() {
  using namespace k3;
  const MultiPoly s = P(Var::s);
  const MultiPoly r = P(Var::r);
  PeriodTriple t;
  t.f1 = vec({{u, 2}, {v, 1}, {y, s}, {k3::t, r}});
  t.f2 = add(vec({{x, 1}, {u, -s}, {y, 2}}), vec_a());
  t.f3 = add(vec({{z, 1}, {u, -r}, {k3::t, 2}}), vec_b());
  t.params = make_varset({Var::s, Var::r});
  return t;
}

PeriodTriple torus_npq_triple(const MultiPoly& n, const MultiPoly& q) {
  using namespace k3;
  const MultiPoly s = P(Var::s);
  const MultiPoly r = P(Var::r);
  PeriodTriple t;
  t.f1 = vec({{u, 2}, {v, 1}, {y, s}, {k3::t, r}});
  t.f2 = add(vec({{x, q}, {u, n * r * r - q * s}, {z, -(n * r)}, {y, q.scaled(2)}}), vec_a());
  t.f3 = add(vec({{z, 1}, {u, -r}, {k3::t, (q * q).scaled(2)}, {y, (n * q * r).scaled(2)}}), vec_b());
  t.params = make_varset({Var::s, Var::r});
  return t;
}

}  // namespace

std::vector<Var> FamilySpec::params() const {
  if (name == FamilyName::Circle) return {Var::s};
  return {Var::s, Var::r};
}

std::string family_name_string(FamilyName name) {
  switch (name) {
    case FamilyName::Circle:
      return "circle";
    case FamilyName::TorusStandard:
      return "torus-std";
    case FamilyName::TorusNpq:
      return "torus";
  }
  return "unknown";
}

std::string FamilySpec::descriptor() const {
  std::string out = family_name_string(name);
  if (symbolic) return out + "(n,p,q symbolic)";
  if (npq) {
    out += "(n=" + std::to_string((*npq)[0]) + ",p=" + std::to_string((*npq)[1]) +
           ",q=" + std::to_string((*npq)[2]) + ")";
  }
  return out;
}

FamilySpec build_family(FamilyName name, std::int64_t n, std::int64_t p, std::int64_t q) {
  using namespace k3;
  FamilySpec f;
  f.name = name;
  switch (name) {
    case FamilyName::Circle:
      f.triple = circle_triple();
      f.generators.push_back({phi_matrix(1), translation_map({1}), "phi"});
      break;
    case FamilyName::TorusStandard:
      f.triple = torus_standard_triple();
      f.generators.push_back({phi_matrix(1), translation_map({1, 0}), "phi"});
      f.generators.push_back({from_images({{v, {{v, 1}, {k3::t, 1}}}, {z, {{z, 1}, {u, -1}}}}),
                              translation_map({0, 1}), "psi"});
      break;
    case FamilyName::TorusNpq: {
      if (n < 1 || p < 1 || q < 1) throw std::invalid_argument("torus family needs n, p, q >= 1");
      f.npq = std::array<std::int64_t, 3>{n, p, q};
      f.triple = torus_npq_triple(P(n), P(q));
      f.generators.push_back({phi_matrix(p), translation_map({BigRational(p), 0}), "phi"});
      const Isometry psi = from_images({{v, {{v, 1}, {k3::t, q}}},
                                        {x, {{x, 1}, {z, -n}, {u, q * n}}},
                                        {z, {{z, 1}, {u, -q}}},
                                        {k3::t, {{k3::t, 1}, {y, n}}}});
      f.generators.push_back({psi, make_affine({{1, n}, {0, 1}}, {0, BigRational(q)}), "psi"});
      break;
    }
  }
  return f;
}

FamilySpec build_symbolic_npq() {
  FamilySpec f;
  f.name = FamilyName::TorusNpq;
  f.symbolic = true;
  f.triple = torus_npq_triple(P(Var::n), P(Var::q));
  return f;
}

EquivarianceResult check_equivariance(const PeriodTriple& triple, const std::vector<Var>& params,
                                      const Generator& generator) {
  EquivarianceResult out;
  std::vector<MultiPoly> point;
  for (Var v : params) point.push_back(P(v));
  const std::vector<MultiPoly> image = k3v::apply(generator.action, point);
  Bindings shift;
  std::string from, to;
  for (std::size_t i = 0; i < params.size(); ++i) {
    shift[params[i]] = image[i];
    from += (i ? ", " : "") + std::string(name_of(params[i]));
    to += (i ? ", " : "") + image[i].to_string();
  }
  out.shift = params.size() == 1 ? from + " -> " + to : "(" + from + ") -> (" + to + ")";

  const PolyVector* comps[3] = {&triple.f1, &triple.f2, &triple.f3};
  std::array<PolyVector, 3> moved, shifted;
  std::array<bool, 3> equal{};
  for (int k = 0; k < 3; ++k) {
    moved[k] = apply(generator.gamma, *comps[k]);
    shifted[k].reserve(k3::rank);
    for (const auto& c : *comps[k]) shifted[k].push_back(substitute(c, shift));
    equal[k] = moved[k] == shifted[k];
  }

  const auto first_diff = [&](int k) {
    for (std::size_t i = 0; i < moved[k].size(); ++i) {
      if (moved[k][i] != shifted[k][i]) {
        return "f" + std::to_string(k + 1) + "[" + std::to_string(i) + "]: " +
               moved[k][i].to_string() + " vs " + shifted[k][i].to_string();
      }
    }
    return std::string();
  };

  const std::string label = "equivariance." + generator.label;
  if (equal[0] && equal[1] && equal[2]) {
    out.mode = EquivarianceMode::Exact;
    out.report.add(label, true, "exact, " + out.shift);
    return out;
  }
  if (!equal[0]) {
    out.first_difference = first_diff(0);
    out.report.add(label, false, out.shift, out.first_difference);
    return out;
  }

  // gamma f2 = c f2' - d f3', gamma f3 = d f2' + c f3' for one rational (c, d).
  std::optional<std::pair<BigRational, BigRational>> scalar;
  for (std::size_t i = 0; i < k3::rank && !scalar; ++i) {
    for (const auto& [m, alpha] : shifted[1][i].terms()) {
      const BigRational beta = shifted[2][i].coefficient(m);
      const BigRational g2 = moved[1][i].coefficient(m);
      const BigRational g3 = moved[2][i].coefficient(m);
      const BigRational det = alpha * alpha + beta * beta;
      scalar.emplace((alpha * g2 + beta * g3) / det, (alpha * g3 - beta * g2) / det);
      break;
    }
    if (scalar) break;
    for (const auto& [m, beta] : shifted[2][i].terms()) {
      const BigRational g2 = moved[1][i].coefficient(m);
      const BigRational g3 = moved[2][i].coefficient(m);
      scalar.emplace(g3 / beta, -g2 / beta);
      break;
    }
  }
  if (scalar && (scalar->first != 0 || scalar->second != 0)) {
    const auto& [c, d] = *scalar;
    bool ok = true;
    for (std::size_t i = 0; i < k3::rank && ok; ++i) {
      ok = moved[1][i] == shifted[1][i].scaled(c) - shifted[2][i].scaled(d) &&
           moved[2][i] == shifted[1][i].scaled(d) + shifted[2][i].scaled(c);
    }
    if (ok) {
      out.mode = EquivarianceMode::Projective;
      out.c = c;
      out.d = d;
      out.report.add(label, true,
                     "projective, scalar " + to_string(c) + " + " + to_string(d) + "i, " + out.shift);
      return out;
    }
  }
  out.first_difference = equal[1] ? first_diff(2) : first_diff(1);
  out.report.add(label, false, out.shift, out.first_difference);
  return out;
}

EquivarianceResult check_equivariance(const FamilySpec& family, std::size_t generator_index) {
  if (generator_index >= family.generators.size()) {
    throw std::out_of_range("check_equivariance: generator index");
  }
  return check_equivariance(family.triple, family.params(), family.generators[generator_index]);
}

LinearVariation linear_variation(const PolyVector& f1, const std::vector<Var>& params) {
  using Kind = LinearVariationError::Kind;
  VarSet pset;
  for (Var v : params) pset.set(index_of(v));
  LinearVariation out;
  out.base.assign(f1.size(), 0);
  out.coefficients.assign(params.size(), IntVector(f1.size(), 0));

  const auto to_int = [](const MultiPoly& c, std::size_t coord) -> std::int64_t {
    if (!c.is_constant()) {
      throw LinearVariationError(Kind::NotAffineInParams,
                                 "coordinate " + std::to_string(coord) + " has non-constant coefficient " +
                                     c.to_string());
    }
    const BigRational value = c.constant_term();
    if (!is_integer(value)) {
      throw LinearVariationError(Kind::NonIntegralCoefficients,
                                 "coordinate " + std::to_string(coord) + " has coefficient " + to_string(value));
    }
    return value.get_num().get_si();
  };

  for (std::size_t i = 0; i < f1.size(); ++i) {
    for (const auto& [m, residual] : coefficient_split(f1[i], pset)) {
      if (m.is_one()) {
        out.base[i] = to_int(residual, i);
        continue;
      }
      if (m.degree() != 1) {
        throw LinearVariationError(Kind::NotAffineInParams,
                                   "coordinate " + std::to_string(i) + " contains " + m.to_string());
      }
      for (std::size_t k = 0; k < params.size(); ++k) {
        if (m[params[k]] == 1) out.coefficients[k][i] = to_int(residual, i);
      }
    }
  }

  // Rank of the coefficient vectors over Q.
  std::vector<std::vector<BigRational>> rows;
  for (const auto& c : out.coefficients) {
    std::vector<BigRational> row(c.begin(), c.end());
    for (const auto& prev : rows) {
      std::size_t lead = 0;
      while (prev[lead] == 0) ++lead;
      const BigRational f = row[lead] / prev[lead];
      if (f != 0) {
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prev[j];
      }
    }
    bool zero = true;
    for (const auto& x : row) zero = zero && x == 0;
    if (zero) throw LinearVariationError(Kind::DependentCoefficients, "coefficient vectors are dependent");
    rows.push_back(std::move(row));
  }
  return out;
}

LinearVariation linear_variation(const FamilySpec& family) {
  return linear_variation(family.triple.f1, family.params());
}

bool verify_generator_relations(const FamilySpec& family) {
  if (family.generators.size() != 2) {
    throw std::invalid_argument("verify_generator_relations: family needs two generators");
  }
  const IntMatrix& a = family.generators[0].gamma.matrix;
  const IntMatrix& b = family.generators[1].gamma.matrix;
  return multiply(a, b) == multiply(b, a);
}

}  // namespace k3v
