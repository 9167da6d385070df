#include <stdexcept>

#include "k3v/rootcheck.hpp"

namespace k3v {

namespace {

const LatticeSpace& k3_space() {
  static const LatticeSpace space = build(SpaceKind::K3);
  return space;
}

PolyVector symbolic_root() {
  PolyVector d(k3::rank);
  const Var w[] = {Var::A, Var::B, Var::C, Var::D, Var::E, Var::F};
  for (int i = 0; i < 6; ++i) d[i] = MultiPoly::var(w[i]);
  for (int j = 0; j < 8; ++j) {
    d[k3::e8a + j] = MultiPoly::var(d_var(1, j));
    d[k3::e8b + j] = MultiPoly::var(d_var(2, j));
  }
  return d;
}

std::int64_t e8_norm(const IntVector& x) {
  const IntMatrix& c = e8_cartan();
  std::int64_t total = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) total += x[i] * c[i][j] * x[j];
  }
  return total;
}

// Ratio lambda with a = lambda * b, if any.
std::optional<BigRational> proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const BigRational lambda = a.terms().front().second / b.terms().front().second;
  if (a == b.scaled(lambda)) return lambda;
  return std::nullopt;
}

}  // namespace

IntVector RootCandidate::assemble() const {
  IntVector out(k3::rank, 0);
  for (int i = 0; i < 6; ++i) out[i] = w[i];
  for (int j = 0; j < 8; ++j) {
    out[k3::e8a + j] = d1[j];
    out[k3::e8b + j] = d2[j];
  }
  return out;
}

std::int64_t RootCandidate::n1() const { return e8_norm(d1) / 2; }
std::int64_t RootCandidate::n2() const { return e8_norm(d2) / 2; }

std::int64_t RootCandidate::norm() const {
  return 2 * (w[0] * w[1] + w[2] * w[3] + w[4] * w[5]) - 2 * n1() - 2 * n2();
}

std::string RootCandidate::to_string() const {
  const auto list = [](auto begin, auto end) {
    std::string s = "(";
    for (auto it = begin; it != end; ++it) s += (it == begin ? "" : ",") + std::to_string(*it);
    return s + ")";
  };
  return "w=" + list(w.begin(), w.end()) + " d1=" + list(d1.begin(), d1.end()) +
         " d2=" + list(d2.begin(), d2.end());
}

MultiPoly pairing_with_e(int block) {
  const IntMatrix& c = e8_cartan();
  MultiPoly out;
  for (int k = 0; k < 8; ++k) {
    MultiPoly cd;
    for (int j = 0; j < 8; ++j) {
      if (c[k][j] != 0) cd += MultiPoly::var(d_var(block, j)).scaled(BigRational(c[k][j]));
    }
    out -= cd * MultiPoly::var(e_var(k));
  }
  return out;
}

MultiPoly block_norm(int block) {
  const IntMatrix& c = e8_cartan();
  MultiPoly out;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (c[i][j] != 0) {
        out += (MultiPoly::var(d_var(block, i)) * MultiPoly::var(d_var(block, j))).scaled(make_rational(c[i][j], 2));
      }
    }
  }
  return out;
}

OrthoSystem derive_ortho_system(const PeriodTriple& triple) {
  const LatticeSpace& space = k3_space();
  const PolyVector d = symbolic_root();
  OrthoSystem sys;
  for (const PolyVector* f : {&triple.f1, &triple.f2, &triple.f3}) sys.equations.push_back(inner(space, d, *f));
  sys.norm_equation = inner(space, d, d) + MultiPoly(2L);
  return sys;
}

OrthoSystem derive_ortho_system(const FamilySpec& family) { return derive_ortho_system(family.triple); }

OrthoSystem expected_system(const FamilySpec& family) {
  const MultiPoly p1 = pairing_with_e(1);
  const MultiPoly p2 = pairing_with_e(2);
  OrthoSystem sys;
  sys.norm_equation = parse_poly("A*B + C*D + E*F + 1") - block_norm(1) - block_norm(2);
  switch (family.name) {
    case FamilyName::Circle:
      sys.equations = {parse_poly("2*B + A + C*s"), parse_poly("D - B*s + 2*C") + p2,
                       parse_poly("F + 2*E") + p1};
      break;
    case FamilyName::TorusStandard:
      sys.equations = {parse_poly("2*B + A + C*s + E*r"), parse_poly("D - B*s + 2*C") + p2,
                       parse_poly("F - B*r + 2*E") + p1};
      break;
    case FamilyName::TorusNpq: {
      sys.equations = {parse_poly("2*B + A + C*s + E*r"),
                       parse_poly("D*q + B*(n*r^2 - q*s) - F*n*r + 2*C*q") + p2,
                       parse_poly("F - B*r + 2*E*q^2 + 2*C*n*q*r") + p1};
      if (!family.symbolic) {
        const Bindings nq{{Var::n, MultiPoly(static_cast<long>((*family.npq)[0]))},
                          {Var::q, MultiPoly(static_cast<long>((*family.npq)[2]))}};
        for (auto& e : sys.equations) e = substitute(e, nq);
      }
      break;
    }
  }
  return sys;
}

SystemMatch match_expected_system(const FamilySpec& family) {
  const OrthoSystem derived = derive_ortho_system(family);
  const OrthoSystem expected = expected_system(family);
  SystemMatch out;
  std::vector<bool> used(derived.equations.size(), false);
  for (std::size_t i = 0; i < expected.equations.size(); ++i) {
    std::string detail = "no derived equation matches " + expected.equations[i].to_string();
    bool found = false;
    for (std::size_t j = 0; j < derived.equations.size() && !found; ++j) {
      if (used[j]) continue;
      if (const auto lambda = proportional(derived.equations[j], expected.equations[i])) {
        used[j] = found = true;
        detail = "(d,f" + std::to_string(j + 1) + ") = " + to_string(*lambda) + " * expected";
      }
    }
    out.report.add("system.eq" + std::to_string(i + 2), found, detail,
                   found ? std::nullopt : std::optional<std::string>(expected.equations[i].to_string()));
  }
  const auto lambda = proportional(derived.norm_equation, expected.norm_equation);
  out.report.add("system.norm", lambda.has_value(),
                 lambda ? "(d,d)+2 = " + to_string(*lambda) + " * expected" : "norm equation differs",
                 lambda ? std::nullopt : std::optional<std::string>((derived.norm_equation - expected.norm_equation).to_string()));
  out.matched = out.report.passed();
  return out;
}

PeriodTriple control_triple(ControlKind kind) {
  using namespace k3;
  PeriodTriple t;
  t.f1 = embed(basis_vector(rank, u));
  t.f1[v] = MultiPoly(1L);
  t.f2 = PolyVector(rank);
  t.f3 = PolyVector(rank);
  t.f2[x] = MultiPoly(1L);
  t.f3[z] = MultiPoly(1L);
  if (kind == ControlKind::Hyperbolic) {
    t.f2[y] = MultiPoly(1L);
    t.f3[k3::t] = MultiPoly(1L);
  } else {
    t.f2[y] = MultiPoly(2L);
    t.f3[k3::t] = MultiPoly(2L);
    t.f2 = add(t.f2, e_block_vector(e8b));
    t.f3 = add(t.f3, e_block_vector(e8a));
  }
  return t;
}

}  // namespace k3v
