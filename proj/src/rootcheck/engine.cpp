#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "k3v/rootcheck.hpp"

namespace k3v {

namespace {

const LatticeSpace& k3_space() {
  static const LatticeSpace space = build(SpaceKind::K3);
  return space;
}

enum class Action { Drop, Vanish, HighDegree, Pivot, Resultant, Discriminant, Solution, Stuck };

struct Step {
  std::vector<std::vector<Monomial>> supports;  // param monomials present per equation
  Action action = Action::Stuck;
  std::size_t eq = 0;
  Var param = Var::s;
  std::string value;
};

// Label plus the step whose value it carries (-1: the value is "0").
using Label = std::pair<std::string, int>;

Exponent e_degree(const MultiPoly& p) { return p.degree_in(e_vars()); }

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][col] * determinant(std::move(minor));
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Sylvester resultant in v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
  const auto fc = f.coefficients_in(v);
  const auto gc = g.coefficients_in(v);
  const std::size_t df = fc.size() - 1;
  const std::size_t dg = gc.size() - 1;
  const std::size_t n = df + dg;
  if (n == 0) return MultiPoly(1L);
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < dg; ++i) {
    for (std::size_t k = 0; k <= df; ++k) s[i][i + k] = fc[df - k];
  }
  for (std::size_t i = 0; i < df; ++i) {
    for (std::size_t k = 0; k <= dg; ++k) s[dg + i][i + k] = gc[dg - k];
  }
  return determinant(std::move(s));
}

MultiPoly discriminant(const MultiPoly& quadratic, Var v) {
  const auto c = quadratic.coefficients_in(v);
  return c[1] * c[1] - (c[2] * c[0]).scaled(4);
}

std::vector<std::vector<BigRational>> cartan_inverse() {
  const IntMatrix& c = e8_cartan();
  std::vector<std::vector<BigRational>> a(8, std::vector<BigRational>(8));
  std::vector<std::vector<BigRational>> inv(8, std::vector<BigRational>(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) a[i][j] = BigRational(c[i][j]);
    inv[i][i] = 1;
  }
  for (int col = 0; col < 8; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const BigRational p = a[col][col];
    for (int j = 0; j < 8; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int i = 0; i < 8; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const BigRational f = a[i][col];
      for (int j = 0; j < 8; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::string step_key(const std::vector<Step>& steps) {
  std::string key;
  for (const auto& st : steps) {
    key += std::to_string(static_cast<int>(st.action)) + ":" + std::to_string(st.eq) + ":" +
           std::string(name_of(st.param)) + "[";
    for (const auto& sup : st.supports) {
      for (const auto& m : sup) key += m.to_string() + ",";
      key += ";";
    }
    key += "]";
  }
  return key;
}

}  // namespace

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Excluded:
      return "Excluded";
    case Verdict::SolutionFound:
      return "SolutionFound";
    case Verdict::Inconclusive:
      break;
  }
  return "Inconclusive";
}

std::string witness_kind_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::NormViolation:
      return "norm";
    case WitnessKind::Vanishing:
      return "vanishing";
    case WitnessKind::Resultant:
      return "resultant";
    case WitnessKind::NegativeDiscriminant:
      return "negative-discriminant";
    case WitnessKind::None:
      break;
  }
  return "none";
}

std::string ExclusionOutcome::path() const {
  std::string out;
  for (const auto& t : trace) {
    out += t.split + (t.value == "0" ? " = 0" : " != 0") + "; ";
  }
  out += verdict_string(verdict);
  if (kind != WitnessKind::None) out += "(" + witness_kind_string(kind) + ")";
  return out;
}

BigRational pairing_bound(const std::vector<BigRational>& g) {
  static const auto inv = cartan_inverse();
  if (g.size() != 8) throw std::invalid_argument("pairing_bound: expected 8 coefficients");
  BigRational total = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) total += g[i] * inv[i][j] * g[j];
  }
  return total / 2;
}

BigRational cauchy_schwarz_bound(const IntVector& d2) {
  if (d2.size() != 8) throw std::invalid_argument("cauchy_schwarz_bound: expected an E8 vector");
  const IntMatrix& c = e8_cartan();
  std::vector<BigRational> g(8);
  for (int k = 0; k < 8; ++k) {
    for (int j = 0; j < 8; ++j) g[k] -= BigRational(c[k][j] * d2[j]);
  }
  return pairing_bound(g);
}

struct ExclusionEngine::Impl {
  std::vector<Var> params;
  VarSet param_set;
  std::vector<PolyVector> gram_f;  // G f_i
  std::vector<MultiPoly> shadow_start;
  mutable std::mutex mutex;
  mutable std::unordered_map<std::string, std::vector<Label>> cache;

  std::vector<Monomial> support_of(const MultiPoly& eq) const {
    std::vector<Monomial> keys;
    for (const auto& [m, c] : coefficient_split(eq, param_set)) keys.push_back(m);
    return keys;
  }

  std::vector<Label> replay(const std::vector<Step>& steps) const {
    std::vector<MultiPoly> shadow = shadow_start;
    std::vector<Label> labels;
    for (std::size_t si = 0; si < steps.size(); ++si) {
      const Step& st = steps[si];
      const int slot = static_cast<int>(si);
      for (std::size_t i = 0; i < shadow.size() && i < st.supports.size(); ++i) {
        std::map<Monomial, MultiPoly> absent;
        for (const auto& [m, coef] : coefficient_split(shadow[i], param_set)) {
          if (!std::binary_search(st.supports[i].begin(), st.supports[i].end(), m)) {
            labels.emplace_back(coef.to_string(), -1);
            absent.emplace(m, coef);
          }
        }
        if (!absent.empty()) shadow[i] -= reassemble(absent);
      }
      switch (st.action) {
        case Action::Drop:
          shadow.erase(shadow.begin() + static_cast<std::ptrdiff_t>(st.eq));
          break;
        case Action::Vanish:
        case Action::HighDegree:
          labels.emplace_back("residual " + shadow[st.eq].to_string(), slot);
          break;
        case Action::Pivot: {
          const auto coeffs = shadow[st.eq].coefficients_in(st.param);
          const MultiPoly lead = coeffs.size() > 1 ? coeffs[1] : MultiPoly();
          labels.emplace_back(lead.is_zero() ? std::string("?") : lead.to_string(), slot);
          if (!lead.is_zero()) {
            const MultiPoly rest = -coeffs[0];
            for (std::size_t j = 0; j < shadow.size(); ++j) {
              if (j != st.eq) shadow[j] = substitute_cleared(shadow[j], st.param, rest, lead);
            }
          }
          shadow.erase(shadow.begin() + static_cast<std::ptrdiff_t>(st.eq));
          break;
        }
        case Action::Resultant:
          labels.emplace_back("resultant in " + std::string(name_of(st.param)), slot);
          break;
        case Action::Discriminant: {
          const MultiPoly& eq = shadow[st.eq];
          const std::string disc = eq.degree_in(st.param) == 2 ? discriminant(eq, st.param).to_string() : "?";
          labels.emplace_back("discriminant " + disc, slot);
          break;
        }
        case Action::Solution:
          labels.emplace_back("solution", slot);
          break;
        case Action::Stuck:
          labels.emplace_back("unresolved", slot);
          break;
      }
    }
    return labels;
  }

  std::vector<TraceEntry> trace_for(const std::vector<Step>& steps) const {
    const std::string key = step_key(steps);
    std::vector<Label> labels;
    {
      std::lock_guard<std::mutex> lock(mutex);
      const auto it = cache.find(key);
      if (it != cache.end()) labels = it->second;
    }
    if (labels.empty()) {
      labels = replay(steps);
      std::lock_guard<std::mutex> lock(mutex);
      cache.emplace(key, labels);
    }
    std::vector<TraceEntry> trace;
    for (const auto& [label, slot] : labels) {
      trace.push_back({label, slot < 0 ? std::string("0") : steps[static_cast<std::size_t>(slot)].value});
    }
    return trace;
  }

  ExclusionOutcome run(const RootCandidate& cand) const;
};

ExclusionOutcome ExclusionEngine::Impl::run(const RootCandidate& cand) const {
  ExclusionOutcome out;
  const std::int64_t norm = cand.norm() + 2;
  if (norm != 0) {
    out.verdict = Verdict::Excluded;
    out.kind = WitnessKind::NormViolation;
    out.witness = MultiPoly(static_cast<long>(norm));
    out.trace.push_back({"(d,d)+2", std::to_string(norm)});
    return out;
  }

  const IntVector d = cand.assemble();
  std::vector<MultiPoly> eqs;
  for (const auto& gf : gram_f) {
    std::vector<MultiPoly::Term> acc;
    for (std::size_t k = 0; k < k3::rank; ++k) {
      if (d[k] == 0) continue;
      for (const auto& [m, c] : gf[k].terms()) acc.emplace_back(m, c * d[k]);
    }
    eqs.push_back(MultiPoly::from_terms(std::move(acc)));
  }

  std::vector<Step> steps;
  std::vector<std::pair<Var, MultiPoly>> solved;
  const auto finish = [&](Verdict verdict, WitnessKind kind, MultiPoly witness, std::string reason) {
    out.verdict = verdict;
    out.kind = kind;
    out.witness = std::move(witness);
    out.reason = std::move(reason);
    out.trace = trace_for(steps);
    if (verdict == Verdict::SolutionFound) {
      for (Var v : params) {
        std::string value = "free";
        for (const auto& [sv, expr] : solved) {
          if (sv == v) value = expr.to_string();
        }
        out.solution.emplace_back(std::string(name_of(v)), value);
      }
    }
    return out;
  };

  for (;;) {
    Step st;
    for (const auto& eq : eqs) st.supports.push_back(support_of(eq));

    // Parameter-free equations either vanish or contradict independence.
    const auto free_it = std::find_if(eqs.begin(), eqs.end(),
                                      [&](const MultiPoly& eq) { return !eq.uses_any(param_set); });
    if (free_it != eqs.end()) {
      st.eq = static_cast<std::size_t>(free_it - eqs.begin());
      if (free_it->is_zero()) {
        st.action = Action::Drop;
        steps.push_back(st);
        eqs.erase(free_it);
        continue;
      }
      const MultiPoly witness = primitive_integer_form(*free_it);
      st.value = witness.to_string();
      if (e_degree(*free_it) <= 2) {
        st.action = Action::Vanish;
        steps.push_back(st);
        return finish(Verdict::Excluded, WitnessKind::Vanishing, witness,
                      "parameter-free equation is a nonzero polynomial in e");
      }
      st.action = Action::HighDegree;
      steps.push_back(st);
      return finish(Verdict::Inconclusive, WitnessKind::None, MultiPoly(),
                    "e-degree above 2 in " + witness.to_string());
    }

    if (eqs.empty()) {
      st.action = Action::Solution;
      st.value = "all equations satisfied";
      steps.push_back(st);
      return finish(Verdict::SolutionFound, WitnessKind::None, MultiPoly(), "every equation eliminated");
    }

    // Linear pivot with a nonzero rational leading coefficient.
    bool pivoted = false;
    for (Var v : params) {
      for (std::size_t i = 0; i < eqs.size() && !pivoted; ++i) {
        if (eqs[i].degree_in(v) != 1) continue;
        const auto coeffs = eqs[i].coefficients_in(v);
        if (!coeffs[1].is_constant()) continue;
        const BigRational lead = coeffs[1].constant_term();
        const MultiPoly value = coeffs[0].scaled(-1 / lead);
        st.action = Action::Pivot;
        st.eq = i;
        st.param = v;
        st.value = to_string(lead);
        steps.push_back(st);
        const Bindings bind{{v, value}};
        for (auto& [sv, expr] : solved) expr = substitute(expr, bind);
        solved.emplace_back(v, value);
        eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& eq : eqs) eq = substitute(eq, bind);
        pivoted = true;
      }
      if (pivoted) break;
    }
    if (pivoted) continue;

    std::vector<Var> left;
    for (Var v : params) {
      if (std::any_of(eqs.begin(), eqs.end(), [&](const MultiPoly& eq) { return eq.uses(v); })) left.push_back(v);
    }
    if (left.size() != 1) {
      st.action = Action::Stuck;
      st.value = "several parameters without a linear pivot";
      steps.push_back(st);
      return finish(Verdict::Inconclusive, WitnessKind::None, MultiPoly(), st.value);
    }
    const Var v = left.front();
    const auto lead_constant = [&](const MultiPoly& eq) {
      const auto c = eq.coefficients_in(v);
      return c.back().is_constant() && !c.back().is_zero();
    };

    if (eqs.size() >= 2) {
      st.param = v;
      if (!lead_constant(eqs[0]) || !lead_constant(eqs[1])) {
        st.action = Action::Stuck;
        st.value = "leading coefficient depends on e";
        steps.push_back(st);
        return finish(Verdict::Inconclusive, WitnessKind::None, MultiPoly(), "resultant needs constant leads");
      }
      const MultiPoly res = resultant(eqs[0], eqs[1], v);
      st.action = Action::Resultant;
      if (res.is_zero() || e_degree(res) > 2) {
        st.value = res.is_zero() ? "0" : "degree " + std::to_string(e_degree(res));
        steps.push_back(st);
        return finish(Verdict::Inconclusive, WitnessKind::None, MultiPoly(),
                      res.is_zero() ? "resultant vanishes identically" : "resultant has e-degree above 2");
      }
      const MultiPoly witness = primitive_integer_form(res);
      st.value = witness.to_string();
      steps.push_back(st);
      return finish(Verdict::Excluded, WitnessKind::Resultant, witness, "no common root in " +
                                                                            std::string(name_of(v)));
    }

    const MultiPoly& eq = eqs.front();
    st.eq = 0;
    st.param = v;
    if (eq.degree_in(v) != 2 || !lead_constant(eq)) {
      st.action = Action::Stuck;
      st.value = "single equation of degree " + std::to_string(eq.degree_in(v));
      steps.push_back(st);
      return finish(Verdict::Inconclusive, WitnessKind::None, MultiPoly(), st.value);
    }
    const MultiPoly disc = discriminant(eq, v);
    st.action = Action::Discriminant;
    if (e_degree(disc) > 1) {
      st.value = "quadratic in e";
      steps.push_back(st);
      return finish(Verdict::Inconclusive, WitnessKind::None, MultiPoly(), "discriminant is quadratic in e");
    }
    const BigRational alpha = disc.constant_term();
    std::vector<BigRational> g(8);
    for (int j = 0; j < 8; ++j) g[j] = disc.coefficient(Monomial(e_var(j)));
    const BigRational bound = pairing_bound(g);
    st.value = to_string(alpha);
    steps.push_back(st);
    if (alpha * alpha > bound && alpha < 0) {
      return finish(Verdict::Excluded, WitnessKind::NegativeDiscriminant, primitive_integer_form(disc),
                    "discriminant " + to_string(alpha) + " + L(e) < 0 since L(e)^2 <= " + to_string(bound));
    }
    if (alpha * alpha > bound && alpha > 0) {
      ExclusionOutcome found = finish(Verdict::SolutionFound, WitnessKind::None, MultiPoly(),
                                      "positive discriminant, real roots in " + std::string(name_of(v)));
      for (auto& [name, value] : found.solution) {
        if (name == name_of(v)) value = "real root of " + eq.to_string();
      }
      return found;
    }
    return finish(Verdict::Inconclusive, WitnessKind::None, MultiPoly(),
                  "discriminant sign not certified: alpha " + to_string(alpha) + ", bound " + to_string(bound));
  }
}

ExclusionEngine::ExclusionEngine(const FamilySpec& family) : impl_(std::make_unique<Impl>()) {
  impl_->params = family.params();
  for (Var v : impl_->params) impl_->param_set.set(index_of(v));
  const LatticeSpace& space = k3_space();
  for (const PolyVector* f : {&family.triple.f1, &family.triple.f2, &family.triple.f3}) {
    PolyVector gf(k3::rank);
    for (std::size_t k = 0; k < k3::rank; ++k) {
      for (std::size_t j = 0; j < k3::rank; ++j) {
        if (space.gram[k][j] != 0) gf[k] += (*f)[j].scaled(BigRational(space.gram[k][j]));
      }
    }
    impl_->gram_f.push_back(std::move(gf));
  }
  const FamilySpec shadow_family =
      family.name == FamilyName::TorusNpq && !family.symbolic ? build_symbolic_npq() : family;
  Bindings strip;
  for (int j = 0; j < 8; ++j) {
    strip[d_var(1, j)] = MultiPoly();
    strip[d_var(2, j)] = MultiPoly();
  }
  for (const auto& eq : derive_ortho_system(shadow_family).equations) {
    impl_->shadow_start.push_back(substitute(eq, strip));
  }
}

ExclusionEngine::~ExclusionEngine() = default;

ExclusionOutcome ExclusionEngine::run(const RootCandidate& candidate) const { return impl_->run(candidate); }

std::size_t ExclusionEngine::cached_paths() const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->cache.size();
}

ExclusionOutcome exclusion_certificate(const FamilySpec& family, const RootCandidate& candidate) {
  return ExclusionEngine(family).run(candidate);
}

}  // namespace k3v
