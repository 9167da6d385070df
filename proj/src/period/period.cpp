#include "k3v/period.hpp"

#include <optional>

namespace k3v {

namespace {

const LatticeSpace& k3_space() {
  static const LatticeSpace space = build(SpaceKind::K3);
  return space;
}

void add_identity(CheckReport& report, const std::string& name, const MultiPoly& difference,
                  const std::string& detail) {
  report.add(name, difference.is_zero(), detail,
             difference.is_zero() ? std::nullopt : std::optional<std::string>(difference.to_string()));
}

std::string profile_text(const NormProfile& p) {
  return "(" + p.constant_part.to_string() + ", " + to_string(p.e_coefficient) + ")";
}

// Minimum of c over integers n, p, q >= 1 when every non-constant
// coefficient is non-negative: the value at n = p = q = 1.
std::optional<BigRational> lower_bound(const MultiPoly& c) {
  const VarSet integer_params = make_varset({Var::n, Var::p, Var::q});
  BigRational sum = 0;
  for (const auto& [m, coef] : c.terms()) {
    if (!m.is_one() && (coef < 0 || m.uses_any(~integer_params))) return std::nullopt;
    sum += coef;
  }
  return sum;
}

}  // namespace

NormProfile norm_profile(const LatticeSpace& space, const PolyVector& v) {
  const MultiPoly norm = inner(space, v, v);
  auto split = coefficient_split(norm, e_vars());
  NormProfile out;
  const auto one = split.find(Monomial{});
  if (one != split.end()) {
    out.constant_part = one->second;
    split.erase(one);
  }
  MultiPoly e_part = reassemble(split);
  // Q_e has coefficient -2 on e1^2.
  const MultiPoly lead = coefficient_split(e_part, e_vars())[Monomial(Var::e1, 2)];
  if (!lead.is_constant()) {
    throw NonStandardEPart("e-part coefficient depends on parameters: " + lead.to_string());
  }
  out.e_coefficient = lead.constant_term() / -2;
  const MultiPoly rest = e_part - e_form().scaled(out.e_coefficient);
  if (!rest.is_zero()) {
    throw NonStandardEPart("e-part is not a multiple of Q_e: " + rest.to_string());
  }
  return out;
}

CheckReport check_omega(const PeriodTriple& triple) {
  const LatticeSpace& space = k3_space();
  CheckReport report;
  const MultiPoly n22 = inner(space, triple.f2, triple.f2);
  const MultiPoly n33 = inner(space, triple.f3, triple.f3);
  add_identity(report, "omega.norm_equal", n22 - n33, "(f2,f2) - (f3,f3)");
  add_identity(report, "omega.orthogonal", inner(space, triple.f2, triple.f3), "(f2,f3)");
  try {
    const NormProfile p = norm_profile(space, triple.f2);
    // c - |lambda| * |Q_e| >= c - |lambda|/2 under the e-norm contract.
    const auto c = lower_bound(p.constant_part);
    const BigRational margin = c.value_or(0) - abs(p.e_coefficient) / 2;
    const bool ok = c && margin > 0;
    report.add("omega.positivity", ok, "profile of f2 " + profile_text(p) + ", margin " + to_string(margin),
               ok ? std::nullopt : std::optional<std::string>(n22.to_string()));
  } catch (const NonStandardEPart& err) {
    report.add("omega.positivity", false, "profile of f2 unavailable", std::string(err.what()));
  }
  return report;
}

CheckReport check_komega(const PeriodTriple& triple) {
  const LatticeSpace& space = k3_space();
  CheckReport report = check_omega(triple);
  try {
    const NormProfile p = norm_profile(space, triple.f1);
    const auto c = lower_bound(p.constant_part);
    const bool ok = p.e_coefficient == 0 && c && *c > 0;
    report.add("komega.f1_positive", ok, "profile of f1 " + profile_text(p),
               ok ? std::nullopt : std::optional<std::string>(inner(space, triple.f1, triple.f1).to_string()));
  } catch (const NonStandardEPart& err) {
    report.add("komega.f1_positive", false, "profile of f1 unavailable", std::string(err.what()));
  }
  add_identity(report, "komega.f1_f2", inner(space, triple.f1, triple.f2), "(f1,f2)");
  add_identity(report, "komega.f1_f3", inner(space, triple.f1, triple.f3), "(f1,f3)");
  return report;
}

}  // namespace k3v
