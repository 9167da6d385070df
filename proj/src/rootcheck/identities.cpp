#include "k3v/rootcheck.hpp"

namespace k3v {

namespace {

MultiPoly P(const char* text) { return parse_poly(text); }

MultiPoly with(const MultiPoly& p, std::initializer_list<std::pair<const char*, const char*>> subs) {
  Bindings b;
  for (const auto& [v, img] : subs) b.emplace(parse_var(v), parse_poly(img));
  return substitute(p, b);
}

MultiPoly e_free_part(const MultiPoly& p) {
  const auto split = coefficient_split(p, e_vars());
  const auto it = split.find(Monomial{});
  return it == split.end() ? MultiPoly() : it->second;
}

void expect(CheckReport& report, const std::string& name, const MultiPoly& lhs, const MultiPoly& rhs) {
  const MultiPoly diff = lhs - rhs;
  report.add(name, diff.is_zero(), diff.is_zero() ? "holds" : "lhs - rhs is nonzero",
             diff.is_zero() ? std::nullopt : std::optional<std::string>(diff.to_string()));
}

void circle_identities(CheckReport& report, const MultiPoly& p2, const MultiPoly& n2) {
  const MultiPoly eq3 = P("D - B*s + 2*C") + p2;
  const MultiPoly cleared = substitute_cleared(eq3, Var::s, P("-(2*B + A)"), P("C"));
  const MultiPoly reduced = P("A*B + C*D + 2*B^2 + 2*C^2") + P("C") * p2;
  expect(report, "circle.s_substitution", cleared, reduced);

  const MultiPoly norm1 = P("A*B + C*D + E*F + 1") - n2;  // block 1 vanishes
  expect(report, "circle.combined", with(norm1 - cleared, {{"F", "-2*E"}}),
         MultiPoly(1L) - n2 - P("2*B^2 + 2*C^2 + 2*E^2") - P("C") * p2);
  expect(report, "circle.c_zero", with(norm1, {{"C", "0"}, {"A", "-2*B"}, {"F", "-2*E"}}),
         MultiPoly(1L) - n2 - P("2*B^2 + 2*E^2"));
}

void standard_identities(CheckReport& report, const MultiPoly& p1, const MultiPoly& p2, const MultiPoly& n1,
                         const MultiPoly& n2) {
  const MultiPoly eq2 = P("2*B + A + C*s + E*r");
  const MultiPoly eq3 = P("D - B*s + 2*C") + p2;
  const MultiPoly eq4 = P("F - B*r + 2*E") + p1;
  const MultiPoly norm = P("A*B + C*D + E*F + 1") - n1 - n2;
  const MultiPoly s_num = P("D + 2*C") + p2;
  const MultiPoly r_num = P("F + 2*E") + p1;

  expect(report, "torus-std.b_zero", with(P("A*B + C*D + E*F + 1"), {{"B", "0"}, {"D", "-2*C"}, {"F", "-2*E"}}),
         P("1 - 2*C^2 - 2*E^2"));
  expect(report, "torus-std.s_solves_eq3", substitute_cleared(eq3, Var::s, s_num, P("B")), MultiPoly());
  expect(report, "torus-std.r_solves_eq4", substitute_cleared(eq4, Var::r, r_num, P("B")), MultiPoly());

  const MultiPoly reduced =
      P("A*B + C*D + E*F + 2*B^2 + 2*C^2 + 2*E^2") + P("C") * p2 + P("E") * p1;
  const MultiPoly twice = substitute_cleared(substitute_cleared(eq2, Var::s, s_num, P("B")), Var::r, r_num, P("B"));
  expect(report, "torus-std.substitution", twice, P("B") * reduced);
  expect(report, "torus-std.combined", norm - reduced,
         MultiPoly(1L) - n1 - n2 - P("2*B^2 + 2*C^2 + 2*E^2") - P("C") * p2 - P("E") * p1);
}

void npq_identities(CheckReport& report, const MultiPoly& p1, const MultiPoly& p2, const MultiPoly& n1,
                    const MultiPoly& n2) {
  const MultiPoly eq2 = P("2*B + A + C*s + E*r");
  const MultiPoly eq3 = P("D*q + B*(n*r^2 - q*s) - F*n*r + 2*C*q") + p2;
  const MultiPoly eq4 = P("F - B*r + 2*E*q^2 + 2*C*n*q*r") + p1;
  const MultiPoly uvw = P("A*B + C*D + E*F");
  const MultiPoly one(1L);

  expect(report, "torus.c_zero", with(uvw + one - n2, {{"B", "0"}, {"C", "0"}, {"F", "-2*E*q^2"}}),
         one - n2 - P("2*E^2*q^2"));

  // B = 2Cnq, F = -2Eq^2: eq3 becomes a quadratic in r
  const MultiPoly b_sub = with(eq3, {{"B", "2*C*n*q"}});
  const MultiPoly s_cleared = substitute_cleared(b_sub, Var::s, with(P("-(2*B + A + E*r)"), {{"B", "2*C*n*q"}}), P("C"));
  const MultiPoly k = P("2*A*n*q^2 + C*(8*n^2*q^3 + 2*q) + D*q") + p2;
  const MultiPoly quadratic = P("2*C*n^2*q*r^2 - 2*F*n*r") + k;
  expect(report, "torus.s_substitution", with(s_cleared, {{"F", "-2*E*q^2"}}),
         with(P("C") * quadratic, {{"F", "-2*E*q^2"}}));
  const MultiPoly a = P("2*C*n^2*q");
  const MultiPoly b = P("-2*F*n");
  expect(report, "torus.discriminant", b * b - MultiPoly(4L) * a * k,
         P("4*n^2") * (P("F^2") - P("2*C*q") * k));
  const Bindings case_b = {{Var::B, P("2*C*n*q")}, {Var::F, P("-2*E*q^2")}};
  expect(report, "torus.discriminant_bound",
         substitute(P("F^2") - P("2*C*q") * k + P("2*q^2") * (uvw - n2 + one), case_b),
         P("2*q") * (P("q") * (one - n2) - P("C^2*(8*n^2*q^3 + 2*q)") - P("C") * p2));

  expect(report, "torus.b_zero_f_zero.eq3", with(eq3, {{"B", "0"}, {"F", "0"}}), P("D*q + 2*C*q") + p2);
  expect(report, "torus.b_zero_f_zero.norm", with(uvw + one - n1, {{"B", "0"}, {"F", "0"}, {"D", "-2*C"}}),
         one - n1 - P("2*C^2"));
  expect(report, "torus.b_zero_f_zero.eq4", with(eq4, {{"B", "0"}, {"C", "0"}, {"F", "0"}}), P("2*E*q^2") + p1);

  const MultiPoly cross = P("F*n") * with(eq4, {{"B", "0"}}) + P("2*C*n*q") * with(eq3, {{"B", "0"}});
  expect(report, "torus.b_zero_cross", cross,
         P("2*C*D*n*q^2 + 4*C^2*n*q^2 + F^2*n + 2*E*F*n*q^2") + P("2*C*n*q") * p2 + P("F*n") * p1);
  expect(report, "torus.b_zero_combined", e_free_part(cross) - P("2*n*q^2") * (P("C*D + E*F") - (n1 + n2 - one)),
         P("4*C^2*n*q^2 + F^2*n") - P("2*n*q^2") * (one - n1 - n2));

  // B != 0 with X = B - 2Cnq, r = (F + 2Eq^2 + (d1,e)) / X
  const MultiPoly x = P("B - 2*C*n*q");
  const MultiPoly y = P("F + 2*E*q^2");
  const MultiPoly y1 = y + p1;
  const MultiPoly s_rhs = P("D*q + B*n*r^2 - F*n*r + 2*C*q") + p2;  // B q s from eq3
  const MultiPoly bqx2_s = x * x * (P("2*C*q + D*q") + p2) + P("B*n") * y1 * y1 - P("F*n") * x * y1;
  expect(report, "torus.r_solves_eq4", substitute_cleared(eq4, Var::r, y1, x), MultiPoly());
  expect(report, "torus.s_expression", substitute_cleared(s_rhs, Var::r, y1, x), bqx2_s);

  const MultiPoly bqx2 = P("B*q") * x * x;
  const MultiPoly twice = substitute_cleared(substitute_cleared(eq2, Var::s, bqx2_s, bqx2), Var::r, y1, x);
  const MultiPoly expanded = P("2*B^2*q + A*B*q") * x * x +
                             P("C") * (x * x * P("2*C*q + D*q") + P("B*n") * y * y - P("F*n") * x * y) +
                             P("B*E*q") * x * y;
  expect(report, "torus.eq2_e_free", e_free_part(twice), x * expanded);

  const MultiPoly mixed = P("B*C*n") * y * y - P("C*F*n") * x * y + P("B*E*q") * x * y;
  const MultiPoly square = P("2*q") * P("B*E*q + C*F*n").pow(2);
  expect(report, "torus.eq2_rewrite", expanded, P("q") * x * x * P("2*B^2 + 2*C^2 + A*B + C*D") + mixed);
  expect(report, "torus.mixed_terms", mixed, P("E*F*q") * x * x + square);
  expect(report, "torus.mixed_terms_q0", with(mixed, {{"q", "0"}}), MultiPoly());
  expect(report, "torus.mixed_terms_q0_rhs", with(P("E*F*q") * x * x + square, {{"q", "0"}}), MultiPoly());
  const MultiPoly total = P("q") * x * x * P("2*B^2 + 2*C^2 + A*B + C*D + E*F") + square;
  expect(report, "torus.altogether", expanded, total);
  expect(report, "torus.combined", total - P("q") * x * x * (uvw - (n1 + n2 - one)),
         P("q") * (MultiPoly(2L) * (x * x * P("B^2 + C^2") + P("B*E*q + C*F*n").pow(2)) - x * x * (one - n1 - n2)));
}

}  // namespace

CheckReport verify_identity_bank() {
  CheckReport report;
  const MultiPoly p1 = pairing_with_e(1);
  const MultiPoly p2 = pairing_with_e(2);
  const MultiPoly n1 = block_norm(1);
  const MultiPoly n2 = block_norm(2);
  circle_identities(report, p2, n2);
  standard_identities(report, p1, p2, n1, n2);
  npq_identities(report, p1, p2, n1, n2);
  return report;
}

}  // namespace k3v
