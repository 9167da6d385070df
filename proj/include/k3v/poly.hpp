#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3v/alphabet.hpp"
#include "k3v/rational.hpp"

namespace k3v {

using Exponent = std::uint32_t;

/// Exponent vector over the alphabet, ordered graded-lexicographically.
///
/// Exponents are stored from the largest variable down so that the defaulted
/// comparison of (degree, exponents) is exactly graded lex with
/// s < r < e1 < ... < d2_8.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, Exponent e = 1);

  Exponent operator[](Var v) const { return exp_[slot(v)]; }
  Exponent degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  bool uses_any(const VarSet& vars) const;

  /// Throws std::overflow_error if an exponent leaves the Exponent range.
  Monomial operator*(const Monomial& other) const;
  Monomial pow(Exponent k) const;

  /// Splits into the part supported on `vars` and the rest.
  std::pair<Monomial, Monomial> split(const VarSet& vars) const;
  Monomial without(Var v) const;

  std::string to_string() const;  // "1" for the unit monomial

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static constexpr std::size_t slot(Var v) { return kNumVars - 1 - index_of(v); }
  void set(Var v, Exponent e);

  Exponent degree_ = 0;
  std::array<Exponent, kNumVars> exp_{};
};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending in monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, BigRational>;

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v);
  static MultiPoly term(const Monomial& m, const BigRational& c);
  /// Builds from arbitrary terms; duplicates are merged and zeros dropped.
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;
  BigRational coefficient(const Monomial& m) const;
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Exponent degree() const;
  Exponent degree_in(Var v) const;
  /// Total degree counting only variables in `vars`.
  Exponent degree_in(const VarSet& vars) const;
  bool uses_any(const VarSet& vars) const;
  bool uses(Var v) const;
  VarSet support() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const BigRational& factor) const;
  MultiPoly pow(unsigned k) const;

  /// Coefficients of v^0, v^1, ..., v^deg (each free of v).
  std::vector<MultiPoly> coefficients_in(Var v) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;

 private:
  explicit MultiPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;
};

using Bindings = std::map<Var, MultiPoly>;

/// Simultaneous substitution; unbound variables pass through.
MultiPoly substitute(const MultiPoly& p, const Bindings& bindings);

/// Clears a rational substitution v -> num/den: returns den^k * p(v = num/den)
/// where k = deg_v p, which is a polynomial whenever num and den are.
MultiPoly substitute_cleared(const MultiPoly& p, Var v, const MultiPoly& num,
                             const MultiPoly& den);

/// Groups p by its monomials in `vars`; residuals are free of `vars`.
std::map<Monomial, MultiPoly> coefficient_split(const MultiPoly& p, const VarSet& vars);
MultiPoly reassemble(const std::map<Monomial, MultiPoly>& split);

/// Multiplies by the positive lcm of the denominators and divides by the
/// content, giving a primitive integer polynomial with the original sign.
MultiPoly primitive_integer_form(const MultiPoly& p);

/// Parses expressions such as "n*r^2 - q*s + 3/2*e1*(A+B)".
/// Division is only allowed by nonzero constant subexpressions. Throws
/// std::invalid_argument on malformed input or unknown symbols.
MultiPoly parse_poly(std::string_view text);

}  // namespace k3v
