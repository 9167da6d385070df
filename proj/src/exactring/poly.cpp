#include "k3v/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace k3v {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return a + b;
}

// Descending merge of two canonical term lists.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b,
                                         bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? BigRational(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigRational c = subtract ? BigRational(a[i].second - b[j].second)
                               : BigRational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, Exponent e) { set(v, e); }

void Monomial::set(Var v, Exponent e) {
  Exponent& slot_ref = exp_[slot(v)];
  degree_ = checked_add(degree_ - slot_ref, e);
  slot_ref = e;
}

bool Monomial::uses_any(const VarSet& vars) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (vars.test(i) && exp_[slot(static_cast<Var>(i))] != 0) return true;
  }
  return false;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) out.exp_[i] = checked_add(exp_[i], other.exp_[i]);
  out.degree_ = checked_add(degree_, other.degree_);
  return out;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial out;
  for (Exponent i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::pair<Monomial, Monomial> Monomial::split(const VarSet& vars) const {
  Monomial in;
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const Var v = static_cast<Var>(i);
    const Exponent e = (*this)[v];
    if (e == 0) continue;
    if (vars.test(i)) {
      in.set(v, e);
    } else {
      out.set(v, e);
    }
  }
  return {in, out};
}

Monomial Monomial::without(Var v) const {
  Monomial out = *this;
  out.set(v, 0);
  return out;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const Var v = static_cast<Var>(i);
    const Exponent e = (*this)[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name_of(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, BigRational(constant));
}

MultiPoly::MultiPoly(const BigRational& constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

MultiPoly MultiPoly::var(Var v) { return term(Monomial(v), 1); }

MultiPoly MultiPoly::term(const Monomial& m, const BigRational& c) {
  if (c == 0) return {};
  return MultiPoly(std::vector<Term>{{m, c}});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return MultiPoly(std::move(out));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

BigRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

BigRational MultiPoly::coefficient(const Monomial& m) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Exponent MultiPoly::degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

Exponent MultiPoly::degree_in(Var v) const {
  Exponent best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m[v]);
  return best;
}

Exponent MultiPoly::degree_in(const VarSet& vars) const {
  Exponent best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.split(vars).first.degree());
  return best;
}

bool MultiPoly::uses_any(const VarSet& vars) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.first.uses_any(vars); });
}

bool MultiPoly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first[v] != 0; });
}

VarSet MultiPoly::support() const {
  VarSet out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[static_cast<Var>(i)] != 0) out.set(i);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<MultiPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
  }
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly MultiPoly::scaled(const BigRational& factor) const {
  if (factor == 0) return {};
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.second *= factor;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  const Exponent deg = degree_in(v);
  std::vector<std::vector<Term>> buckets(deg + 1);
  for (const auto& [m, c] : terms_) buckets[m[v]].emplace_back(m.without(v), c);
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string coef = k3v::to_string(c);
    const std::string shown = c < 0 ? "(" + coef + ")" : coef;
    if (m.is_one()) {
      out += shown;
    } else if (c == 1) {
      out += m.to_string();
    } else {
      out += shown + "*" + m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------- free functions

MultiPoly substitute(const MultiPoly& p, const Bindings& bindings) {
  if (bindings.empty() || p.is_zero()) return p;
  VarSet bound;
  for (const auto& [v, img] : bindings) bound.set(index_of(v));
  if (!p.uses_any(bound)) return p;

  // powers[v][k] = image(v)^k, filled lazily
  std::map<Var, std::vector<MultiPoly>> powers;
  const auto power_of = [&](Var v, Exponent k) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1L);
    while (cache.size() <= k) cache.push_back(cache.back() * bindings.at(v));
    return cache[k];
  };

  std::vector<MultiPoly::Term> acc;
  for (const auto& [m, c] : p.terms()) {
    const auto [in, rest] = m.split(bound);
    MultiPoly piece = MultiPoly::term(rest, c);
    for (const auto& [v, img] : bindings) {
      const Exponent k = in[v];
      if (k != 0) piece *= power_of(v, k);
    }
    acc.insert(acc.end(), piece.terms().begin(), piece.terms().end());
  }
  return MultiPoly::from_terms(std::move(acc));
}

MultiPoly substitute_cleared(const MultiPoly& p, Var v, const MultiPoly& num, const MultiPoly& den) {
  const auto coeffs = p.coefficients_in(v);
  const auto k = static_cast<unsigned>(coeffs.size() - 1);
  MultiPoly out;
  MultiPoly num_pow(1L);
  for (unsigned l = 0; l <= k; ++l) {
    if (!coeffs[l].is_zero()) out += coeffs[l] * num_pow * den.pow(k - l);
    if (l < k) num_pow *= num;
  }
  return out;
}

std::map<Monomial, MultiPoly> coefficient_split(const MultiPoly& p, const VarSet& vars) {
  std::map<Monomial, std::vector<MultiPoly::Term>> buckets;
  for (const auto& [m, c] : p.terms()) {
    auto [in, out] = m.split(vars);
    buckets[in].emplace_back(out, c);
  }
  std::map<Monomial, MultiPoly> split;
  for (auto& [m, terms] : buckets) split.emplace(m, MultiPoly::from_terms(std::move(terms)));
  return split;
}

MultiPoly reassemble(const std::map<Monomial, MultiPoly>& split) {
  std::vector<MultiPoly::Term> acc;
  for (const auto& [m, residual] : split) {
    for (const auto& [rm, c] : residual.terms()) acc.emplace_back(m * rm, c);
  }
  return MultiPoly::from_terms(std::move(acc));
}

MultiPoly primitive_integer_form(const MultiPoly& p) {
  if (p.is_zero()) return p;
  BigInt lcm_den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  for (const auto& [m, c] : p.terms()) {
    BigInt num = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  return p.scaled(make_rational(lcm_den, content));
}

}  // namespace k3v
