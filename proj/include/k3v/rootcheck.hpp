#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "k3v/check.hpp"
#include "k3v/families.hpp"

namespace k3v {

/// d = A u + B v + C x + D y + E z + F t + d1 + d2 with d1, d2 in E8
/// coordinates of the first and second -E8 summand.
struct RootCandidate {
  std::array<std::int64_t, 6> w{};  // A..F
  IntVector d1 = IntVector(8, 0);
  IntVector d2 = IntVector(8, 0);

  IntVector assemble() const;
  /// n_i = -(d_i,d_i)/2 in -E8.
  std::int64_t n1() const;
  std::int64_t n2() const;
  /// (d,d) in L.
  std::int64_t norm() const;
  std::string to_string() const;

  friend auto operator<=>(const RootCandidate& a, const RootCandidate& b) {
    return a.assemble() <=> b.assemble();
  }
  friend bool operator==(const RootCandidate& a, const RootCandidate& b) {
    return a.assemble() == b.assemble();
  }
};

/// inner(d, f_i) for i = 1..3 with d symbolic in A..F, d1_*, d2_*, plus (d,d) + 2.
struct OrthoSystem {
  std::vector<MultiPoly> equations;
  MultiPoly norm_equation;
};

OrthoSystem derive_ortho_system(const PeriodTriple& triple);
OrthoSystem derive_ortho_system(const FamilySpec& family);

/// The expected system written out by hand: equations with (d_i,e)
/// expanded as -(Cartan d_i).e and n_i = d_i.Cartan.d_i / 2.
OrthoSystem expected_system(const FamilySpec& family);

/// (d_i, e) for block 1 or 2 as a polynomial in d-coordinates and e.
MultiPoly pairing_with_e(int block);
/// n_i as a polynomial in the d-coordinates of block i.
MultiPoly block_norm(int block);

struct SystemMatch {
  bool matched = false;
  CheckReport report;
};

/// Equal up to reordering and a nonzero rational factor per equation.
SystemMatch match_expected_system(const FamilySpec& family);

// ------------------------------------------------------------ point search

using ParamPoint = std::map<Var, BigRational>;

enum class ControlKind { NonK0, Hyperbolic };

/// NonK0: (u+v, x+2y+a, z+2t+b), whose only roots are +-(u-v).
/// Hyperbolic: (u+v, x+y, z+t), orthogonal to +-(u-v), +-(x-y), +-(z-t) and
/// to every root of the two E8 summands.
PeriodTriple control_triple(ControlKind kind);

/// E8 vectors of norm 2k, for k = 0..m. lists[k] sorted.
std::vector<std::vector<IntVector>> e8_norm_lists(std::int64_t m);

/// All d with |A..F| <= N, n1, n2 <= m, (d,d) = -2 and (d, f_i) = 0 at the
/// point with e formal. Sorted, parallel over the (A, B) block.
std::vector<RootCandidate> root_search_at_point(const PeriodTriple& triple, const ParamPoint& point,
                                                std::int64_t box_bound, std::int64_t norm_bound);
std::vector<RootCandidate> root_search_at_point(const FamilySpec& family, const ParamPoint& point,
                                                std::int64_t box_bound, std::int64_t norm_bound);
/// Same search with explicit E8 lists (lists[k] has norm 2k).
std::vector<RootCandidate> root_search_at_point(const PeriodTriple& triple, const ParamPoint& point,
                                                std::int64_t box_bound,
                                                const std::vector<std::vector<IntVector>>& lists);

// ------------------------------------------------------- exclusion engine

enum class Verdict { Excluded, SolutionFound, Inconclusive };
enum class WitnessKind { None, NormViolation, Vanishing, Resultant, NegativeDiscriminant };

std::string verdict_string(Verdict v);
std::string witness_kind_string(WitnessKind k);

struct TraceEntry {
  std::string split;
  std::string value;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct ExclusionOutcome {
  Verdict verdict = Verdict::Inconclusive;
  WitnessKind kind = WitnessKind::None;
  MultiPoly witness;  // primitive integer form; zero unless Excluded
  std::vector<TraceEntry> trace;
  std::vector<std::pair<std::string, std::string>> solution;  // param -> value
  std::string reason;

  /// Trace labels with zero/nonzero markers and the terminal kind.
  std::string path() const;
};

/// Eliminates s, then r, from the orthogonality system of one concrete
/// candidate. Branch labels come from a symbolic replay of the same steps,
/// cached per step pattern. Thread-safe.
class ExclusionEngine {
 public:
  explicit ExclusionEngine(const FamilySpec& family);
  ~ExclusionEngine();
  ExclusionEngine(const ExclusionEngine&) = delete;
  ExclusionEngine& operator=(const ExclusionEngine&) = delete;

  ExclusionOutcome run(const RootCandidate& candidate) const;
  std::size_t cached_paths() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

ExclusionOutcome exclusion_certificate(const FamilySpec& family, const RootCandidate& candidate);

/// Bound on (g.e)^2 under |(e,e)| <= 1/2: g^T Cartan^{-1} g / 2.
BigRational pairing_bound(const std::vector<BigRational>& g);
/// Bound on (d2,e)^2, which is n2.
BigRational cauchy_schwarz_bound(const IntVector& d2);

// ----------------------------------------------------------------- sweep

struct FlaggedCandidate {
  RootCandidate candidate;
  ExclusionOutcome outcome;
};

struct SweepResult {
  std::uint64_t candidates = 0;
  std::uint64_t excluded = 0;
  std::uint64_t solution_found = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t engine_runs = 0;
  std::map<std::string, std::uint64_t> paths;  // path -> candidate count
  std::vector<FlaggedCandidate> flagged;       // first non-excluded candidates

  bool all_excluded() const { return solution_found == 0 && inconclusive == 0; }
};

/// Every admissible candidate with |A..F| <= N and d_i from lists[n_i].
/// Candidates sharing (A..F, n1, n2, d1.Cartan.d2) get the same verdict and
/// path, so each such class is certified once through its first member.
SweepResult exclusion_sweep(const FamilySpec& family, std::int64_t box_bound,
                            const std::vector<std::vector<IntVector>>& lists);
SweepResult exclusion_sweep(const FamilySpec& family, std::int64_t box_bound, std::int64_t norm_bound);

/// E8 blocks of every f_i are constant multiples of e (the class reduction needs it).
bool has_scalar_e_blocks(const PeriodTriple& triple);

// --------------------------------------------------------- identity bank

/// Every rewriting step of the exclusion arguments as an exact identity.
CheckReport verify_identity_bank();

}  // namespace k3v
