#pragma once

#include "alloclab/fraction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alloclab {

// Stable identifiers for the sufficient-condition checkers. These names are
// part of the CLI/CSV/JSON contract; a false verdict means "not certified by
// this condition", never "the conclusion is false".
enum class ConditionId {
  theorem3,   // minimal spreading optimal over all allocations (independent access)
  corollary1, // small-p shortcut implying the above
  theorem4,   // symmetric optimum at maximal spreading: m* in {floor(floor(n/T)T), n}
  corollary2, // large-p shortcut implying the above
  lemma3,     // symmetric optimum at minimal spreading: m* = floor(T)
  lemma4,     // shortcut implying lemma3's conclusion
  theorem5,   // simplest shortcut implying lemma3's conclusion: p <= 1/ceil(T)
  theorem8,   // randomized placement: full spread ell = r optimal once T clears the budget threshold
  corollary4, // ditto once success probability >= 3/4 is achievable
};

const char* to_string(ConditionId id);

struct ConditionVerdict {
  ConditionId id;
  bool holds = false;
  // Explanatory value, e.g. the first quantifier index that fails.
  std::optional<std::string> witness;
};

// Upper bound on the recovery probability of ANY allocation of budget T over
// n nodes under independent access: sum_r min(rT/n, 1) P[B(n,p) = r]. Exact.
Fraction recovery_upper_bound(std::int64_t n, const Fraction& p, const Fraction& T);

// Exact gap between that bound and the maximal-spreading symmetric value:
// pT * P[B(n-1, p) <= ceil(n/T) - 2].
Fraction max_spread_gap_bound(std::int64_t n, const Fraction& p, const Fraction& T);

// Sufficient condition for minimal spreading (floor(T) nodes) to be optimal
// over ALL allocations under independent access. Checks, for every ell in
// {0..floor(T)-1}:
//   1 - (1-p)^(floor(T)-n) + (n-ell) p/(1-p)
//     + sum_{r=2}^{ceil((n-ell)/(T-ell))-1} (1 - r(T-ell)/(n-ell)) C(n-ell,r) (p/(1-p))^r >= 0.
// Requires 1 < T < n. The witness reports the first failing ell.
ConditionVerdict min_spread_global_condition(std::int64_t n, const Fraction& p,
                                             const Fraction& T);

// Shortcut: p <= 2/(n - floor(T))^2 implies the condition above. Always holds
// when n - floor(T) == 1. Requires 1 <= T < n.
ConditionVerdict min_spread_small_p_condition(std::int64_t n, const Fraction& p,
                                              const Fraction& T);

// The five sufficient conditions locating the optimal symmetric spreading
// level for independent access. Returned in order:
// theorem4, corollary2 (maximal spreading), lemma3, lemma4, theorem5
// (minimal spreading).
std::vector<ConditionVerdict> symmetric_spread_conditions(std::int64_t n, const Fraction& p,
                                                          const Fraction& T);

// Exact difference between the recovery probabilities of consecutive
// candidate symmetric allocations, m = floor((k+1)T) versus m = floor(kT):
//   delta = p^k (1-p)^(floor((k+1)T)-k) *
//           { sum_{i=1}^{min(a-1,k)} sum_{j=i+1}^{a} C(floor(kT),k-i) C(a,j) (p/(1-p))^(j-i)
//             - C(floor(kT),k) },   a = floor((k+1)T) - floor(kT).
Fraction candidate_delta(const Fraction& p, const Fraction& T, std::int64_t k);

// n = alpha*r + r_prime with r_prime in {r, ..., 2r-1}.
struct SubsetDecomposition {
  std::int64_t alpha = 0;
  std::int64_t r_prime = 0;
  std::int64_t gcd = 1;  // gcd(r, r_prime)
};

struct SubsetThreshold {
  // Smallest certified success-probability threshold: when the target
  // recovery probability exceeds it, the symmetric allocation (1/r over
  // min-budget nodes) minimizes the budget for the fixed r-subset model.
  Fraction threshold;
  // True when the threshold is known to be exact (iff), not just sufficient.
  bool tight = false;
  // Present when r does not divide n.
  std::optional<SubsetDecomposition> decomposition;
};

// r | n: threshold 1 - r/n, tight. Otherwise 1 - g/(alpha*g + r_prime) with
// the decomposition above; tight when (n - r) | n (then it equals r/n).
SubsetThreshold fixed_subset_threshold(std::int64_t n, std::int64_t r);

// Minimum budget for recovery probability exactly 1 under the fixed
// r-subset model: n/r.
Fraction min_budget_for_certain_recovery(std::int64_t n, std::int64_t r);

// Counting bound: given c subsets of the universe, each universe element
// appearing in exactly b > 0 of them, any allocation whose every listed
// subset sums to >= 1 has total >= c/b. Validates the uniform-multiplicity
// hypothesis and names the offending element otherwise.
Fraction cover_lower_bound(const std::vector<std::int64_t>& universe,
                           const std::vector<std::vector<std::int64_t>>& subsets);

// Refined upper bound for independent access. Partitions on the number ell
// of budget-1 ("complete") nodes an optimal allocation could hold:
//   max_ell [ 1-(1-p)^ell + (1-p)^ell * sum_{r>=2} min( r(T-ell)/(n-ell),
//             1 - [T-ell < (n-ell)/r] * g/(alpha*g + r') ) P[B(n-ell,p)=r] ].
// Exact; never below the true optimum and at most recovery_upper_bound's
// intent (it sharpens the per-subset cap using the subset-model threshold).
Fraction improved_upper_bound(std::int64_t n, const Fraction& p, const Fraction& T);

struct ProbSymThresholds {
  // (n/r) * (3/4)^(1/r) in binary64.
  double budget_threshold = 0.0;
  // Rational upper bound on budget_threshold, outward-rounded at 1e-12
  // granularity, so "T >= certificate" decisions are conservative.
  Fraction budget_certificate;
  // Success-probability threshold above which full spreading is optimal.
  Fraction ps_threshold;  // always 3/4
};

// Thresholds for the randomized symmetric placement model; requires r >= 2.
ProbSymThresholds prob_symmetric_thresholds(std::int64_t n, std::int64_t r);

// Certificates that full spreading (ell = r) is optimal for the randomized
// placement model at budget T. Returned in order: theorem8, corollary4.
std::vector<ConditionVerdict> prob_symmetric_conditions(std::int64_t n, std::int64_t r,
                                                        const Fraction& T);

}  // namespace alloclab
