#pragma once

#include "alloclab/dist.hpp"
#include "alloclab/model.hpp"

#include <cstdint>
#include <vector>

namespace alloclab {

// Distinct allocation values with multiplicities. Exact evaluation
// enumerates per-value access counts instead of raw node subsets, so the
// state space is prod(count_v + 1) rather than 2^n.
struct ValueGrouping {
  std::vector<Fraction> values;
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;

  static ValueGrouping of(const Allocation& alloc);
  BigInt state_count() const;
};

namespace detail {

// N[k] = number of k-subsets of the multiset whose value-sum reaches 1
// (counted with multiplicity). Sizes run 0..total. Values above 1 are
// clamped first; that changes no subset's success.
std::vector<std::uint64_t> success_counts_by_size(const ValueGrouping& grouping);

// Same counts for pre-scaled integer values: N[k] counts k-subsets whose
// scaled sum reaches `threshold`. Total node count must stay within the
// exact-evaluation cap.
std::vector<std::uint64_t> success_counts_scaled(const std::vector<std::uint64_t>& values,
                                                 const std::vector<std::int64_t>& counts,
                                                 std::uint64_t threshold);

}  // namespace detail

// P[sum of independently accessed amounts >= 1], each node accessed with
// probability p. Exact; throws SizeError past the documented caps.
EvalResult eval_independent(const Allocation& alloc, const Fraction& p);

// Same probability for the symmetric allocation (m nodes, T/m each) via the
// binomial tail P[B(m, p) >= ceil(m/T)]. Exact up to m = 10^4, binary64
// log-space beyond (abs error <= 1e-12).
EvalResult eval_symmetric_independent(const Fraction& p, const Fraction& T, std::int64_t m);

// P[sum over a uniform r-subset >= 1]. Exact.
EvalResult eval_fixed_subset(const Allocation& alloc, std::int64_t r);

// Symmetric case via the hypergeometric tail P[H(n, m, r) >= ceil(m/T)].
EvalResult eval_symmetric_fixed_subset(std::int64_t n, const Fraction& T, std::int64_t m,
                                       std::int64_t r);

// Randomized symmetric placement: every node stores 1/ell with probability
// min(ell*T/n, 1) and a uniform r-subset is read, so recovery needs
// ceil(ell) stocked nodes among the r: P[B(r, min(ell*T/n, 1)) >= ceil(ell)].
// Zero when ceil(ell) > r.
EvalResult eval_prob_symmetric(std::int64_t n, std::int64_t r, const Fraction& T,
                               const Fraction& ell);

}  // namespace alloclab
