#pragma once

#include "alloclab/bounds.hpp"
#include "alloclab/evaluator.hpp"
#include "alloclab/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alloclab {

// Spreading levels that can be optimal for symmetric allocations under
// independent access: floor(kT) for k = 1..floor(n/T), plus n. Sorted,
// deduplicated.
std::vector<std::int64_t> candidate_m_set(std::int64_t n, const Fraction& T);

struct ScanEntry {
  std::int64_t param = 0;  // m or ell
  EvalResult value;
};

struct OptimizationResult {
  std::int64_t best_param = 0;
  EvalResult best_value;
  std::vector<ScanEntry> scanned;
};

// Best symmetric spreading m under independent access; scans the candidate
// set only. Ties break toward smaller m.
OptimizationResult optimal_symmetric_independent(std::int64_t n, const Fraction& p,
                                                 const Fraction& T);

// Best symmetric spreading m under fixed r-subset access; scans every
// m in {1..n}. Ties break toward smaller m.
OptimizationResult optimal_symmetric_fixed_subset(std::int64_t n, std::int64_t r,
                                                  const Fraction& T);

// Best spreading ell in {1..r} for the randomized placement model. Ties
// break toward smaller ell.
OptimizationResult optimal_ell(std::int64_t n, std::int64_t r, const Fraction& T);

// Allocation whose entries are multiples of 1/q, kept sorted nonincreasing.
struct GridAllocation {
  std::int64_t q = 1;
  std::vector<std::int64_t> numerators;  // x_i = numerators[i] / q

  Allocation to_allocation() const;
};

struct GridSearchResult {
  GridAllocation best;
  EvalResult best_value;
  std::uint64_t scanned = 0;
  bool best_is_symmetric = false;
};

// Exhaustive search over nonincreasing grid allocations with total <= T.
// Deterministic tie-break: the lexicographically largest sorted allocation.
// Supports independent and fixed-subset models; capped at n <= 6, q <= 12.
GridSearchResult grid_search(std::int64_t n, const AccessModel& model, const Fraction& T,
                             std::int64_t q);

// Aggregate view of which sufficient conditions fire at (n, p, T) under
// independent access.
struct RegimeReport {
  std::int64_t n = 0;
  Fraction p;
  Fraction T;
  std::vector<ConditionVerdict> verdicts;
  bool min_spread_global = false;     // certified optimal over all allocations
  bool min_spread_symmetric = false;  // certified m* = floor(T)
  bool max_spread_symmetric = false;  // certified m* in {floor(floor(n/T)T), n}
  bool gap_region = false;            // no certificate fires
  Fraction p_boundary;                // the 1/T marker the certificates bracket
};

RegimeReport classify_regime(std::int64_t n, const Fraction& p, const Fraction& T);

// ---- Parameter sweeps ----------------------------------------------------

struct Range {
  Fraction lo, hi, step;  // inclusive endpoints, step > 0
};

enum class SweepFamily {
  independent_symmetric,  // rows: best m over candidate set, per (p, T)
  subset_symmetric,       // rows: best m over {1..n}, per T
  prob_symmetric,         // rows: best ell, per T
  regime,                 // rows: condition flags per (p, T)
};

struct SweepSpec {
  SweepFamily family = SweepFamily::independent_symmetric;
  std::int64_t n = 0;
  std::optional<std::int64_t> r;  // subset families
  std::optional<Range> p;         // independent families
  std::optional<Range> T;
};

// One output row: ordered (column, rendered value) cells. All rows of a
// sweep share the same columns.
struct SweepRow {
  std::vector<std::pair<std::string, std::string>> cells;
};

// Deterministic row order: T outer, p inner, lexicographic in grid indices.
// Total rows capped at 10^6.
std::vector<SweepRow> sweep(const SweepSpec& spec);

}  // namespace alloclab
