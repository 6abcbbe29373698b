#pragma once

#include "alloclab/fraction.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace alloclab {

// Hard caps shared across the library. Instances beyond them raise SizeError
// and should be handed to the Monte Carlo estimator instead.
inline constexpr std::int64_t kMaxSymmetricN = 1'000'000;   // closed-form evaluators
inline constexpr std::int64_t kMaxExactN = 30;              // general-allocation exact evaluation
inline constexpr std::int64_t kMaxEnumStates = 10'000'000;  // count-vector enumeration
inline constexpr std::int64_t kFloatPathThreshold = 10'000; // trials above this use binary64 tails
inline constexpr double kFloatPathAbsError = 1e-12;
inline constexpr std::int64_t kMaxGridN = 6;
inline constexpr std::int64_t kMaxGridQ = 12;
inline constexpr std::int64_t kMaxSweepRows = 1'000'000;
inline constexpr std::uint64_t kMinMcTrials = 1'000;

// Per-node storage amounts x_i >= 0 (amounts above 1 are legal; they can be
// clamped without changing any recovery probability).
class Allocation {
 public:
  explicit Allocation(std::vector<Fraction> amounts);

  std::int64_t n() const { return static_cast<std::int64_t>(x_.size()); }
  const std::vector<Fraction>& amounts() const { return x_; }
  const Fraction& operator[](std::size_t i) const { return x_[i]; }

  Fraction total() const;
  // min(x_i, 1) entrywise; recovery probabilities are invariant under this.
  Allocation clamp_to_one() const;
  // True when all nonzero amounts are equal.
  bool is_symmetric() const;

 private:
  std::vector<Fraction> x_;
};

// m nonempty nodes holding budget/m each, n-m empty nodes.
struct SymmetricAllocation {
  std::int64_t n = 0;
  Fraction budget;
  std::int64_t m = 0;

  Allocation expand() const;
  // Number of nonempty nodes that must be accessed to recover: ceil(m/budget).
  std::int64_t min_successes() const;
};

// Validates 1 <= m <= n and 1 <= budget <= n, then spreads budget evenly
// over the first m nodes.
Allocation make_symmetric(std::int64_t n, const Fraction& budget, std::int64_t m);

// Every node is accessed independently with probability p, 0 < p < 1.
struct IndependentAccess {
  Fraction p;
};

// A uniformly random r-subset of the nodes is accessed.
struct FixedSubsetAccess {
  std::int64_t r = 0;
};

// Randomized symmetric placement: each node stores 1/ell with probability
// min(ell*T/n, 1); the collector reads a uniform r-subset.
struct ProbSymmetricAccess {
  std::int64_t r = 0;
  Fraction ell;
};

using AccessModel = std::variant<IndependentAccess, FixedSubsetAccess, ProbSymmetricAccess>;

// Throw DomainError on out-of-range parameters. n is the node count the
// model will be used with.
void validate_model(const AccessModel& model, std::int64_t n);

enum class EvalMode { exact, float64, montecarlo };

const char* to_string(EvalMode mode);

// A probability, exact when possible. `value` is always populated (binary64
// view of `exact` in exact mode). `error_radius` is 0 for exact results, the
// documented absolute bound for float64 fast paths, and a 3-sigma radius for
// Monte Carlo estimates.
struct EvalResult {
  EvalMode mode = EvalMode::exact;
  Fraction exact;
  double value = 0.0;
  double error_radius = 0.0;

  static EvalResult from_exact(Fraction f);
  static EvalResult from_float64(double v, double err);
  static EvalResult from_montecarlo(double v, double err);
};

}  // namespace alloclab
