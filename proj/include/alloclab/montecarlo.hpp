#pragma once

#include "alloclab/model.hpp"

#include <cstdint>

namespace alloclab {

struct McConfig {
  std::uint64_t trials = 1'000'000;  // >= 1000
  std::uint64_t seed = 0;
  std::uint32_t streams = 1;   // logical partitions; part of the result's identity
  std::uint32_t threads = 1;   // physical workers; never affects the estimate
};

// Seeded estimate of the recovery probability for independent or
// fixed-subset access. The estimate is a pure function of
// (allocation, model, trials, seed, streams): trials are partitioned across
// logical streams, each with its own counter-derived generator, and merged
// by order-independent summation. The per-trial success test uses exact
// integer/fraction arithmetic. error_radius = 3 * sqrt(v/trials) with v the
// Bernoulli variance estimate.
EvalResult mc_estimate(const Allocation& alloc, const AccessModel& model, const McConfig& cfg);

}  // namespace alloclab
