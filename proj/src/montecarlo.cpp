#include "alloclab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <unordered_map>
#include <vector>

namespace alloclab {

namespace {

// splitmix64: the per-stream state advances by a fixed odd constant, so any
// output index is reachable directly (counter-based) and streams derived
// from well-mixed starting states behave as disjoint sequences.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDULL;
  x ^= x >> 33;
  x *= 0xC4CEB9FE1A85EC53ULL;
  x ^= x >> 33;
  return x;
}

// Exactly uniform draw from [0, bound) via rejection.
std::uint64_t bounded(SplitMix64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t u = rng.next();
    if (u < limit) return u % bound;
  }
}

struct ScaledInstance {
  // Clamped amounts scaled to a common denominator; success when a trial's
  // sum reaches `threshold`. Exact whenever the scaling fits 64 bits
  // (slow exact-fraction fallback otherwise).
  bool scaled_ok = false;
  std::vector<std::uint64_t> amounts;
  std::uint64_t threshold = 0;
  std::vector<Fraction> amounts_exact;

  explicit ScaledInstance(const Allocation& alloc) {
    const auto clamped = alloc.clamp_to_one();
    BigInt lcm = 1;
    for (const auto& v : clamped.amounts()) lcm = boost::multiprecision::lcm(lcm, v.den());
    const BigInt cap = BigInt(std::numeric_limits<std::uint64_t>::max()) / (alloc.n() + 1);
    if (lcm <= cap) {
      scaled_ok = true;
      threshold = lcm.convert_to<std::uint64_t>();
      amounts.reserve(clamped.amounts().size());
      for (const auto& v : clamped.amounts()) {
        amounts.push_back((v.num() * (lcm / v.den())).convert_to<std::uint64_t>());
      }
    } else {
      amounts_exact = clamped.amounts();
    }
  }
};

}  // namespace

EvalResult mc_estimate(const Allocation& alloc, const AccessModel& model, const McConfig& cfg) {
  validate_model(model, alloc.n());
  if (std::holds_alternative<ProbSymmetricAccess>(model)) {
    throw DomainError("montecarlo estimates explicit allocations; the randomized placement "
                      "model has a closed form");
  }
  if (cfg.trials < kMinMcTrials) throw DomainError("montecarlo requires at least 1000 trials");
  if (cfg.streams < 1) throw DomainError("montecarlo requires at least one stream");

  const ScaledInstance inst(alloc);
  const std::int64_t n = alloc.n();

  // Per-stream trial counts: earlier streams absorb the remainder.
  const std::uint64_t base = cfg.trials / cfg.streams;
  const std::uint64_t extra = cfg.trials % cfg.streams;

  const bool independent = std::holds_alternative<IndependentAccess>(model);
  std::uint64_t bern_num = 0, bern_den = 0;
  std::vector<std::size_t> nonzero;
  std::int64_t r_subset = 0;
  if (independent) {
    const auto& p = std::get<IndependentAccess>(model).p;
    if (p.den() > BigInt(std::numeric_limits<std::int64_t>::max())) {
      throw DomainError("access probability denominator too large to sample exactly");
    }
    bern_num = p.num().convert_to<std::uint64_t>();
    bern_den = p.den().convert_to<std::uint64_t>();
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      const bool zero = inst.scaled_ok ? inst.amounts[i] == 0 : inst.amounts_exact[i].is_zero();
      if (!zero) nonzero.push_back(i);
    }
  } else {
    r_subset = std::get<FixedSubsetAccess>(model).r;
  }

  auto run_stream = [&](std::uint32_t s) -> std::uint64_t {
    const std::uint64_t trials = base + (s < extra ? 1 : 0);
    SplitMix64 rng{mix64(mix64(cfg.seed ^ 0x8E9D5AB1C3F2E479ULL) +
                         0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(s) + 1))};
    std::uint64_t successes = 0;

    if (independent) {
      for (std::uint64_t t = 0; t < trials; ++t) {
        if (inst.scaled_ok) {
          std::uint64_t sum = 0;
          for (auto i : nonzero) {
            if (bounded(rng, bern_den) < bern_num) sum += inst.amounts[i];
          }
          if (sum >= inst.threshold) ++successes;
        } else {
          Fraction sum(0);
          for (auto i : nonzero) {
            if (bounded(rng, bern_den) < bern_num) sum += inst.amounts_exact[i];
          }
          if (sum >= Fraction(1)) ++successes;
        }
      }
    } else {
      // Sparse partial Fisher-Yates: only the first r positions of the
      // virtual index array are materialized.
      std::unordered_map<std::int64_t, std::int64_t> swapped;
      for (std::uint64_t t = 0; t < trials; ++t) {
        swapped.clear();
        auto at = [&](std::int64_t i) {
          auto it = swapped.find(i);
          return it == swapped.end() ? i : it->second;
        };
        bool success = false;
        if (inst.scaled_ok) {
          std::uint64_t sum = 0;
          for (std::int64_t j = 0; j < r_subset; ++j) {
            const std::int64_t k =
                j + static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(n - j)));
            const std::int64_t pick = at(k);
            swapped[k] = at(j);
            sum += inst.amounts[static_cast<std::size_t>(pick)];
          }
          success = sum >= inst.threshold;
        } else {
          Fraction sum(0);
          for (std::int64_t j = 0; j < r_subset; ++j) {
            const std::int64_t k =
                j + static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(n - j)));
            const std::int64_t pick = at(k);
            swapped[k] = at(j);
            sum += inst.amounts_exact[static_cast<std::size_t>(pick)];
          }
          success = sum >= Fraction(1);
        }
        if (success) ++successes;
      }
    }
    return successes;
  };

  std::vector<std::uint64_t> per_stream(cfg.streams, 0);
  const std::uint32_t workers = std::max<std::uint32_t>(1, std::min(cfg.threads, cfg.streams));
  if (workers == 1) {
    for (std::uint32_t s = 0; s < cfg.streams; ++s) per_stream[s] = run_stream(s);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::uint32_t s = w; s < cfg.streams; s += workers) per_stream[s] = run_stream(s);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::uint64_t successes = 0;
  for (auto c : per_stream) successes += c;
  const double est = static_cast<double>(successes) / static_cast<double>(cfg.trials);
  const double variance = est * (1.0 - est);
  const double radius = 3.0 * std::sqrt(variance / static_cast<double>(cfg.trials));
  return EvalResult::from_montecarlo(est, radius);
}

}  // namespace alloclab
