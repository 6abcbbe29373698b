#pragma once

#include "alloclab/fraction.hpp"

#include <cstdint>
#include <vector>

namespace alloclab {

// Exact pmf of Binomial(m, p); index i holds P[X = i]. Endpoints p in {0,1}
// are allowed.
std::vector<Fraction> binomial_pmf(std::int64_t m, const Fraction& p);

// Exact P[Binomial(m, p) >= k]. k <= 0 gives 1, k > m gives 0.
Fraction binomial_tail_geq(std::int64_t m, const Fraction& p, std::int64_t k);

// Exact P[Binomial(m, p) <= k]. k < 0 gives 0, k >= m gives 1.
Fraction binomial_tail_leq(std::int64_t m, const Fraction& p, std::int64_t k);

// binary64 P[Binomial(m, p) >= k], log-space terms with compensated
// summation; absolute error well under 1e-12 for m <= 10^6.
double binomial_tail_geq_f64(std::int64_t m, double p, std::int64_t k);

// Exact pmf of Hypergeometric(population n, successes m, draws r); index i
// holds P[X = i] for i in [0, r].
std::vector<Fraction> hypergeometric_pmf(std::int64_t n, std::int64_t m, std::int64_t r);

// Exact P[Hypergeometric(n, m, r) >= k].
Fraction hypergeometric_tail_geq(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t k);

// binary64 counterpart, same error contract as binomial_tail_geq_f64.
double hypergeometric_tail_geq_f64(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t k);

}  // namespace alloclab
