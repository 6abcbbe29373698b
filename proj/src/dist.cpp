#include "alloclab/dist.hpp"

#include <cmath>

namespace alloclab {

namespace {

void check_binomial_args(std::int64_t m, const Fraction& p) {
  if (m < 0) throw DomainError("binomial trial count must be nonnegative");
  if (p < Fraction(0) || p > Fraction(1)) {
    throw DomainError("binomial success probability must lie in [0, 1]");
  }
}

void check_hypergeometric_args(std::int64_t n, std::int64_t m, std::int64_t r) {
  if (n < 0 || m < 0 || r < 0 || m > n || r > n) {
    throw DomainError("hypergeometric parameters require 0 <= m, r <= n");
  }
}

// Kahan-compensated accumulator. Extended precision throughout: the binary64
// results promise 1e-12 absolute error, which plain double lgamma cannot
// deliver once the log-factorials reach ~10^5.
struct CompensatedSum {
  long double sum = 0.0L;
  long double c = 0.0L;
  void add(long double x) {
    long double y = x - c;
    long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

long double log_binom(std::int64_t n, std::int64_t k) {
  return std::lgamma(static_cast<long double>(n) + 1.0L) -
         std::lgamma(static_cast<long double>(k) + 1.0L) -
         std::lgamma(static_cast<long double>(n - k) + 1.0L);
}

}  // namespace

std::vector<Fraction> binomial_pmf(std::int64_t m, const Fraction& p) {
  check_binomial_args(m, p);
  const BigInt a = p.num();
  const BigInt b = p.den();
  const BigInt q = b - a;  // numerator of 1-p over the same denominator
  const BigInt denom = ipow(b, m);

  std::vector<Fraction> pmf(static_cast<std::size_t>(m) + 1);
  // term_i = C(m,i) a^i (b-a)^(m-i); pmf_i = term_i / b^m.
  BigInt term = ipow(q, m);
  for (std::int64_t i = 0; i <= m; ++i) {
    pmf[static_cast<std::size_t>(i)] = Fraction(term, denom);
    if (i < m) {
      if (q == 0) {
        // p == 1: only the i == m term is nonzero; jump straight there.
        term = 0;
        if (i + 1 == m) term = ipow(a, m);
      } else {
        term *= (m - i);
        term *= a;
        term /= (i + 1);
        term /= q;
      }
    }
  }
  return pmf;
}

Fraction binomial_tail_geq(std::int64_t m, const Fraction& p, std::int64_t k) {
  check_binomial_args(m, p);
  if (k <= 0) return Fraction(1);
  if (k > m) return Fraction(0);
  if (p.is_zero()) return Fraction(0);   // k >= 1 here
  if (p == Fraction(1)) return Fraction(1);

  const BigInt a = p.num();
  const BigInt b = p.den();
  const BigInt q = b - a;
  const BigInt denom = ipow(b, m);

  // Sum whichever side has fewer terms.
  if (m - k + 1 <= k) {
    BigInt term = binom(m, k) * ipow(a, k) * ipow(q, m - k);
    BigInt acc = 0;
    for (std::int64_t i = k; i <= m; ++i) {
      acc += term;
      if (i < m) {
        term *= (m - i);
        term *= a;
        term /= (i + 1);
        term /= q;
      }
    }
    return Fraction(acc, denom);
  }
  BigInt term = ipow(q, m);
  BigInt acc = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    acc += term;
    term *= (m - i);
    term *= a;
    term /= (i + 1);
    term /= q;
  }
  return Fraction(denom - acc, denom);
}

Fraction binomial_tail_leq(std::int64_t m, const Fraction& p, std::int64_t k) {
  if (k < 0) return Fraction(0);
  return Fraction(1) - binomial_tail_geq(m, p, k + 1);
}

double binomial_tail_geq_f64(std::int64_t m, double p, std::int64_t k) {
  if (m < 0 || p < 0.0 || p > 1.0) throw DomainError("invalid binomial parameters");
  if (k <= 0) return 1.0;
  if (k > m) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(static_cast<long double>(-p));
  auto log_pmf = [&](std::int64_t i) {
    return log_binom(m, i) + static_cast<long double>(i) * lp +
           static_cast<long double>(m - i) * lq;
  };
  // Sum the side with fewer terms, smallest terms first for stability.
  if (m - k + 1 <= k) {
    CompensatedSum s;
    for (std::int64_t i = m; i >= k; --i) s.add(std::exp(log_pmf(i)));
    return static_cast<double>(std::min(1.0L, s.sum));
  }
  CompensatedSum s;
  for (std::int64_t i = 0; i < k; ++i) s.add(std::exp(log_pmf(i)));
  return static_cast<double>(std::max(0.0L, 1.0L - s.sum));
}

std::vector<Fraction> hypergeometric_pmf(std::int64_t n, std::int64_t m, std::int64_t r) {
  check_hypergeometric_args(n, m, r);
  const BigInt denom = binom(n, r);
  std::vector<Fraction> pmf(static_cast<std::size_t>(r) + 1, Fraction(0));
  const std::int64_t lo = std::max<std::int64_t>(0, r - (n - m));
  const std::int64_t hi = std::min(m, r);
  if (lo > hi) return pmf;  // degenerate only when r == 0
  BigInt term = binom(m, lo) * binom(n - m, r - lo);
  for (std::int64_t i = lo; i <= hi; ++i) {
    pmf[static_cast<std::size_t>(i)] = Fraction(term, denom);
    if (i < hi) {
      term *= (m - i);
      term /= (i + 1);
      term *= (r - i);
      term /= (n - m - (r - i) + 1);
    }
  }
  return pmf;
}

Fraction hypergeometric_tail_geq(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t k) {
  check_hypergeometric_args(n, m, r);
  if (k <= std::max<std::int64_t>(0, r - (n - m))) return Fraction(1);
  const std::int64_t hi = std::min(m, r);
  if (k > hi) return Fraction(0);
  const BigInt denom = binom(n, r);
  BigInt term = binom(m, k) * binom(n - m, r - k);
  BigInt acc = 0;
  for (std::int64_t i = k; i <= hi; ++i) {
    acc += term;
    if (i < hi) {
      term *= (m - i);
      term /= (i + 1);
      term *= (r - i);
      term /= (n - m - (r - i) + 1);
    }
  }
  return Fraction(acc, denom);
}

double hypergeometric_tail_geq_f64(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t k) {
  check_hypergeometric_args(n, m, r);
  const std::int64_t lo = std::max<std::int64_t>(0, r - (n - m));
  const std::int64_t hi = std::min(m, r);
  if (k <= lo) return 1.0;
  if (k > hi) return 0.0;
  const long double lden = log_binom(n, r);
  auto log_pmf = [&](std::int64_t i) {
    return log_binom(m, i) + log_binom(n - m, r - i) - lden;
  };
  // Pick the cheaper side.
  if (hi - k + 1 <= k - lo) {
    CompensatedSum s;
    for (std::int64_t i = hi; i >= k; --i) s.add(std::exp(log_pmf(i)));
    return static_cast<double>(std::min(1.0L, s.sum));
  }
  CompensatedSum s;
  for (std::int64_t i = lo; i < k; ++i) s.add(std::exp(log_pmf(i)));
  return static_cast<double>(std::max(0.0L, 1.0L - s.sum));
}

}  // namespace alloclab
