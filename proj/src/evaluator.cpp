#include "alloclab/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace alloclab {

ValueGrouping ValueGrouping::of(const Allocation& alloc) {
  std::map<Fraction, std::int64_t> groups;
  for (const auto& v : alloc.amounts()) ++groups[v];
  ValueGrouping g;
  g.values.reserve(groups.size());
  g.counts.reserve(groups.size());
  for (const auto& [value, count] : groups) {
    g.values.push_back(value);
    g.counts.push_back(count);
    g.total += count;
  }
  return g;
}

BigInt ValueGrouping::state_count() const {
  BigInt s = 1;
  for (auto c : counts) s *= (c + 1);
  return s;
}

namespace detail {

namespace {

struct U64Binom {
  // Rows up to n = kMaxExactN; every entry fits comfortably in 64 bits.
  std::vector<std::vector<std::uint64_t>> rows;
  U64Binom() {
    rows.resize(kMaxExactN + 1);
    for (std::int64_t i = 0; i <= kMaxExactN; ++i) {
      rows[i].resize(i + 1, 1);
      for (std::int64_t j = 1; j < i; ++j) {
        rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
      }
    }
  }
};

const U64Binom& u64_binom() {
  static const U64Binom table;
  return table;
}

// Count-vector recursion over groups with two prunes: once the partial sum
// reaches the threshold every completion succeeds (Vandermonde collapses the
// remaining choices to C(remaining, t)); once it cannot reach the threshold
// the branch dies.
template <typename Sum>
struct Enumerator {
  const std::vector<std::int64_t>& counts;
  const std::vector<Sum>& scaled;         // clamped per-group values
  const Sum threshold;                    // success when partial sum >= threshold
  std::vector<Sum> suffix_max;            // max attainable sum from group g on
  std::vector<std::int64_t> suffix_count; // nodes remaining from group g on
  std::vector<std::uint64_t> out;

  Enumerator(const std::vector<std::int64_t>& counts_, const std::vector<Sum>& scaled_,
             Sum threshold_, std::int64_t total)
      : counts(counts_), scaled(scaled_), threshold(threshold_) {
    const std::size_t g = counts.size();
    suffix_max.assign(g + 1, Sum(0));
    suffix_count.assign(g + 1, 0);
    for (std::size_t i = g; i-- > 0;) {
      Sum group_sum = scaled[i];
      for (std::int64_t c = 1; c < counts[i]; ++c) group_sum += scaled[i];
      suffix_max[i] = suffix_max[i + 1] + group_sum;
      suffix_count[i] = suffix_count[i + 1] + counts[i];
    }
    out.assign(static_cast<std::size_t>(total) + 1, 0);
  }

  void run(std::size_t g, std::int64_t k, Sum sum, std::uint64_t ways) {
    if (sum >= threshold) {
      const std::int64_t rem = suffix_count[g];
      const auto& row = u64_binom().rows[static_cast<std::size_t>(rem)];
      for (std::int64_t t = 0; t <= rem; ++t) {
        out[static_cast<std::size_t>(k + t)] += ways * row[static_cast<std::size_t>(t)];
      }
      return;
    }
    if (g == counts.size()) return;
    Sum reach = sum + suffix_max[g];
    if (reach < threshold) return;
    const std::int64_t c = counts[g];
    const auto& row = u64_binom().rows[static_cast<std::size_t>(c)];
    Sum s = sum;
    for (std::int64_t j = 0; j <= c; ++j) {
      run(g + 1, k + j, s, ways * row[static_cast<std::size_t>(j)]);
      if (j < c) s += scaled[g];
    }
  }
};

}  // namespace

std::vector<std::uint64_t> success_counts_scaled(const std::vector<std::uint64_t>& values,
                                                 const std::vector<std::int64_t>& counts,
                                                 std::uint64_t threshold) {
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (total > kMaxExactN) {
    throw SizeError("instance too large for exact evaluation (n > 30); use montecarlo");
  }
  Enumerator<std::uint64_t> e(counts, values, threshold, total);
  e.run(0, 0, 0, 1);
  return std::move(e.out);
}

std::vector<std::uint64_t> success_counts_by_size(const ValueGrouping& grouping) {
  if (grouping.total > kMaxExactN) {
    throw SizeError("instance too large for exact evaluation (n > 30); use montecarlo");
  }
  if (grouping.state_count() > kMaxEnumStates) {
    throw SizeError("instance too large; use montecarlo");
  }

  // Clamp to 1 before scaling; keeps denominators small and success sets
  // identical.
  std::vector<Fraction> clamped;
  clamped.reserve(grouping.values.size());
  for (const auto& v : grouping.values) clamped.push_back(v > Fraction(1) ? Fraction(1) : v);

  BigInt lcm = 1;
  for (const auto& v : clamped) lcm = boost::multiprecision::lcm(lcm, v.den());

  const BigInt u64_cap = (std::numeric_limits<std::uint64_t>::max)() / (kMaxExactN + 2);
  bool fits_u64 = lcm <= u64_cap;
  if (fits_u64) {
    for (const auto& v : clamped) {
      if (v.num() * (lcm / v.den()) > u64_cap) {
        fits_u64 = false;
        break;
      }
    }
  }

  if (fits_u64) {
    std::vector<std::uint64_t> scaled;
    scaled.reserve(clamped.size());
    for (const auto& v : clamped) {
      scaled.push_back((v.num() * (lcm / v.den())).convert_to<std::uint64_t>());
    }
    Enumerator<std::uint64_t> e(grouping.counts, scaled, lcm.convert_to<std::uint64_t>(),
                                grouping.total);
    e.run(0, 0, 0, 1);
    return std::move(e.out);
  }

  Enumerator<Fraction> e(grouping.counts, clamped, Fraction(1), grouping.total);
  e.run(0, 0, Fraction(0), 1);
  return std::move(e.out);
}

}  // namespace detail

EvalResult eval_independent(const Allocation& alloc, const Fraction& p) {
  validate_model(IndependentAccess{p}, alloc.n());
  const auto grouping = ValueGrouping::of(alloc);
  const auto counts = detail::success_counts_by_size(grouping);
  const std::int64_t n = alloc.n();
  const BigInt a = p.num();
  const BigInt b = p.den();
  const BigInt q = b - a;
  // P = sum_k N_k p^k (1-p)^(n-k), assembled over the common denominator b^n.
  BigInt acc = 0;
  BigInt w = ipow(q, n);  // a^0 q^n
  for (std::int64_t k = 0; k <= n; ++k) {
    if (counts[static_cast<std::size_t>(k)] != 0) {
      acc += BigInt(counts[static_cast<std::size_t>(k)]) * w;
    }
    if (k < n) {
      w *= a;
      w /= q;  // exact: w always carries a factor q^(n-k)
    }
  }
  return EvalResult::from_exact(Fraction(acc, ipow(b, n)));
}

EvalResult eval_symmetric_independent(const Fraction& p, const Fraction& T, std::int64_t m) {
  if (m < 1 || m > kMaxSymmetricN) throw DomainError("m must satisfy 1 <= m <= 10^6");
  if (T < Fraction(1)) throw DomainError("budget must satisfy T >= 1");
  if (p <= Fraction(0) || p >= Fraction(1)) {
    throw DomainError("access probability must satisfy 0 < p < 1");
  }
  const std::int64_t k = (Fraction(m) / T).ceil().convert_to<std::int64_t>();
  if (m > kFloatPathThreshold) {
    return EvalResult::from_float64(binomial_tail_geq_f64(m, p.to_double(), k),
                                    kFloatPathAbsError);
  }
  return EvalResult::from_exact(binomial_tail_geq(m, p, k));
}

EvalResult eval_fixed_subset(const Allocation& alloc, std::int64_t r) {
  validate_model(FixedSubsetAccess{r}, alloc.n());
  const auto grouping = ValueGrouping::of(alloc);
  const auto counts = detail::success_counts_by_size(grouping);
  return EvalResult::from_exact(
      Fraction(BigInt(counts[static_cast<std::size_t>(r)]), binom(alloc.n(), r)));
}

EvalResult eval_symmetric_fixed_subset(std::int64_t n, const Fraction& T, std::int64_t m,
                                       std::int64_t r) {
  if (n < 1 || n > kMaxSymmetricN) throw DomainError("n must satisfy 1 <= n <= 10^6");
  if (m < 1 || m > n) throw DomainError("nonempty node count must satisfy 1 <= m <= n");
  if (r < 1 || r > n) throw DomainError("subset size must satisfy 1 <= r <= n");
  if (T < Fraction(1) || T > Fraction(n)) throw DomainError("budget must satisfy 1 <= T <= n");
  const std::int64_t k = (Fraction(m) / T).ceil().convert_to<std::int64_t>();
  if (n > kFloatPathThreshold) {
    return EvalResult::from_float64(hypergeometric_tail_geq_f64(n, m, r, k),
                                    kFloatPathAbsError);
  }
  return EvalResult::from_exact(hypergeometric_tail_geq(n, m, r, k));
}

EvalResult eval_prob_symmetric(std::int64_t n, std::int64_t r, const Fraction& T,
                               const Fraction& ell) {
  if (n < 1 || n > kMaxSymmetricN) throw DomainError("n must satisfy 1 <= n <= 10^6");
  validate_model(ProbSymmetricAccess{r, ell}, n);
  if (T < Fraction(1) || T > Fraction(n)) throw DomainError("budget must satisfy 1 <= T <= n");
  const std::int64_t need = ell.ceil().convert_to<std::int64_t>();
  if (need > r) return EvalResult::from_exact(Fraction(0));
  Fraction stock = ell * T / Fraction(n);
  if (stock > Fraction(1)) stock = Fraction(1);
  if (r > kFloatPathThreshold) {
    return EvalResult::from_float64(binomial_tail_geq_f64(r, stock.to_double(), need),
                                    kFloatPathAbsError);
  }
  return EvalResult::from_exact(binomial_tail_geq(r, stock, need));
}

}  // namespace alloclab
