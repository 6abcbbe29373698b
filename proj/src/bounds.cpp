#include "alloclab/bounds.hpp"

#include "alloclab/dist.hpp"
#include "alloclab/evaluator.hpp"
#include "alloclab/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace alloclab {

namespace {

constexpr std::int64_t kMaxExactBoundTerms = 2'000'000;

void check_independent_args(std::int64_t n, const Fraction& p, const Fraction& T) {
  if (n < 1) throw DomainError("node count must be positive");
  if (p <= Fraction(0) || p >= Fraction(1)) {
    throw DomainError("access probability must satisfy 0 < p < 1");
  }
  if (T < Fraction(1) || T > Fraction(n)) throw DomainError("budget must satisfy 1 <= T <= n");
}

SubsetDecomposition decompose(std::int64_t n, std::int64_t r) {
  // n = alpha*r + r_prime, r_prime in {r, ..., 2r-1}; needs n >= r >= 1.
  SubsetDecomposition d;
  d.alpha = n / r - 1;
  d.r_prime = n - d.alpha * r;
  d.gcd = std::gcd(r, d.r_prime);
  return d;
}

}  // namespace

const char* to_string(ConditionId id) {
  switch (id) {
    case ConditionId::theorem3: return "theorem3";
    case ConditionId::corollary1: return "corollary1";
    case ConditionId::theorem4: return "theorem4";
    case ConditionId::corollary2: return "corollary2";
    case ConditionId::lemma3: return "lemma3";
    case ConditionId::lemma4: return "lemma4";
    case ConditionId::theorem5: return "theorem5";
    case ConditionId::theorem8: return "theorem8";
    case ConditionId::corollary4: return "corollary4";
  }
  return "unknown";
}

Fraction recovery_upper_bound(std::int64_t n, const Fraction& p, const Fraction& T) {
  check_independent_args(n, p, T);
  if (n > kFloatPathThreshold) throw SizeError("exact bound capped at n <= 10^4");
  const auto pmf = binomial_pmf(n, p);
  Fraction acc(0);
  const Fraction one(1);
  for (std::int64_t r = 1; r <= n; ++r) {
    Fraction cap = Fraction(r) * T / Fraction(n);
    if (cap > one) cap = one;
    acc += cap * pmf[static_cast<std::size_t>(r)];
  }
  return acc;
}

Fraction max_spread_gap_bound(std::int64_t n, const Fraction& p, const Fraction& T) {
  check_independent_args(n, p, T);
  if (n > kFloatPathThreshold) throw SizeError("exact bound capped at n <= 10^4");
  const std::int64_t need = (Fraction(n) / T).ceil().convert_to<std::int64_t>();
  return p * T * binomial_tail_leq(n - 1, p, need - 2);
}

ConditionVerdict min_spread_global_condition(std::int64_t n, const Fraction& p,
                                             const Fraction& T) {
  if (n < 2) throw DomainError("node count must be at least 2");
  if (p <= Fraction(0) || p >= Fraction(1)) {
    throw DomainError("access probability must satisfy 0 < p < 1");
  }
  if (T <= Fraction(1) || T >= Fraction(n)) {
    throw DomainError("budget must lie strictly between 1 and n");
  }
  if (n > kFloatPathThreshold) throw SizeError("exact condition capped at n <= 10^4");

  const std::int64_t floor_T = T.floor().convert_to<std::int64_t>();
  const Fraction one(1);
  const Fraction ratio = p / (one - p);
  ConditionVerdict v{ConditionId::theorem3, true, std::nullopt};
  for (std::int64_t ell = 0; ell < floor_T; ++ell) {
    const std::int64_t rem = n - ell;
    Fraction expr = one - (one - p).pow(floor_T - n) + Fraction(rem) * ratio;
    const Fraction share = (T - Fraction(ell)) / Fraction(rem);
    const std::int64_t last =
        (Fraction(rem) / (T - Fraction(ell))).ceil().convert_to<std::int64_t>() - 1;
    Fraction rpow = ratio * ratio;
    for (std::int64_t r = 2; r <= last; ++r) {
      expr += (one - share * Fraction(r)) * Fraction(binom(rem, r), 1) * rpow;
      rpow *= ratio;
    }
    if (expr < Fraction(0)) {
      v.holds = false;
      v.witness = "fails at ell=" + std::to_string(ell);
      return v;
    }
  }
  return v;
}

ConditionVerdict min_spread_small_p_condition(std::int64_t n, const Fraction& p,
                                              const Fraction& T) {
  if (n < 2) throw DomainError("node count must be at least 2");
  if (p <= Fraction(0) || p >= Fraction(1)) {
    throw DomainError("access probability must satisfy 0 < p < 1");
  }
  if (T < Fraction(1) || T >= Fraction(n)) {
    throw DomainError("budget must satisfy 1 <= T < n");
  }
  const std::int64_t gap = n - T.floor().convert_to<std::int64_t>();
  ConditionVerdict v{ConditionId::corollary1, p <= Fraction(2, BigInt(gap) * gap),
                     std::nullopt};
  if (gap == 1) v.witness = "n - floor(T) == 1: holds for every p";
  return v;
}

std::vector<ConditionVerdict> symmetric_spread_conditions(std::int64_t n, const Fraction& p,
                                                          const Fraction& T) {
  check_independent_args(n, p, T);
  const std::int64_t floor_T = T.floor().convert_to<std::int64_t>();
  const std::int64_t ceil_T = T.ceil().convert_to<std::int64_t>();
  const Fraction one(1);
  const Fraction q = one - p;

  std::vector<ConditionVerdict> out;

  // Maximal spreading: q^floor(T) + 2 floor(T) p q^(floor(T)-1) <= 1.
  {
    Fraction lhs = q.pow(floor_T) + Fraction(2 * floor_T) * p * q.pow(floor_T - 1);
    out.push_back({ConditionId::theorem4, lhs <= one, std::nullopt});
  }
  out.push_back({ConditionId::corollary2, p >= Fraction(4, 3 * floor_T), std::nullopt});

  // Minimal spreading, exact form: either T == 1/p with integer T, or
  // T < 1/p together with p q^(ceil(T)-1) <= (1/T)(1 - 1/T)^(ceil(T)-1).
  {
    ConditionVerdict v{ConditionId::lemma3, false, std::nullopt};
    if (T > one) {
      if (T.is_integer() && p * T == one) {
        v.holds = true;
        v.witness = "budget equals 1/p exactly";
      } else if (p * T < one) {
        const Fraction inv = one / T;
        if (p * q.pow(ceil_T - 1) <= inv * (one - inv).pow(ceil_T - 1)) {
          v.holds = true;
        }
      }
    }
    out.push_back(std::move(v));
  }
  out.push_back(
      {ConditionId::lemma4, p <= Fraction(2, ceil_T) - Fraction(1) / T, std::nullopt});
  out.push_back({ConditionId::theorem5, p <= Fraction(1, ceil_T), std::nullopt});
  return out;
}

Fraction candidate_delta(const Fraction& p, const Fraction& T, std::int64_t k) {
  if (k < 1) throw DomainError("candidate index k must be positive");
  if (T < Fraction(1)) throw DomainError("budget must satisfy T >= 1");
  if (p <= Fraction(0) || p >= Fraction(1)) {
    throw DomainError("access probability must satisfy 0 < p < 1");
  }
  const std::int64_t m_lo = (T * Fraction(k)).floor().convert_to<std::int64_t>();
  const std::int64_t m_hi = (T * Fraction(k + 1)).floor().convert_to<std::int64_t>();
  if (m_hi > kFloatPathThreshold) throw SizeError("exact delta capped at floor((k+1)T) <= 10^4");
  const std::int64_t a = m_hi - m_lo;
  const Fraction one(1);
  const Fraction ratio = p / (one - p);

  Fraction inner(0);
  const std::int64_t i_hi = std::min<std::int64_t>(a - 1, k);
  for (std::int64_t i = 1; i <= i_hi; ++i) {
    const Fraction c_ki(binom(m_lo, k - i), 1);
    for (std::int64_t j = i + 1; j <= a; ++j) {
      inner += c_ki * Fraction(binom(a, j), 1) * ratio.pow(j - i);
    }
  }
  inner -= Fraction(binom(m_lo, k), 1);
  return p.pow(k) * (one - p).pow(m_hi - k) * inner;
}

SubsetThreshold fixed_subset_threshold(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1 || r > n) throw DomainError("threshold requires 1 <= r <= n");
  SubsetThreshold out;
  if (n % r == 0) {
    out.threshold = Fraction(1) - Fraction(r, n);
    out.tight = true;
    return out;
  }
  const SubsetDecomposition d = decompose(n, r);
  out.threshold = Fraction(1) - Fraction(d.gcd, d.alpha * d.gcd + d.r_prime);
  out.tight = (n % (n - r) == 0);
  out.decomposition = d;
  return out;
}

Fraction min_budget_for_certain_recovery(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1 || r > n) throw DomainError("budget floor requires 1 <= r <= n");
  return Fraction(n, r);
}

Fraction cover_lower_bound(const std::vector<std::int64_t>& universe,
                           const std::vector<std::vector<std::int64_t>>& subsets) {
  if (universe.empty()) throw DomainError("universe must be nonempty");
  if (subsets.empty()) throw DomainError("at least one covering subset is required");
  std::set<std::int64_t> ground(universe.begin(), universe.end());
  if (ground.size() != universe.size()) throw DomainError("universe has duplicate elements");

  std::map<std::int64_t, std::int64_t> multiplicity;
  for (auto e : ground) multiplicity[e] = 0;
  for (const auto& s : subsets) {
    std::set<std::int64_t> seen;
    for (auto e : s) {
      if (!ground.count(e)) {
        throw DomainError("subset element " + std::to_string(e) + " is not in the universe");
      }
      if (!seen.insert(e).second) {
        throw DomainError("element " + std::to_string(e) + " repeats within one subset");
      }
      ++multiplicity[e];
    }
  }
  const std::int64_t b = multiplicity.begin()->second;
  for (const auto& [e, count] : multiplicity) {
    if (count != b || count == 0) {
      throw DomainError("element " + std::to_string(e) + " appears " + std::to_string(count) +
                        " times; expected uniform positive multiplicity");
    }
  }
  return Fraction(static_cast<std::int64_t>(subsets.size()), b);
}

Fraction improved_upper_bound(std::int64_t n, const Fraction& p, const Fraction& T) {
  check_independent_args(n, p, T);
  const std::int64_t floor_T = T.floor().convert_to<std::int64_t>();
  if (n * (floor_T + 1) > kMaxExactBoundTerms) {
    throw SizeError("instance too large for the exact refined bound");
  }
  const Fraction one(1);
  const Fraction q = one - p;

  Fraction best(0);
  for (std::int64_t ell = 0; ell <= floor_T; ++ell) {
    Fraction val = one - q.pow(ell);
    const std::int64_t rem = n - ell;
    if (ell < floor_T && rem >= 2) {
      const Fraction budget_left = T - Fraction(ell);
      const auto pmf = binomial_pmf(rem, p);
      Fraction s(0);
      for (std::int64_t r = 2; r <= rem; ++r) {
        Fraction cap = Fraction(r) * budget_left / Fraction(rem);
        if (cap > one) cap = one;
        // Sharpen with the fixed-subset threshold when the leftover budget
        // cannot make every r-subset certain.
        Fraction alt = one;
        if (budget_left < Fraction(rem, r)) {
          const SubsetDecomposition d = decompose(rem, r);
          alt = one - Fraction(d.gcd, d.alpha * d.gcd + d.r_prime);
        }
        s += std::min(cap, alt) * pmf[static_cast<std::size_t>(r)];
      }
      val += q.pow(ell) * s;
    }
    if (val > best) best = val;
  }
  return best;
}

ProbSymThresholds prob_symmetric_thresholds(std::int64_t n, std::int64_t r) {
  if (r < 2 || r > n) throw DomainError("thresholds require 2 <= r <= n");
  if (n > kMaxSymmetricN) throw DomainError("node count capped at 10^6");
  ProbSymThresholds out;
  out.budget_threshold = (static_cast<double>(n) / static_cast<double>(r)) *
                         std::pow(0.75, 1.0 / static_cast<double>(r));
  // Outward-rounded certificate: inflate a hair beyond binary64 error, then
  // take the ceiling on the 1e-12 grid.
  const double inflated = out.budget_threshold * (1.0 + 1e-13);
  const BigInt grid = ipow(10, 12);
  BigInt num = BigInt(std::ceil(inflated * 1e12));
  out.budget_certificate = Fraction(num, grid);
  out.ps_threshold = Fraction(3, 4);
  return out;
}

std::vector<ConditionVerdict> prob_symmetric_conditions(std::int64_t n, std::int64_t r,
                                                        const Fraction& T) {
  const auto th = prob_symmetric_thresholds(n, r);
  if (T < Fraction(1) || T > Fraction(n)) throw DomainError("budget must satisfy 1 <= T <= n");

  std::vector<ConditionVerdict> out;
  {
    const bool holds = T >= th.budget_certificate || T >= Fraction(n, r);
    ConditionVerdict v{ConditionId::theorem8, holds, std::nullopt};
    if (holds) v.witness = "T >= (n/r)(3/4)^(1/r)";
    out.push_back(std::move(v));
  }
  {
    // Achievability check: best success probability over ell in {1..r}.
    bool achieved = false;
    std::int64_t at = 0;
    const Fraction target(3, 4);
    for (std::int64_t ell = 1; ell <= r; ++ell) {
      const auto res = eval_prob_symmetric(n, r, T, Fraction(ell));
      const bool ok = res.mode == EvalMode::exact ? res.exact >= target
                                                  : res.value >= target.to_double();
      if (ok) {
        achieved = true;
        at = ell;
        break;
      }
    }
    ConditionVerdict v{ConditionId::corollary4, achieved, std::nullopt};
    if (achieved) v.witness = "success probability >= 3/4 at ell=" + std::to_string(at);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace alloclab
