#include "alloclab/bounds.hpp"

#include "alloclab/evaluator.hpp"
#include "alloclab/optimizer.hpp"

#include <doctest.h>

#include <numeric>

namespace alloclab {
namespace {

TEST_CASE("accessed-count upper bound pins") {
  CHECK(recovery_upper_bound(5, Fraction(2, 3), Fraction(7, 3)) == Fraction(26, 27));
  CHECK(recovery_upper_bound(2, Fraction(1, 2), Fraction(1)) == Fraction(1, 2));
}

TEST_CASE("gap bound pin and exact identity") {
  CHECK(max_spread_gap_bound(5, Fraction(2, 3), Fraction(7, 3)) == Fraction(14, 81));
  // The bound minus the full-spread symmetric value equals the gap exactly,
  // for every (n, p, T).
  for (std::int64_t n : {4, 5, 6, 9}) {
    for (const Fraction& p : {Fraction(1, 4), Fraction(1, 2), Fraction(2, 3), Fraction(9, 10)}) {
      for (const Fraction& T : {Fraction(1), Fraction(3, 2), Fraction(7, 3), Fraction(3)}) {
        const Fraction ub = recovery_upper_bound(n, p, T);
        const Fraction full = eval_symmetric_independent(p, T, n).exact;
        CHECK(ub - full == max_spread_gap_bound(n, p, T));
      }
    }
  }
}

TEST_CASE("upper bound dominates every grid allocation") {
  const std::int64_t n = 4, q = 4;
  for (const Fraction& p : {Fraction(1, 4), Fraction(3, 5)}) {
    for (const Fraction& T : {Fraction(3, 2), Fraction(5, 2)}) {
      const auto best = grid_search(n, IndependentAccess{p}, T, q);
      CHECK(best.best_value.exact <= recovery_upper_bound(n, p, T));
      CHECK(best.best_value.exact <= improved_upper_bound(n, p, T));
    }
  }
}

TEST_CASE("minimal-spreading certificate for all allocations") {
  CHECK(min_spread_global_condition(20, Fraction(1, 128), Fraction(4)).holds);
  const auto fail = min_spread_global_condition(4, Fraction(9, 10), Fraction(5, 2));
  CHECK(!fail.holds);
  CHECK(fail.witness == "fails at ell=0");
  CHECK_THROWS_AS(min_spread_global_condition(4, Fraction(1, 2), Fraction(4)), DomainError);
  CHECK_THROWS_AS(min_spread_global_condition(4, Fraction(1, 2), Fraction(1)), DomainError);
}

TEST_CASE("small-p shortcut implies the global certificate") {
  for (std::int64_t n : {5, 9}) {
    for (std::int64_t tenths = 1; tenths <= 9; ++tenths) {
      const Fraction p(tenths, 10);
      for (const Fraction& T : {Fraction(3, 2), Fraction(2), Fraction(7, 3), Fraction(3)}) {
        if (min_spread_small_p_condition(n, p, T).holds) {
          CHECK(min_spread_global_condition(n, p, T).holds);
        }
      }
    }
  }
  // n - floor(T) == 1 certifies every p and says so.
  const auto v = min_spread_small_p_condition(7, Fraction(99, 100), Fraction(13, 2));
  CHECK(v.holds);
  CHECK(v.witness == "n - floor(T) == 1: holds for every p");
}

TEST_CASE("symmetric spreading certificates: order, pins and implications") {
  const auto vs = symmetric_spread_conditions(20, Fraction(1, 2), Fraction(4));
  REQUIRE(vs.size() == 5);
  CHECK(vs[0].id == ConditionId::theorem4);
  CHECK(vs[1].id == ConditionId::corollary2);
  CHECK(vs[2].id == ConditionId::lemma3);
  CHECK(vs[3].id == ConditionId::lemma4);
  CHECK(vs[4].id == ConditionId::theorem5);
  CHECK(vs[0].holds);
  CHECK(vs[1].holds);

  const auto inv = symmetric_spread_conditions(20, Fraction(1, 3), Fraction(3));
  CHECK(inv[2].holds);
  CHECK(inv[2].witness == "budget equals 1/p exactly");

  const auto small = symmetric_spread_conditions(20, Fraction(1, 5), Fraction(4));
  CHECK(small[2].holds);
  CHECK(small[3].holds);
  CHECK(small[4].holds);

  // Shortcut containments: the cheap tests only fire where the exact ones do.
  for (std::int64_t tenths = 1; tenths <= 9; ++tenths) {
    const Fraction p(tenths, 10);
    for (const Fraction& T : {Fraction(3, 2), Fraction(2), Fraction(7, 3), Fraction(10, 3)}) {
      const auto c = symmetric_spread_conditions(12, p, T);
      if (c[1].holds) CHECK(c[0].holds);  // corollary2 -> theorem4
      if (c[3].holds) CHECK(c[2].holds);  // lemma4 -> lemma3
      if (c[3].holds) CHECK(c[4].holds);  // lemma4's region sits inside theorem5's
    }
  }
}

TEST_CASE("candidate delta: zero at the example tie, identity in general") {
  CHECK(candidate_delta(Fraction(2, 3), Fraction(7, 3), 1) == Fraction(0));
  for (std::int64_t k : {1, 2, 3}) {
    for (const Fraction& p : {Fraction(1, 4), Fraction(3, 5)}) {
      for (const Fraction& T : {Fraction(4, 3), Fraction(5, 2)}) {
        const std::int64_t m_lo = (T * Fraction(k)).floor().convert_to<std::int64_t>();
        const std::int64_t m_hi = (T * Fraction(k + 1)).floor().convert_to<std::int64_t>();
        const Fraction want = eval_symmetric_independent(p, T, m_hi).exact -
                              eval_symmetric_independent(p, T, m_lo).exact;
        CHECK(candidate_delta(p, T, k) == want);
      }
    }
  }
  CHECK_THROWS_AS(candidate_delta(Fraction(1, 2), Fraction(2), 0), DomainError);
}

TEST_CASE("fixed-subset thresholds") {
  const auto t62 = fixed_subset_threshold(6, 2);
  CHECK(t62.threshold == Fraction(2, 3));
  CHECK(t62.tight);
  CHECK(!t62.decomposition.has_value());

  const auto t53 = fixed_subset_threshold(5, 3);
  CHECK(t53.threshold == Fraction(4, 5));
  CHECK(!t53.tight);
  REQUIRE(t53.decomposition.has_value());
  CHECK(t53.decomposition->alpha == 0);
  CHECK(t53.decomposition->r_prime == 5);
  CHECK(t53.decomposition->gcd == 1);

  const auto t43 = fixed_subset_threshold(4, 3);
  CHECK(t43.threshold == Fraction(3, 4));
  CHECK(t43.tight);

  // (n - r) | n makes the threshold exactly r/n and tight.
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t r = 1; r < n; ++r) {
      const auto t = fixed_subset_threshold(n, r);
      CHECK(t.threshold > Fraction(0));
      CHECK(t.threshold < Fraction(1));
      if (n % (n - r) == 0) {
        CHECK(t.tight);
        CHECK(t.threshold == Fraction(r, n));
      }
      if (t.decomposition.has_value()) {
        const auto& d = *t.decomposition;
        CHECK(d.alpha * r + d.r_prime == n);
        CHECK(d.r_prime >= r);
        CHECK(d.r_prime <= 2 * r - 1);
        CHECK(d.gcd == std::gcd(r, d.r_prime));
        CHECK(t.threshold == Fraction(1) - Fraction(d.gcd, d.alpha * d.gcd + d.r_prime));
      } else {
        CHECK(n % r == 0);
        CHECK(t.threshold == Fraction(1) - Fraction(r, n));
      }
    }
  }
  CHECK_THROWS_AS(fixed_subset_threshold(4, 5), DomainError);
}

TEST_CASE("minimum budget for certain recovery") {
  CHECK(min_budget_for_certain_recovery(6, 2) == Fraction(3));
  CHECK(min_budget_for_certain_recovery(5, 3) == Fraction(5, 3));
  CHECK_THROWS_AS(min_budget_for_certain_recovery(3, 0), DomainError);
}

TEST_CASE("covering lower bound") {
  CHECK(cover_lower_bound({1, 2, 3, 4}, {{1, 2}, {3, 4}}) == Fraction(2));
  // Three pairwise overlapping subsets, every element in exactly two.
  CHECK(cover_lower_bound({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}) == Fraction(3, 2));
  CHECK_THROWS_AS(cover_lower_bound({1, 1, 2}, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(cover_lower_bound({1, 2}, {{1, 3}}), DomainError);
  CHECK_THROWS_AS(cover_lower_bound({1, 2}, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(cover_lower_bound({1, 2}, {{1, 2}, {1}}), DomainError);
  CHECK_THROWS_AS(cover_lower_bound({}, {{1}}), DomainError);
  CHECK_THROWS_AS(cover_lower_bound({1}, {}), DomainError);
}

TEST_CASE("refined upper bound") {
  const Fraction ub = improved_upper_bound(5, Fraction(2, 3), Fraction(7, 3));
  CHECK(ub == Fraction(74, 81));
  CHECK(ub >= Fraction(220, 243));                                      // never below the optimum
  CHECK(ub <= recovery_upper_bound(5, Fraction(2, 3), Fraction(7, 3)));  // sharper here
  CHECK(improved_upper_bound(4, Fraction(1, 2), Fraction(4)) >= Fraction(15, 16));
}

TEST_CASE("bounds refuse oversized instances") {
  CHECK_THROWS_AS(recovery_upper_bound(10'001, Fraction(1, 2), Fraction(2)), SizeError);
  CHECK_THROWS_AS(max_spread_gap_bound(10'001, Fraction(1, 2), Fraction(2)), SizeError);
  CHECK_THROWS_AS(improved_upper_bound(1'000'001, Fraction(1, 2), Fraction(1)), SizeError);
  CHECK_THROWS_AS(improved_upper_bound(999'999, Fraction(1, 2), Fraction(999'998)), SizeError);
}

TEST_CASE("randomized placement thresholds and certificates") {
  const auto th = prob_symmetric_thresholds(10, 2);
  CHECK(th.budget_threshold == doctest::Approx(4.330127018922194).epsilon(1e-12));
  CHECK(th.ps_threshold == Fraction(3, 4));
  CHECK(th.budget_certificate > Fraction(0));
  CHECK(th.budget_certificate.to_double() >= th.budget_threshold);
  CHECK(th.budget_certificate.to_double() - th.budget_threshold < 1e-6);
  CHECK_THROWS_AS(prob_symmetric_thresholds(10, 1), DomainError);

  const auto certified = prob_symmetric_conditions(12, 2, Fraction(11, 2));
  REQUIRE(certified.size() == 2);
  CHECK(certified[0].id == ConditionId::theorem8);
  CHECK(certified[0].holds);
  CHECK(certified[1].id == ConditionId::corollary4);
  CHECK(certified[1].holds);
  CHECK(certified[1].witness == "success probability >= 3/4 at ell=2");

  const auto sparse = prob_symmetric_conditions(100, 10, Fraction(3));
  CHECK(!sparse[0].holds);
  CHECK(!sparse[1].holds);
}

}  // namespace
}  // namespace alloclab
