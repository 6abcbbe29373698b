#include "alloclab/fixtures.hpp"

#include "alloclab/bounds.hpp"
#include "alloclab/evaluator.hpp"
#include "alloclab/model.hpp"
#include "alloclab/montecarlo.hpp"
#include "alloclab/optimizer.hpp"

#include <cmath>
#include <sstream>

namespace alloclab {

namespace {

Fraction frac(std::int64_t a, std::int64_t b) { return Fraction(a, b); }

Allocation alloc(std::vector<Fraction> xs) { return Allocation(std::move(xs)); }

FixtureOutcome expect_fraction(const Fraction& got, const Fraction& want) {
  if (got == want) return {true, "value " + got.str()};
  return {false, "expected " + want.str() + ", got " + got.str()};
}

FixtureOutcome expect_int(std::int64_t got, std::int64_t want) {
  if (got == want) return {true, "value " + std::to_string(got)};
  return {false, "expected " + std::to_string(want) + ", got " + std::to_string(got)};
}

FixtureOutcome expect_true(bool ok, const std::string& detail) {
  return {ok, ok ? detail : "check failed: " + detail};
}

}  // namespace

const std::vector<Fixture>& reference_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> fx;
    auto add = [&fx](std::string id, std::string summary,
                     std::function<FixtureOutcome()> run) {
      fx.push_back({std::move(id), std::move(summary), std::move(run)});
    };

    add("symmetric-expand-two-nodes", "budget 7/3 over 2 of 5 nodes puts 7/6 on each", [] {
      const auto a = make_symmetric(5, frac(7, 3), 2);
      const std::vector<Fraction> want = {frac(7, 6), frac(7, 6), 0, 0, 0};
      return expect_true(a.amounts() == want, "allocation (7/6, 7/6, 0, 0, 0)");
    });

    add("symmetric-expand-full-spread", "budget 2 over all 4 nodes puts 1/2 on each", [] {
      const auto a = make_symmetric(4, 2, 4);
      const std::vector<Fraction> want(4, frac(1, 2));
      return expect_true(a.amounts() == want, "allocation (1/2, 1/2, 1/2, 1/2)");
    });

    add("independent-nonsymmetric-value", "(2/3,2/3,1/3,1/3,1/3) at p=2/3 recovers w.p. 220/243",
        [] {
          const auto v = eval_independent(
              alloc({frac(2, 3), frac(2, 3), frac(1, 3), frac(1, 3), frac(1, 3)}), frac(2, 3));
          auto out = expect_fraction(v.exact, frac(220, 243));
          if (out.pass && v.exact.decimal(5) != "0.90535") {
            return FixtureOutcome{false, "decimal rendering " + v.exact.decimal(5)};
          }
          return out;
        });

    add("independent-best-symmetric-value",
        "both symmetric optima at n=5, T=7/3 recover w.p. 8/9", [] {
          const auto v2 = eval_independent(make_symmetric(5, frac(7, 3), 2), frac(2, 3));
          const auto v4 = eval_independent(make_symmetric(5, frac(7, 3), 4), frac(2, 3));
          if (v2.exact != frac(8, 9)) return expect_fraction(v2.exact, frac(8, 9));
          if (v4.exact != frac(8, 9)) return expect_fraction(v4.exact, frac(8, 9));
          if (v2.exact.decimal(5) != "0.88889") {
            return FixtureOutcome{false, "decimal rendering " + v2.exact.decimal(5)};
          }
          return FixtureOutcome{true, "value 8/9 at m=2 and m=4"};
        });

    add("symmetric-min-spread-closed-form",
        "m = floor(T) nodes give 1 - (1-p)^floor(T)", [] {
          const auto v1 = eval_symmetric_independent(frac(2, 3), frac(7, 3), 2);
          if (v1.exact != frac(8, 9)) return expect_fraction(v1.exact, frac(8, 9));
          const auto v2 = eval_symmetric_independent(frac(3, 5), frac(5, 2), 2);
          return expect_fraction(v2.exact, Fraction(1) - frac(2, 5) * frac(2, 5));
        });

    add("subset-single-full-node", "one complete node among 4, pairs drawn: r/n = 1/2", [] {
      const auto v = eval_fixed_subset(alloc({1, 0, 0, 0}), 2);
      return expect_fraction(v.exact, frac(1, 2));
    });

    add("subset-spread-all-but-one", "halves on 5 of 6 nodes, pairs drawn: C(5,2)/C(6,2)", [] {
      const auto v = eval_fixed_subset(
          alloc({0, frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)}), 2);
      return expect_fraction(v.exact, frac(2, 3));
    });

    add("probsym-full-budget-certain", "ell = r with T = n/r stocks every read node", [] {
      const auto v = eval_prob_symmetric(10, 5, 2, 5);
      return expect_fraction(v.exact, 1);
    });

    add("probsym-coin-pair", "ell=1, r=2, T=n/2: each read node stocked w.p. 1/2", [] {
      const auto v = eval_prob_symmetric(10, 2, 5, 1);
      return expect_fraction(v.exact, frac(3, 4));
    });

    add("probsym-collapse-equality", "success tops out at 3/4 for ell=1, r=2 at T=n/2", [] {
      for (std::int64_t n : {4, 6, 8}) {
        const auto v = eval_prob_symmetric(n, 2, frac(n, 2), 1);
        if (v.exact != frac(3, 4)) return expect_fraction(v.exact, frac(3, 4));
      }
      return FixtureOutcome{true, "value 3/4 at n = 4, 6, 8"};
    });

    add("upper-bound-counterexample-instance", "accessed-count bound at (5, 2/3, 7/3) is 26/27",
        [] { return expect_fraction(recovery_upper_bound(5, frac(2, 3), frac(7, 3)), frac(26, 27)); });

    add("upper-bound-two-nodes", "accessed-count bound at (2, 1/2, 1) is 1/2",
        [] { return expect_fraction(recovery_upper_bound(2, frac(1, 2), 1), frac(1, 2)); });

    add("gap-bound-value", "bound-vs-max-spread gap at (5, 2/3, 7/3) is 14/81",
        [] { return expect_fraction(max_spread_gap_bound(5, frac(2, 3), frac(7, 3)), frac(14, 81)); });

    add("gap-identity", "upper bound minus full-spread value equals the gap exactly", [] {
      const auto ub = recovery_upper_bound(5, frac(2, 3), frac(7, 3));
      const auto full = eval_symmetric_independent(frac(2, 3), frac(7, 3), 5);
      return expect_fraction(ub - full.exact, max_spread_gap_bound(5, frac(2, 3), frac(7, 3)));
    });

    add("min-spread-global-small-p", "minimal spreading certified at (20, 1/128, 4)", [] {
      const auto v = min_spread_global_condition(20, frac(1, 128), 4);
      return expect_true(v.holds, "certificate holds");
    });

    add("min-spread-global-large-p-fails", "no certificate at (4, 9/10, 5/2)", [] {
      const auto v = min_spread_global_condition(4, frac(9, 10), frac(5, 2));
      return expect_true(!v.holds && v.witness.has_value(),
                         "certificate fails with witness " + v.witness.value_or("none"));
    });

    add("small-p-shortcut-near-full-budget",
        "n - floor(T) = 1 certifies minimal spreading for every p", [] {
          const auto v = min_spread_small_p_condition(7, frac(99, 100), frac(13, 2));
          return expect_true(v.holds, "certificate holds");
        });

    add("symmetric-conditions-max-spread", "(20, 1/2, 4) certifies maximal spreading", [] {
      const auto vs = symmetric_spread_conditions(20, frac(1, 2), 4);
      const bool t4 = vs[0].holds, c2 = vs[1].holds;
      return expect_true(t4 && c2, "theorem4 and corollary2 hold");
    });

    add("symmetric-conditions-exact-inverse", "T = 1/p integer certifies minimal spreading", [] {
      const auto vs = symmetric_spread_conditions(20, frac(1, 3), 3);
      return expect_true(vs[2].holds, "lemma3 holds");
    });

    add("symmetric-conditions-small-p", "(20, 1/5, 4) certifies minimal spreading", [] {
      const auto vs = symmetric_spread_conditions(20, frac(1, 5), 4);
      return expect_true(vs[4].holds, "theorem5 holds");
    });

    add("candidate-delta-zero-at-tie",
        "consecutive candidates tie at (p, T, k) = (2/3, 7/3, 1)",
        [] { return expect_fraction(candidate_delta(frac(2, 3), frac(7, 3), 1), 0); });

    add("candidate-delta-identity", "closed form matches the tail difference it abbreviates", [] {
      const Fraction p = frac(1, 2), T = frac(5, 2);
      const auto delta = candidate_delta(p, T, 2);
      const auto hi = eval_symmetric_independent(p, T, 7);
      const auto lo = eval_symmetric_independent(p, T, 5);
      return expect_fraction(delta, hi.exact - lo.exact);
    });

    add("subset-threshold-divisible", "(n, r) = (6, 2): threshold 2/3, tight", [] {
      const auto t = fixed_subset_threshold(6, 2);
      if (t.threshold != frac(2, 3)) return expect_fraction(t.threshold, frac(2, 3));
      return expect_true(t.tight && !t.decomposition.has_value(), "tight, no decomposition");
    });

    add("subset-threshold-5-3", "(n, r) = (5, 3): threshold 4/5 via alpha=0, r'=5", [] {
      const auto t = fixed_subset_threshold(5, 3);
      if (t.threshold != frac(4, 5)) return expect_fraction(t.threshold, frac(4, 5));
      const bool d_ok = t.decomposition && t.decomposition->alpha == 0 &&
                        t.decomposition->r_prime == 5 && t.decomposition->gcd == 1;
      return expect_true(!t.tight && d_ok, "decomposition 5 = 0*3 + 5");
    });

    add("subset-threshold-4-3", "(n, r) = (4, 3): threshold 3/4, tight since (n-r) | n", [] {
      const auto t = fixed_subset_threshold(4, 3);
      if (t.threshold != frac(3, 4)) return expect_fraction(t.threshold, frac(3, 4));
      return expect_true(t.tight, "tight");
    });

    add("min-budget-certain-6-2", "budget n/r = 3 is needed for certain recovery",
        [] { return expect_fraction(min_budget_for_certain_recovery(6, 2), 3); });

    add("cover-bound-disjoint-pairs", "two disjoint pairs covering 4 elements force total >= 2",
        [] {
          const auto v = cover_lower_bound({1, 2, 3, 4}, {{1, 2}, {3, 4}});
          return expect_fraction(v, 2);
        });

    add("improved-bound-sandwich",
        "refined bound sits between the true optimum and the accessed-count bound", [] {
          const auto ub = improved_upper_bound(5, frac(2, 3), frac(7, 3));
          const auto coarse = recovery_upper_bound(5, frac(2, 3), frac(7, 3));
          const bool ok = ub >= frac(220, 243) && ub <= coarse;
          return expect_true(ok, "220/243 <= " + ub.str() + " <= " + coarse.str());
        });

    add("improved-bound-full-budget", "with T = n the bound cannot dip below 1-(1-p)^n", [] {
      const auto ub = improved_upper_bound(4, frac(1, 2), 4);
      return expect_true(ub >= Fraction(1) - frac(1, 16), "bound " + ub.str());
    });

    add("probsym-thresholds", "success threshold 3/4; budget certificate rounds outward", [] {
      for (auto [n, r] : {std::pair<std::int64_t, std::int64_t>{10, 2}, {120, 12}}) {
        const auto th = prob_symmetric_thresholds(n, r);
        if (th.ps_threshold != frac(3, 4)) return expect_fraction(th.ps_threshold, frac(3, 4));
        const double cert = th.budget_certificate.to_double();
        if (!(cert >= th.budget_threshold && cert - th.budget_threshold < 1e-6)) {
          return FixtureOutcome{false, "certificate not an outward rounding"};
        }
      }
      return FixtureOutcome{true, "certificates bracket (n/r)(3/4)^(1/r) from above"};
    });

    add("candidate-set-20", "candidates at (20, 7/3) are floor(k*7/3) plus n", [] {
      const std::vector<std::int64_t> want = {2, 4, 7, 9, 11, 14, 16, 18, 20};
      return expect_true(candidate_m_set(20, frac(7, 3)) == want,
                         "{2,4,7,9,11,14,16,18,20}");
    });

    add("candidate-set-10", "candidates at (10, 5/2) are {2,5,7,10}", [] {
      const std::vector<std::int64_t> want = {2, 5, 7, 10};
      return expect_true(candidate_m_set(10, frac(5, 2)) == want, "{2,5,7,10}");
    });

    add("optimal-independent-interior-5", "(10, 9/25, 5/2) optimizes at m = floor(2T) = 5",
        [] { return expect_int(optimal_symmetric_independent(10, frac(9, 25), frac(5, 2)).best_param, 5); });

    add("optimal-independent-interior-7", "(10, 3/5, 12/5) optimizes at m = floor(3T) = 7",
        [] { return expect_int(optimal_symmetric_independent(10, frac(3, 5), frac(12, 5)).best_param, 7); });

    add("optimal-independent-minimal", "(4, 7/10, 7/5) optimizes at m = 1",
        [] { return expect_int(optimal_symmetric_independent(4, frac(7, 10), frac(7, 5)).best_param, 1); });

    add("optimal-subset-interior-14-5", "(14, 5, 8/3) optimizes at m = 8",
        [] { return expect_int(optimal_symmetric_fixed_subset(14, 5, frac(8, 3)).best_param, 8); });

    add("optimal-subset-interior-16-4", "(16, 4, 7/2) optimizes at m = 7",
        [] { return expect_int(optimal_symmetric_fixed_subset(16, 4, frac(7, 2)).best_param, 7); });

    add("optimal-subset-20-4-family", "(20, 4) sweeps to m* = 4, 18, 14, 19, 20", [] {
      const std::pair<Fraction, std::int64_t> cases[] = {
          {frac(17, 4), 4}, {frac(9, 2), 18}, {frac(467, 100), 14}, {frac(19, 4), 19}, {5, 20}};
      for (const auto& [T, want] : cases) {
        const auto got = optimal_symmetric_fixed_subset(20, 4, T).best_param;
        if (got != want) {
          return FixtureOutcome{false, "T=" + T.str() + ": expected m*=" + std::to_string(want) +
                                           ", got " + std::to_string(got)};
        }
      }
      return FixtureOutcome{true, "m* = 4, 18, 14, 19, 20"};
    });

    add("optimal-ell-sparse-budget", "(100, 10, 3) spreads to ell = 1",
        [] { return expect_int(optimal_ell(100, 10, 3).best_param, 1); });

    add("optimal-ell-full-spread", "(12, 2, 11/2) clears the budget threshold, ell = r", [] {
      const auto res = optimal_ell(12, 2, frac(11, 2));
      const auto conds = prob_symmetric_conditions(12, 2, frac(11, 2));
      if (!conds[0].holds) return FixtureOutcome{false, "budget certificate did not fire"};
      return expect_int(res.best_param, 2);
    });

    add("grid-search-counterexample", "grid q=6 at (5, p=2/3, T=7/3) finds (2/3,2/3,1/3,1/3,1/3)",
        [] {
          const auto res = grid_search(5, IndependentAccess{frac(2, 3)}, frac(7, 3), 6);
          if (res.best_value.exact != frac(220, 243)) {
            return expect_fraction(res.best_value.exact, frac(220, 243));
          }
          const std::vector<std::int64_t> want = {4, 4, 2, 2, 2};
          return expect_true(res.best.numerators == want && !res.best_is_symmetric,
                             "allocation (2/3, 2/3, 1/3, 1/3, 1/3)");
        });

    add("grid-search-even-split", "grid q=6 at (3, p=3/5, T=3/2) finds (1/2,1/2,1/2)", [] {
      const auto res = grid_search(3, IndependentAccess{frac(3, 5)}, frac(3, 2), 6);
      if (res.best_value.exact != frac(81, 125)) {
        return expect_fraction(res.best_value.exact, frac(81, 125));
      }
      const std::vector<std::int64_t> want = {3, 3, 3};
      return expect_true(res.best.numerators == want && res.best_is_symmetric,
                         "allocation (1/2, 1/2, 1/2)");
    });

    add("grid-search-single-node", "grid q=2 at (2, T=1) concentrates on one node", [] {
      const auto res = grid_search(2, IndependentAccess{frac(1, 2)}, 1, 2);
      const std::vector<std::int64_t> want = {2, 0};
      if (res.best.numerators != want) return expect_true(false, "allocation (1, 0)");
      return expect_fraction(res.best_value.exact, frac(1, 2));
    });

    add("montecarlo-counterexample", "seeded estimate brackets 220/243 within 3 sigma", [] {
      const auto res = mc_estimate(
          alloc({frac(2, 3), frac(2, 3), frac(1, 3), frac(1, 3), frac(1, 3)}),
          IndependentAccess{frac(2, 3)}, McConfig{1'000'000, 0, 4, 1});
      const double exact = frac(220, 243).to_double();
      std::ostringstream os;
      os << "estimate " << res.value << " radius " << res.error_radius;
      return expect_true(std::abs(res.value - exact) <= res.error_radius, os.str());
    });

    add("regime-gap-window", "(20, 3/10, 4) sits in the uncertified gap region", [] {
      const auto rep = classify_regime(20, frac(3, 10), 4);
      return expect_true(rep.gap_region && rep.p_boundary == frac(1, 4),
                         "gap region with boundary marker 1/4");
    });

    return fx;
  }();
  return fixtures;
}

}  // namespace alloclab
