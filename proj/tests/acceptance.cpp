// Acceptance suite: 12 end-to-end checks with pinned expected values and
// per-check wall-clock budgets. Prints one line per criterion and exits
// nonzero if any fails.

#include "alloclab/bounds.hpp"
#include "alloclab/evaluator.hpp"
#include "alloclab/fixtures.hpp"
#include "alloclab/montecarlo.hpp"
#include "alloclab/optimizer.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace alloclab;

namespace {

Fraction frac(std::int64_t a, std::int64_t b) { return Fraction(BigInt(a), BigInt(b)); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& msg) {
  o.pass = false;
  if (o.detail.size() > 400) return;  // keep the report line readable
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += msg;
}

std::string fmt(double v, int places = 4) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

// ---- 1. counterexample values and decimal renderings ----------------------

Outcome criterion1() {
  Outcome o;
  const Allocation alloc(
      {frac(2, 3), frac(2, 3), frac(1, 3), frac(1, 3), frac(1, 3)});
  const auto best = eval_independent(alloc, frac(2, 3));
  if (best.exact != frac(220, 243)) fail(o, "nonsymmetric value != 220/243");
  if (best.exact.decimal(5) != "0.90535") fail(o, "decimal rendering != 0.90535");
  for (std::int64_t m : {2, 4}) {
    const auto sym = eval_symmetric_independent(frac(2, 3), frac(7, 3), m);
    if (sym.exact != frac(8, 9)) fail(o, "symmetric value != 8/9 at m=" + std::to_string(m));
  }
  if (frac(8, 9).decimal(5) != "0.88889") fail(o, "decimal rendering != 0.88889");
  if (o.pass) o.detail = "220/243 -> 0.90535; best symmetric 8/9 -> 0.88889";
  return o;
}

// ---- 2. small-instance optimal-allocation table ----------------------------

Outcome criterion2() {
  Outcome o;
  struct Row {
    std::int64_t n;
    Fraction T;  // midpoint of the budget interval
    Fraction p;
    std::vector<Fraction> best;  // expected optimal allocation
  };
  const Fraction lo = frac(9, 20), hi = frac(11, 20);          // 1/2 +- 0.05
  const Fraction lo23 = frac(37, 60), hi23 = frac(43, 60);     // 2/3 +- 0.05
  const Fraction loS = frac(7176, 10000), hiS = frac(8176, 10000);  // (1+sqrt13)/6 +- ~0.05
  const Fraction h = frac(1, 2), t = frac(1, 3);
  std::vector<Row> rows;
  auto add = [&rows](std::int64_t n, Fraction T, Fraction p, std::vector<Fraction> best) {
    rows.push_back(Row{n, std::move(T), std::move(p), std::move(best)});
  };
  // One budget interval per row; unconditional rows use the same winner on
  // both sides of 1/2.
  add(2, frac(3, 2), lo, {1, 0});
  add(2, frac(3, 2), hi, {1, 0});
  add(3, frac(5, 4), lo, {1, 0, 0});
  add(3, frac(5, 4), hi, {1, 0, 0});
  add(3, frac(7, 4), lo, {1, 0, 0});
  add(3, frac(7, 4), hi, {h, h, h});
  add(3, frac(5, 2), lo, {1, 1, 0});
  add(3, frac(5, 2), hi, {1, 1, 0});
  add(4, frac(7, 6), lo, {1, 0, 0, 0});
  add(4, frac(7, 6), hi, {1, 0, 0, 0});
  add(4, frac(17, 12), loS, {1, 0, 0, 0});
  add(4, frac(17, 12), hiS, {t, t, t, t});
  add(4, frac(7, 4), lo, {1, 0, 0, 0});
  add(4, frac(7, 4), hi, {h, h, h, 0});
  add(4, frac(9, 4), lo23, {1, 1, 0, 0});
  add(4, frac(9, 4), hi23, {h, h, h, h});
  add(4, frac(11, 4), lo, {1, 1, 0, 0});
  add(4, frac(11, 4), hi, {1, h, h, h});
  add(4, frac(7, 2), lo, {1, 1, 1, 0});
  add(4, frac(7, 2), hi, {1, 1, 1, 0});

  int matched = 0;
  for (const auto& row : rows) {
    const Allocation best(row.best);
    if (best.total() > row.T) {
      fail(o, "table row with n=" + std::to_string(row.n) + " is infeasible");
      continue;
    }
    const Fraction want = eval_independent(best, row.p).exact;
    const auto res = grid_search(row.n, IndependentAccess{row.p}, row.T, 12);
    if (res.best_value.exact == want) {
      ++matched;
    } else {
      fail(o, "grid optimum mismatch at n=" + std::to_string(row.n) + " T=" + row.T.str() +
                  " p=" + row.p.str());
    }
  }

  // Threshold crossovers, located by bisection on the exact value difference.
  struct Crossover {
    std::vector<Fraction> left, right;  // winners below / above the threshold
    Fraction lo, hi;
    double expect;
  };
  const std::vector<Crossover> crossings = {
      {{1, 0, 0}, {h, h, h}, frac(2, 5), frac(3, 5), 0.5},
      {{1, 1, 0, 0}, {h, h, h, h}, frac(3, 5), frac(3, 4), 2.0 / 3.0},
      {{1, 0, 0, 0}, {t, t, t, t}, frac(7, 10), frac(9, 10), (1.0 + std::sqrt(13.0)) / 6.0},
  };
  std::string marks;
  for (const auto& c : crossings) {
    const Allocation L(c.left), R(c.right);
    const auto left_wins = [&](const Fraction& p) {
      return eval_independent(L, p).exact >= eval_independent(R, p).exact;
    };
    if (!left_wins(c.lo) || left_wins(c.hi)) {
      fail(o, "crossover bracket invalid near " + fmt(c.expect));
      continue;
    }
    const Fraction mid = oracle::bisect(left_wins, c.lo, c.hi, frac(1, 256));
    if (std::abs(mid.to_double() - c.expect) > 0.01) {
      fail(o, "threshold estimate " + fmt(mid.to_double()) + " != " + fmt(c.expect));
    } else {
      if (!marks.empty()) marks += ", ";
      marks += fmt(mid.to_double());
    }
  }
  if (o.pass) {
    o.detail = std::to_string(matched) + " grid optima matched; thresholds " + marks;
  }
  return o;
}

// ---- 3. symmetric optima, independent model --------------------------------

Outcome criterion3() {
  Outcome o;
  const auto a = optimal_symmetric_independent(10, frac(9, 25), frac(5, 2));
  if (a.best_param != 5) fail(o, "(10, 9/25, 5/2) -> " + std::to_string(a.best_param));
  const auto b = optimal_symmetric_independent(10, frac(3, 5), frac(12, 5));
  if (b.best_param != 7) fail(o, "(10, 3/5, 12/5) -> " + std::to_string(b.best_param));
  if (o.pass) o.detail = "m* = 5 and 7";
  return o;
}

// ---- 4. symmetric optima, fixed-subset model --------------------------------

Outcome criterion4() {
  Outcome o;
  if (optimal_symmetric_fixed_subset(14, 5, frac(8, 3)).best_param != 8) {
    fail(o, "(14, 5, 8/3) != 8");
  }
  if (optimal_symmetric_fixed_subset(16, 4, frac(7, 2)).best_param != 7) {
    fail(o, "(16, 4, 7/2) != 7");
  }
  const Fraction budgets[] = {frac(17, 4), frac(9, 2), Fraction::parse("4.67"), frac(19, 4),
                              Fraction(5)};
  const std::int64_t want[] = {4, 18, 14, 19, 20};
  for (int i = 0; i < 5; ++i) {
    const auto res = optimal_symmetric_fixed_subset(20, 4, budgets[i]);
    if (res.best_param != want[i]) {
      fail(o, "(20, 4, " + budgets[i].str() + ") -> " + std::to_string(res.best_param) +
                  " != " + std::to_string(want[i]));
    }
  }
  if (o.pass) o.detail = "m* = 8, 7 and (4, 18, 14, 19, 20)";
  return o;
}

// ---- 5. fixed-subset success thresholds -------------------------------------

Outcome criterion5() {
  Outcome o;
  const auto a = fixed_subset_threshold(6, 2);
  if (a.threshold != frac(2, 3) || !a.tight) fail(o, "(6, 2) != tight 2/3");
  const auto b = fixed_subset_threshold(5, 3);
  if (b.threshold != frac(4, 5)) fail(o, "(5, 3) != 4/5");
  if (b.tight) fail(o, "(5, 3) reported tight");
  int checked = 0;
  for (std::int64_t n = 2; n <= 24; ++n) {
    for (std::int64_t r = 1; r < n; ++r) {
      if (n % (n - r) != 0) continue;
      const auto th = fixed_subset_threshold(n, r);
      if (th.threshold != frac(r, n) || !th.tight) {
        fail(o, "(n-r)|n case (" + std::to_string(n) + ", " + std::to_string(r) +
                    ") not tight r/n");
      }
      ++checked;
    }
  }
  if (o.pass) {
    o.detail = "2/3 tight, 4/5, and " + std::to_string(checked) + " (n-r)|n cases = r/n tight";
  }
  return o;
}

// ---- 6. bound sandwich and gap identity -------------------------------------

Outcome criterion6() {
  Outcome o;
  int points = 0;
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t pi = 1; pi <= 9; ++pi) {
      const Fraction p = frac(pi, 10);
      for (Fraction T(1); T <= Fraction(n); T += frac(1, 4)) {
        const Fraction lemma1 = recovery_upper_bound(n, p, T);
        const Fraction refined = improved_upper_bound(n, p, T);
        const Fraction gap = max_spread_gap_bound(n, p, T);
        const Fraction spread_n = eval_symmetric_independent(p, T, n).exact;
        const Fraction opt = grid_search(n, IndependentAccess{p}, T, 8).best_value.exact;
        const std::string at =
            " at (" + std::to_string(n) + ", " + p.str() + ", " + T.str() + ")";
        if (opt > refined) fail(o, "grid optimum above refined bound" + at);
        if (opt > lemma1) fail(o, "grid optimum above coarse bound" + at);
        if (lemma1 - spread_n != gap) fail(o, "gap identity broken" + at);
        ++points;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " (n, p, T) points sandwiched";
  return o;
}

// ---- 7. randomized placement: 3/4 equality and bound ------------------------

Outcome criterion7() {
  Outcome o;
  for (std::int64_t n : {4, 6, 8}) {
    const auto res = eval_prob_symmetric(n, 2, Fraction(n) / 2, Fraction(1));
    if (res.exact != frac(3, 4)) fail(o, "equality fails at n=" + std::to_string(n));
  }
  int pairs = 0;
  for (std::int64_t r = 2; r <= 12; ++r) {
    const std::int64_t n = 10 * r;  // any multiple of r gives budget n/r = 10
    for (std::int64_t ell = 1; ell < r; ++ell) {
      const auto res = eval_prob_symmetric(n, r, Fraction(10), Fraction(ell));
      if (res.exact > frac(3, 4)) {
        fail(o, "bound exceeded at r=" + std::to_string(r) + " ell=" + std::to_string(ell));
      }
      ++pairs;
    }
  }
  if (o.pass) {
    o.detail = "3/4 at n=4,6,8; " + std::to_string(pairs) + " partial-spread values <= 3/4";
  }
  return o;
}

// ---- 8. randomized placement: full spreading past the budget threshold ------

Outcome criterion8() {
  Outcome o;
  const Fraction step = frac(1, 20);
  for (std::int64_t r = 2; r <= 12; ++r) {
    const std::int64_t n = 10 * r;
    const auto th = prob_symmetric_thresholds(n, r);
    // First grid point at or above the certified threshold.
    const Fraction start = Fraction((th.budget_certificate * 20).ceil()) / 20;
    const std::string tag = " at r=" + std::to_string(r);
    for (Fraction T = start; T <= Fraction(n); T += step) {
      const auto res = optimal_ell(n, r, T);
      if (T <= frac(n, r)) {
        if (res.best_param != r) {
          fail(o, "full spread not optimal" + tag + " T=" + T.str());
          break;
        }
      } else {
        // Past n/r full spread succeeds with certainty; it must still attain
        // the maximum even when a smaller ell ties.
        if (res.scanned[static_cast<std::size_t>(r - 1)].value.exact !=
            res.best_value.exact) {
          fail(o, "full spread below maximum" + tag + " T=" + T.str());
          break;
        }
      }
    }
    // Just below the certain-recovery budget n/r.
    const auto below = optimal_ell(n, r, frac(n, r) - step);
    if (below.best_param != r && below.best_value.exact >= frac(3, 4)) {
      fail(o, "sub-threshold point reaches 3/4 without full spread" + tag);
    }
  }
  if (o.pass) o.detail = "subset sizes 2..12 certified on the 1/20 grid";
  return o;
}

// ---- 9. phase boundaries along p = 1/T --------------------------------------

Outcome criterion9() {
  Outcome o;
  // The competitor that persists longest near T ~ 2.89 is m = 26 (threshold 9),
  // so n must be at least 26 for the scan to see it; n = 40 adds safety margin
  // without moving either boundary (verified against caps up to 150).
  const std::int64_t n = 40;
  const auto best_m = [n](const Fraction& T) {
    return optimal_symmetric_independent(n, Fraction(1) / T, T).best_param;
  };
  const auto min_spread_opt = [&](const Fraction& T) {
    return best_m(T) == T.floor().convert_to<std::int64_t>();
  };
  const auto double_spread_opt = [&](const Fraction& T) {
    return best_m(T) == (T * 2).floor().convert_to<std::int64_t>();
  };

  std::vector<Fraction> grid;
  for (Fraction T = frac(101, 100); T <= Fraction(4); T += frac(1, 100)) grid.push_back(T);
  std::vector<bool> a(grid.size()), b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    a[i] = min_spread_opt(grid[i]);
    b[i] = double_spread_opt(grid[i]);
  }

  // Maximal runs where minimal spreading is NOT optimal.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < grid.size();) {
    if (!a[i]) {
      std::size_t j = i;
      while (j + 1 < grid.size() && !a[j + 1]) ++j;
      runs.emplace_back(i, j);
      i = j + 1;
    } else {
      ++i;
    }
  }
  if (runs.size() < 2) {
    fail(o, "found only " + std::to_string(runs.size()) + " suboptimal runs");
    return o;
  }
  const std::size_t end2 = runs[1].second;
  if (end2 + 1 >= grid.size() || !a[end2 + 1]) {
    fail(o, "second suboptimal run has no right edge in the scan window");
    return o;
  }
  const Fraction edge1 = oracle::bisect([&](const Fraction& T) { return !min_spread_opt(T); },
                                        grid[end2], grid[end2 + 1], frac(1, 10000));
  if (std::abs(edge1.to_double() - 2.8911) > 1e-3) {
    fail(o, "second-run edge at " + fmt(edge1.to_double()) + ", expected 2.8911");
  }

  // Right edge of the floor(2T)-optimal run containing T = 7/2.
  const std::size_t i35 = 249;  // grid[249] == 7/2
  if (grid[i35] != frac(7, 2) || !b[i35]) {
    fail(o, "floor(2T) spreading not optimal at T=7/2");
    return o;
  }
  std::size_t j = i35;
  while (j + 1 < grid.size() && b[j + 1]) ++j;
  if (j + 1 >= grid.size()) {
    fail(o, "floor(2T)-optimal run has no right edge in the scan window");
    return o;
  }
  const Fraction edge2 = oracle::bisect(double_spread_opt, grid[j], grid[j + 1],
                                        frac(1, 10000));
  if (std::abs(edge2.to_double() - 3.5694) > 1e-3) {
    fail(o, "floor(2T) run edge at " + fmt(edge2.to_double()) + ", expected 3.5694");
  }
  if (o.pass) {
    o.detail = "edges at T = " + fmt(edge1.to_double()) + " and " + fmt(edge2.to_double());
  }
  return o;
}

// ---- 10. closed forms match general evaluators -------------------------------

Outcome criterion10() {
  Outcome o;
  long comparisons = 0;
  const Fraction ps[] = {frac(1, 4), frac(1, 2), frac(3, 4)};
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (Fraction T(1); T <= Fraction(n); T += frac(1, 3)) {
      for (std::int64_t m = 1; m <= n; ++m) {
        const Allocation expanded = make_symmetric(n, T, m);
        for (const Fraction& p : ps) {
          if (eval_symmetric_independent(p, T, m).exact !=
              eval_independent(expanded, p).exact) {
            fail(o, "independent mismatch at n=" + std::to_string(n) + " m=" +
                        std::to_string(m) + " T=" + T.str() + " p=" + p.str());
          }
          ++comparisons;
        }
        for (std::int64_t r = 1; r <= n; ++r) {
          if (eval_symmetric_fixed_subset(n, T, m, r).exact !=
              eval_fixed_subset(expanded, r).exact) {
            fail(o, "subset mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " T=" + T.str() + " r=" + std::to_string(r));
          }
          ++comparisons;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(comparisons) + " exact equalities";
  return o;
}

// ---- 11. Monte Carlo calibration ---------------------------------------------

Outcome criterion11() {
  Outcome o;
  struct Instance {
    Allocation alloc;
    AccessModel model;
    Fraction exact;
  };
  std::vector<Instance> instances;
  instances.reserve(200);
  // mt19937 raw draws are portable; distributions are not, so use modulo.
  std::mt19937 gen(20250825u);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(gen() % 7u);
    std::vector<Fraction> xs;
    bool nonzero = false;
    for (std::int64_t jn = 0; jn < n; ++jn) {
      const std::int64_t num = static_cast<std::int64_t>(gen() % 13u);
      nonzero = nonzero || num > 0;
      xs.push_back(frac(num, 12));
    }
    if (!nonzero) xs[0] = Fraction(1);
    Allocation alloc(xs);
    if (i % 2 == 0) {
      const std::int64_t k = 1 + static_cast<std::int64_t>(gen() % 9u);
      const Fraction exact = eval_independent(alloc, frac(k, 10)).exact;
      instances.push_back({std::move(alloc), IndependentAccess{frac(k, 10)}, exact});
    } else {
      const std::int64_t r = 1 + static_cast<std::int64_t>(gen() % static_cast<std::uint32_t>(n));
      const Fraction exact = eval_fixed_subset(alloc, r).exact;
      instances.push_back({std::move(alloc), FixedSubsetAccess{r}, exact});
    }
  }

  int within = 0;
  double first_estimate = 0.0;
  for (int i = 0; i < 200; ++i) {
    const McConfig cfg{1'000'000, static_cast<std::uint64_t>(i), 4, 1};
    const auto est = mc_estimate(instances[static_cast<std::size_t>(i)].alloc,
                                 instances[static_cast<std::size_t>(i)].model, cfg);
    if (i == 0) first_estimate = est.value;
    const double exact = instances[static_cast<std::size_t>(i)].exact.to_double();
    if (std::abs(est.value - exact) <= est.error_radius) ++within;
  }
  if (within < 198) {
    fail(o, "only " + std::to_string(within) + "/200 estimates within the error radius");
  }
  const auto replay =
      mc_estimate(instances[0].alloc, instances[0].model, McConfig{1'000'000, 0, 4, 1});
  if (replay.value != first_estimate) fail(o, "estimate not reproducible under a fixed seed");
  if (o.pass) {
    o.detail = std::to_string(within) + "/200 within the 3-sigma radius, reproducible";
  }
  return o;
}

// ---- 12. grid search never beats the best symmetric subset allocation --------

Outcome criterion12() {
  Outcome o;
  int searches = 0, violations = 0;
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t r = 1; r <= n; ++r) {
      for (Fraction T(1); T <= Fraction(n); T += frac(1, 6)) {
        Fraction best_sym(0);
        for (std::int64_t m = 1; m <= n; ++m) {
          const Fraction v = eval_symmetric_fixed_subset(n, T, m, r).exact;
          if (v > best_sym) best_sym = v;
        }
        const auto res = grid_search(n, FixedSubsetAccess{r}, T, 6);
        ++searches;
        if (res.best_value.exact > best_sym) {
          ++violations;
          if (violations <= 3) {
            fail(o, "grid beats symmetric at (" + std::to_string(n) + ", " +
                        std::to_string(r) + ", " + T.str() + ")");
          }
        }
      }
    }
  }
  if (violations > 3) fail(o, std::to_string(violations) + " violations total");
  if (o.pass) {
    o.detail = std::to_string(searches) + " grids checked, 0 beat the best symmetric";
  }
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    double budget_seconds;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "counterexample values", 1.0, criterion1},
      {2, "small-instance optimum table", 120.0, criterion2},
      {3, "independent symmetric optima", 1.0, criterion3},
      {4, "fixed-subset symmetric optima", 5.0, criterion4},
      {5, "subset success thresholds", 1.0, criterion5},
      {6, "bound sandwich and gap identity", 600.0, criterion6},
      {7, "randomized placement 3/4 law", 1.0, criterion7},
      {8, "randomized placement budget regime", 30.0, criterion8},
      {9, "phase-boundary constants", 60.0, criterion9},
      {10, "closed forms vs general evaluators", 300.0, criterion10},
      {11, "Monte Carlo calibration", 600.0, criterion11},
      {12, "grid search vs symmetric (subset)", 600.0, criterion12},
  };

  int passed = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && elapsed >= e.budget_seconds) {
      o.pass = false;
      o.detail += " [exceeded " + fmt(e.budget_seconds, 0) + " s budget]";
    }
    std::printf("criterion %2d %s %-36s (%.2f s) %s\n", e.id, o.pass ? "PASS" : "FAIL",
                e.name, elapsed, o.detail.c_str());
    std::fflush(stdout);
    if (o.pass) ++passed;
  }
  std::printf("%d/12 criteria passed\n", passed);
  return passed == 12 ? 0 : 1;
}
