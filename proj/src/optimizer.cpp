#include "alloclab/optimizer.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace alloclab {

namespace {

// Strictly-better comparison; exact when both sides are exact.
bool value_greater(const EvalResult& a, const EvalResult& b) {
  if (a.mode == EvalMode::exact && b.mode == EvalMode::exact) return a.exact > b.exact;
  return a.value > b.value;
}

OptimizationResult scan_params(const std::vector<std::int64_t>& params,
                               const std::function<EvalResult(std::int64_t)>& eval) {
  OptimizationResult out;
  out.scanned.reserve(params.size());
  bool first = true;
  for (auto param : params) {
    EvalResult v = eval(param);
    if (first || value_greater(v, out.best_value)) {
      out.best_param = param;
      out.best_value = v;
      first = false;
    }
    out.scanned.push_back({param, std::move(v)});
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> candidate_m_set(std::int64_t n, const Fraction& T) {
  if (n < 1 || n > kMaxSymmetricN) throw DomainError("n must satisfy 1 <= n <= 10^6");
  if (T < Fraction(1) || T > Fraction(n)) throw DomainError("budget must satisfy 1 <= T <= n");
  const std::int64_t k_max = (Fraction(n) / T).floor().convert_to<std::int64_t>();
  std::vector<std::int64_t> ms;
  ms.reserve(static_cast<std::size_t>(k_max) + 1);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    ms.push_back((T * Fraction(k)).floor().convert_to<std::int64_t>());
  }
  ms.push_back(n);
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

OptimizationResult optimal_symmetric_independent(std::int64_t n, const Fraction& p,
                                                 const Fraction& T) {
  const auto ms = candidate_m_set(n, T);
  return scan_params(ms, [&](std::int64_t m) { return eval_symmetric_independent(p, T, m); });
}

OptimizationResult optimal_symmetric_fixed_subset(std::int64_t n, std::int64_t r,
                                                  const Fraction& T) {
  if (n < 1 || n > kMaxSymmetricN) throw DomainError("n must satisfy 1 <= n <= 10^6");
  std::vector<std::int64_t> ms(static_cast<std::size_t>(n));
  for (std::int64_t m = 1; m <= n; ++m) ms[static_cast<std::size_t>(m - 1)] = m;
  return scan_params(ms,
                     [&](std::int64_t m) { return eval_symmetric_fixed_subset(n, T, m, r); });
}

OptimizationResult optimal_ell(std::int64_t n, std::int64_t r, const Fraction& T) {
  if (r < 1 || r > n) throw DomainError("subset size must satisfy 1 <= r <= n");
  std::vector<std::int64_t> ells(static_cast<std::size_t>(r));
  for (std::int64_t ell = 1; ell <= r; ++ell) ells[static_cast<std::size_t>(ell - 1)] = ell;
  return scan_params(ells,
                     [&](std::int64_t ell) { return eval_prob_symmetric(n, r, T, Fraction(ell)); });
}

Allocation GridAllocation::to_allocation() const {
  std::vector<Fraction> x;
  x.reserve(numerators.size());
  for (auto s : numerators) x.push_back(Fraction(s, q));
  return Allocation(std::move(x));
}

GridSearchResult grid_search(std::int64_t n, const AccessModel& model, const Fraction& T,
                             std::int64_t q) {
  if (n < 1 || n > kMaxGridN) throw SizeError("grid search capped at n <= 6");
  if (q < 1 || q > kMaxGridQ) throw SizeError("grid search capped at q <= 12");
  if (T < Fraction(1) || T > Fraction(n)) throw DomainError("budget must satisfy 1 <= T <= n");
  validate_model(model, n);
  if (std::holds_alternative<ProbSymmetricAccess>(model)) {
    throw DomainError("grid search applies to explicit allocations; use optimal_ell instead");
  }

  const bool independent = std::holds_alternative<IndependentAccess>(model);
  const std::int64_t r_subset = independent ? 0 : std::get<FixedSubsetAccess>(model).r;

  // Everything scores against integer numerators at denominator q; a node is
  // complete once its numerator reaches q.
  const std::int64_t budget = (T * Fraction(q)).floor().convert_to<std::int64_t>();

  // Independent scoring: value = sum_k N_k p^k (1-p)^(n'-k) over the n'
  // nonzero nodes; zero nodes marginalize out. To compare across leaves with
  // different n', normalize to the common denominator b^n via a factor b^z.
  BigInt a = 0, b = 1;
  std::vector<std::vector<BigInt>> weight;  // weight[n'][k] = a^k (b-a)^(n'-k)
  std::vector<BigInt> bpow;
  if (independent) {
    const auto& p = std::get<IndependentAccess>(model).p;
    a = p.num();
    b = p.den();
    const BigInt qq = b - a;
    weight.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t nn = 0; nn <= n; ++nn) {
      auto& row = weight[static_cast<std::size_t>(nn)];
      row.resize(static_cast<std::size_t>(nn) + 1);
      BigInt w = ipow(qq, nn);
      for (std::int64_t k = 0; k <= nn; ++k) {
        row[static_cast<std::size_t>(k)] = w;
        if (k < nn) {
          w *= a;
          w /= qq;
        }
      }
    }
    bpow.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t z = 0; z <= n; ++z) bpow[static_cast<std::size_t>(z)] = ipow(b, z);
  }

  GridSearchResult result;
  result.best.q = q;
  BigInt best_score = -1;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);

  auto leaf = [&]() {
    ++result.scanned;
    // Run-length groups over the nonzero entries (cur is nonincreasing).
    std::vector<std::uint64_t> values;
    std::vector<std::int64_t> counts;
    std::int64_t zeros = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t s = cur[static_cast<std::size_t>(i)];
      if (s == 0) {
        zeros = n - i;
        break;
      }
      const std::uint64_t clamped = static_cast<std::uint64_t>(std::min(s, q));
      if (!values.empty() && values.back() == clamped) {
        ++counts.back();
      } else {
        values.push_back(clamped);
        counts.push_back(1);
      }
    }
    const std::int64_t nz = n - zeros;
    const auto counts_by_size =
        detail::success_counts_scaled(values, counts, static_cast<std::uint64_t>(q));

    BigInt score = 0;
    if (independent) {
      const auto& row = weight[static_cast<std::size_t>(nz)];
      for (std::int64_t k = 0; k <= nz; ++k) {
        const auto c = counts_by_size[static_cast<std::size_t>(k)];
        if (c != 0) score += BigInt(c) * row[static_cast<std::size_t>(k)];
      }
      score *= bpow[static_cast<std::size_t>(zeros)];
    } else {
      // N_r over all n nodes: pad the nonzero counts with zero-value picks.
      BigInt total = 0;
      const std::int64_t j_hi = std::min(nz, r_subset);
      for (std::int64_t j = 0; j <= j_hi; ++j) {
        const auto c = counts_by_size[static_cast<std::size_t>(j)];
        if (c != 0) total += BigInt(c) * binom(zeros, r_subset - j);
      }
      score = total;
    }
    if (score > best_score) {
      best_score = score;
      result.best.numerators = cur;
    }
  };

  // Descending lexicographic enumeration of nonincreasing sequences keeps
  // the first maximum found the lexicographically largest one.
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
      [&](std::int64_t idx, std::int64_t prev, std::int64_t rem) {
        if (idx == n) {
          leaf();
          return;
        }
        for (std::int64_t s = std::min(prev, rem); s >= 0; --s) {
          cur[static_cast<std::size_t>(idx)] = s;
          rec(idx + 1, s, rem - s);
        }
      };
  rec(0, q, std::min(budget, n * q));

  if (independent) {
    result.best_value = EvalResult::from_exact(Fraction(best_score, ipow(b, n)));
  } else {
    result.best_value = EvalResult::from_exact(Fraction(best_score, binom(n, r_subset)));
  }
  std::int64_t first_nz = -1;
  result.best_is_symmetric = true;
  for (auto s : result.best.numerators) {
    if (s == 0) continue;
    if (first_nz == -1) {
      first_nz = s;
    } else if (s != first_nz) {
      result.best_is_symmetric = false;
      break;
    }
  }
  return result;
}

RegimeReport classify_regime(std::int64_t n, const Fraction& p, const Fraction& T) {
  if (n < 1) throw DomainError("node count must be positive");
  if (p <= Fraction(0) || p >= Fraction(1)) {
    throw DomainError("access probability must satisfy 0 < p < 1");
  }
  if (T < Fraction(1) || T > Fraction(n)) throw DomainError("budget must satisfy 1 <= T <= n");

  RegimeReport rep;
  rep.n = n;
  rep.p = p;
  rep.T = T;
  rep.p_boundary = Fraction(1) / T;

  if (T > Fraction(1) && T < Fraction(n)) {
    rep.verdicts.push_back(min_spread_global_condition(n, p, T));
  }
  if (T < Fraction(n)) {
    rep.verdicts.push_back(min_spread_small_p_condition(n, p, T));
  }
  for (auto& v : symmetric_spread_conditions(n, p, T)) rep.verdicts.push_back(std::move(v));

  for (const auto& v : rep.verdicts) {
    if (!v.holds) continue;
    switch (v.id) {
      case ConditionId::theorem3:
      case ConditionId::corollary1:
        rep.min_spread_global = true;
        break;
      case ConditionId::theorem4:
      case ConditionId::corollary2:
        rep.max_spread_symmetric = true;
        break;
      case ConditionId::lemma3:
      case ConditionId::lemma4:
      case ConditionId::theorem5:
        rep.min_spread_symmetric = true;
        break;
      default:
        break;
    }
  }
  rep.gap_region =
      !(rep.min_spread_global || rep.min_spread_symmetric || rep.max_spread_symmetric);
  return rep;
}

namespace {

std::vector<Fraction> expand_range(const Range& range) {
  if (range.step.sign() <= 0) throw DomainError("range step must be positive");
  if (range.lo > range.hi) throw DomainError("range start exceeds range end");
  const BigInt count = ((range.hi - range.lo) / range.step).floor() + 1;
  if (count > kMaxSweepRows) throw SizeError("sweep exceeds the 10^6 row cap");
  std::vector<Fraction> out;
  out.reserve(count.convert_to<std::size_t>());
  for (Fraction v = range.lo; v <= range.hi; v += range.step) out.push_back(v);
  return out;
}

// (exact "a/b" or empty, decimal) cell pair for a result value.
std::pair<std::string, std::string> value_cells(const EvalResult& res) {
  if (res.mode == EvalMode::exact) {
    return {res.exact.str(), res.exact.decimal_sig(15)};
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", res.value);
  return {"", buf};
}

std::string verdict_summary(const RegimeReport& rep) {
  if (rep.gap_region) return "gap";
  std::string s;
  auto append = [&s](const char* tag) {
    if (!s.empty()) s += "+";
    s += tag;
  };
  if (rep.min_spread_global) append("min_spread_global");
  if (rep.min_spread_symmetric) append("min_spread_symmetric");
  if (rep.max_spread_symmetric) append("max_spread_symmetric");
  return s;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  if (spec.n < 1) throw DomainError("sweep requires a positive node count");
  if (!spec.T.has_value()) throw DomainError("sweep requires a budget range");
  const auto ts = expand_range(*spec.T);

  const bool needs_p = spec.family == SweepFamily::independent_symmetric ||
                       spec.family == SweepFamily::regime;
  const bool needs_r = spec.family == SweepFamily::subset_symmetric ||
                       spec.family == SweepFamily::prob_symmetric;
  if (needs_p && !spec.p.has_value()) throw DomainError("sweep family requires a p range");
  if (needs_r && !spec.r.has_value()) throw DomainError("sweep family requires subset size r");

  std::vector<Fraction> ps;
  if (needs_p) {
    ps = expand_range(*spec.p);
    const BigInt rows = BigInt(ts.size()) * BigInt(ps.size());
    if (rows > kMaxSweepRows) throw SizeError("sweep exceeds the 10^6 row cap");
  }

  std::vector<SweepRow> rows;
  const std::string n_str = std::to_string(spec.n);
  for (const auto& T : ts) {
    switch (spec.family) {
      case SweepFamily::independent_symmetric: {
        for (const auto& p : ps) {
          auto res = optimal_symmetric_independent(spec.n, p, T);
          auto [frac, dec] = value_cells(res.best_value);
          SweepRow row;
          row.cells = {{"n", n_str},
                       {"T", T.str()},
                       {"p", p.str()},
                       {"m_star", std::to_string(res.best_param)},
                       {"value", std::move(frac)},
                       {"value_dec", std::move(dec)}};
          rows.push_back(std::move(row));
        }
        break;
      }
      case SweepFamily::subset_symmetric: {
        auto res = optimal_symmetric_fixed_subset(spec.n, *spec.r, T);
        auto [frac, dec] = value_cells(res.best_value);
        SweepRow row;
        row.cells = {{"n", n_str},
                     {"r", std::to_string(*spec.r)},
                     {"T", T.str()},
                     {"m_star", std::to_string(res.best_param)},
                     {"value", std::move(frac)},
                     {"value_dec", std::move(dec)}};
        rows.push_back(std::move(row));
        break;
      }
      case SweepFamily::prob_symmetric: {
        auto res = optimal_ell(spec.n, *spec.r, T);
        auto [frac, dec] = value_cells(res.best_value);
        SweepRow row;
        row.cells = {{"n", n_str},
                     {"r", std::to_string(*spec.r)},
                     {"T", T.str()},
                     {"ell_star", std::to_string(res.best_param)},
                     {"value", std::move(frac)},
                     {"value_dec", std::move(dec)}};
        rows.push_back(std::move(row));
        break;
      }
      case SweepFamily::regime: {
        for (const auto& p : ps) {
          const auto rep = classify_regime(spec.n, p, T);
          SweepRow row;
          row.cells = {{"n", n_str}, {"T", T.str()}, {"p", p.str()}};
          const ConditionId order[] = {ConditionId::theorem3, ConditionId::corollary1,
                                       ConditionId::theorem4, ConditionId::corollary2,
                                       ConditionId::lemma3,   ConditionId::lemma4,
                                       ConditionId::theorem5};
          for (auto id : order) {
            std::string cell = "na";
            for (const auto& v : rep.verdicts) {
              if (v.id == id) {
                cell = v.holds ? "true" : "false";
                break;
              }
            }
            row.cells.emplace_back(to_string(id), std::move(cell));
          }
          row.cells.emplace_back("verdict", verdict_summary(rep));
          row.cells.emplace_back("p_boundary", rep.p_boundary.str());
          rows.push_back(std::move(row));
        }
        break;
      }
    }
  }
  return rows;
}

}  // namespace alloclab
