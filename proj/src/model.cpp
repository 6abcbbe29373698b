#include "alloclab/model.hpp"

#include <algorithm>
#include <utility>

namespace alloclab {

Allocation::Allocation(std::vector<Fraction> amounts) : x_(std::move(amounts)) {
  if (x_.empty()) throw DomainError("allocation needs at least one node");
  for (const auto& v : x_) {
    if (v.sign() < 0) throw DomainError("allocation amounts must be nonnegative");
  }
}

Fraction Allocation::total() const {
  Fraction t;
  for (const auto& v : x_) t += v;
  return t;
}

Allocation Allocation::clamp_to_one() const {
  std::vector<Fraction> out;
  out.reserve(x_.size());
  const Fraction one(1);
  for (const auto& v : x_) out.push_back(v > one ? one : v);
  return Allocation(std::move(out));
}

bool Allocation::is_symmetric() const {
  const Fraction* nz = nullptr;
  for (const auto& v : x_) {
    if (v.is_zero()) continue;
    if (nz == nullptr) {
      nz = &v;
    } else if (*nz != v) {
      return false;
    }
  }
  return true;
}

Allocation SymmetricAllocation::expand() const {
  if (m < 1 || m > n) throw DomainError("symmetric allocation requires 1 <= m <= n");
  std::vector<Fraction> x(static_cast<std::size_t>(n), Fraction(0));
  Fraction share = budget / Fraction(m);
  for (std::int64_t i = 0; i < m; ++i) x[static_cast<std::size_t>(i)] = share;
  return Allocation(std::move(x));
}

std::int64_t SymmetricAllocation::min_successes() const {
  if (budget.sign() <= 0) throw DomainError("symmetric allocation requires positive budget");
  return (Fraction(m) / budget).ceil().convert_to<std::int64_t>();
}

Allocation make_symmetric(std::int64_t n, const Fraction& budget, std::int64_t m) {
  if (n < 1 || n > kMaxSymmetricN) {
    throw DomainError("node count must satisfy 1 <= n <= 10^6");
  }
  if (m < 1 || m > n) throw DomainError("nonempty node count must satisfy 1 <= m <= n");
  if (budget < Fraction(1) || budget > Fraction(n)) {
    throw DomainError("budget must satisfy 1 <= T <= n");
  }
  return SymmetricAllocation{n, budget, m}.expand();
}

void validate_model(const AccessModel& model, std::int64_t n) {
  if (n < 1) throw DomainError("node count must be positive");
  std::visit(
      [n](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, IndependentAccess>) {
          if (m.p <= Fraction(0) || m.p >= Fraction(1)) {
            throw DomainError("access probability must satisfy 0 < p < 1");
          }
        } else if constexpr (std::is_same_v<M, FixedSubsetAccess>) {
          if (m.r < 1 || m.r > n) throw DomainError("subset size must satisfy 1 <= r <= n");
        } else {
          if (m.r < 1 || m.r > n) throw DomainError("subset size must satisfy 1 <= r <= n");
          if (m.ell.sign() <= 0) throw DomainError("spread parameter ell must be positive");
        }
      },
      model);
}

const char* to_string(EvalMode mode) {
  switch (mode) {
    case EvalMode::exact: return "exact";
    case EvalMode::float64: return "float64";
    case EvalMode::montecarlo: return "montecarlo";
  }
  return "unknown";
}

EvalResult EvalResult::from_exact(Fraction f) {
  EvalResult r;
  r.mode = EvalMode::exact;
  r.value = f.to_double();
  r.exact = std::move(f);
  r.error_radius = 0.0;
  return r;
}

EvalResult EvalResult::from_float64(double v, double err) {
  EvalResult r;
  r.mode = EvalMode::float64;
  r.value = v;
  r.error_radius = err;
  return r;
}

EvalResult EvalResult::from_montecarlo(double v, double err) {
  EvalResult r;
  r.mode = EvalMode::montecarlo;
  r.value = v;
  r.error_radius = err;
  return r;
}

}  // namespace alloclab
