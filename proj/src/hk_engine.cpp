#include "hk/hk_engine.hpp"

#include <future>

#include "hk/hilbert.hpp"

namespace hk {

namespace {

std::size_t resolve_dimension(const QuotientRing& R, std::optional<std::size_t> d) {
  if (d) return *d;
  if (!R.weighted_homogeneous())
    throw Error("dimension unknown: supply d for a non-homogeneous presentation");
  return krull_dimension(R);
}

std::vector<unsigned> exponent_grid(unsigned e_max) {
  if (e_max == 0) throw Error("e_max must be at least 1");
  std::vector<unsigned> grid;
  if (e_max == 1) grid.push_back(0);
  for (unsigned e = 1; e <= e_max; ++e) grid.push_back(e);
  return grid;
}

std::uint64_t power_of(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t{1} << 20) / p) throw Error("Frobenius exponent too large");
    q *= p;
  }
  return q;
}

// Evaluates `length(q)` on the grid concurrently and keeps the prefix that
// finished within budget.
template <class LengthFn>
HKEstimate sample_grid(std::uint32_t p, unsigned e_max, std::size_t d, LengthFn length) {
  HKEstimate est;
  est.d = d;
  std::vector<unsigned> grid = exponent_grid(e_max);
  std::vector<std::future<std::uint64_t>> jobs;
  std::vector<std::uint64_t> qs;
  for (unsigned e : grid) {
    qs.push_back(power_of(p, e));
    jobs.push_back(std::async(std::launch::async, length, qs.back()));
  }
  std::optional<GbBudgetExceeded> budget_error;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    std::uint64_t len = 0;
    try {
      len = jobs[i].get();
    } catch (const GbBudgetExceeded& ex) {
      if (!budget_error) budget_error = ex;
      continue;
    }
    if (budget_error) continue;
    HKSample s;
    s.e = grid[i];
    s.q = qs[i];
    s.colength = len;
    s.normalized = Rational(BigInt(len), ipow(s.q, d));
    est.samples.push_back(s);
  }
  if (budget_error) {
    if (est.samples.empty()) throw *budget_error;
    est.truncated = true;
    est.note = "truncated at q = " + std::to_string(qs[est.samples.size()]) + ": " + budget_error->what();
  }
  est.estimate = est.samples.back().normalized;
  if (est.samples.size() >= 2)
    est.error_heuristic = abs(est.estimate - est.samples[est.samples.size() - 2].normalized);
  return est;
}

}  // namespace

Rational HKEstimate::tolerance() const {
  const Rational floor(1, 1000);
  return error_heuristic > floor ? error_heuristic : floor;
}

std::uint64_t hk_function(const QuotientRing& R, const Ideal& J, std::uint64_t q) {
  return colength(R, frobenius_power(J, q));
}

unsigned default_emax(std::uint32_t p) {
  if (p <= 5) return 3;
  if (p <= 13) return 2;
  return 1;
}

HKEstimate hk_estimate(const QuotientRing& R, const Ideal& J, unsigned e_max, std::optional<std::size_t> d) {
  const std::size_t dim = resolve_dimension(R, d);
  return sample_grid(R.ring()->field().characteristic(), e_max, dim,
                     [&](std::uint64_t q) { return hk_function(R, J, q); });
}

HKEstimate relative_hk(const QuotientRing& R, const Ideal& I, const Ideal& J, unsigned e_max,
                       std::optional<std::size_t> d) {
  for (const auto& g : I.generators())
    if (!R.contains(J, g)) throw Error("relative HK requires nested ideals");
  const std::size_t dim = resolve_dimension(R, d);
  return sample_grid(R.ring()->field().characteristic(), e_max, dim, [&](std::uint64_t q) {
    std::uint64_t small = hk_function(R, I, q);
    std::uint64_t large = hk_function(R, J, q);
    return small - large;
  });
}

BoundReport associativity_check(const QuotientRing& R, const std::vector<Component>& components, unsigned e_max,
                                bool unmixed, std::optional<std::size_t> d) {
  const std::string statement = "e_HK(R) = sum over top-dimensional minimal primes P of length(R_P) * e_HK(R/P)";
  for (const auto& c : components)
    for (const auto& g : R.defining_ideal().generators())
      if (!membership(g, c.prime, R.budget()))
        throw Error("component " + c.prime.to_string() + " does not contain the defining ideal");
  BoundReport r = make_report(BoundId::kAssociativity, statement);
  r.hypotheses.push_back("components and their lengths are supplied by the user");
  if (!unmixed) {
    r.note = "input not unmixed";
    return r;
  }
  if (components.empty()) {
    r.note = "no components declared";
    return r;
  }
  const std::size_t dim = resolve_dimension(R, d);
  HKEstimate whole = hk_estimate(R, R.maximal_ideal(), e_max, dim);
  Rational sum = 0;
  Rational tol = whole.error_heuristic;
  for (const auto& c : components) {
    QuotientRing component(c.prime, R.budget());
    HKEstimate part = hk_estimate(component, component.maximal_ideal(), e_max, dim);
    sum += Rational(c.length) * part.estimate;
    tol += Rational(c.length) * part.error_heuristic;
    r.details.emplace_back("e_HK(R/" + c.prime.to_string() + ")", to_string(part.estimate));
  }
  if (tol < Rational(1, 1000)) tol = Rational(1, 1000);
  r.lhs = whole.estimate;
  r.rhs = sum;
  r.tolerance = tol;
  r.inequality_satisfied = abs(whole.estimate - sum) <= tol;
  r.status = r.inequality_satisfied ? Status::kHolds : Status::kViolated;
  return r;
}

}  // namespace hk
