#include "hk/hilbert.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace hk {

namespace {

using Numerator = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Hilbert series coefficient overflow");
  return r;
}

void add_shifted(Numerator& acc, const Numerator& x, std::size_t shift) {
  if (acc.size() < x.size() + shift) acc.resize(x.size() + shift, 0);
  for (std::size_t k = 0; k < x.size(); ++k) acc[k + shift] = checked_add(acc[k + shift], x[k]);
}

void trim(Numerator& n) {
  while (!n.empty() && n.back() == 0) n.pop_back();
}

std::int64_t eval_at_one(const Numerator& n) {
  std::int64_t s = 0;
  for (auto c : n) s = checked_add(s, c);
  return s;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

class PivotRecursion {
 public:
  explicit PivotRecursion(std::size_t nvars) : nvars_(nvars) {}

  Numerator run(std::vector<Monomial> gens) {
    if (gens.empty()) return {1};
    for (const auto& g : gens)
      if (g.is_one()) return {};

    std::vector<std::size_t> occurrences(nvars_, 0);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (g[i]) ++occurrences[i];
    std::size_t var = static_cast<std::size_t>(
        std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());

    if (occurrences[var] <= 1) {
      // Pairwise coprime generators: a complete intersection.
      Numerator n{1};
      for (const auto& g : gens) {
        Numerator next = n;
        Numerator shifted(g.degree() + n.size(), 0);
        for (std::size_t k = 0; k < n.size(); ++k) shifted[k + g.degree()] = -n[k];
        add_shifted(next, shifted, 0);
        n = std::move(next);
      }
      trim(n);
      return n;
    }

    std::sort(gens.begin(), gens.end(), lex_less);
    std::string key;
    key.reserve(gens.size() * nvars_ * 4);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < nvars_; ++i) key.append(reinterpret_cast<const char*>(&g.exponents()[i]), 4);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Median exponent of `var` among mixed generators; a pure power of `var`
    // is then never a divisor of the pivot.
    std::vector<Monomial::Exponent> exps;
    for (const auto& g : gens)
      if (g[var] && g[var] != g.degree()) exps.push_back(g[var]);
    std::sort(exps.begin(), exps.end());
    Monomial pivot(nvars_);
    pivot.set(var, exps[exps.size() / 2]);

    std::vector<Monomial> plus{pivot};
    for (const auto& g : gens)
      if (!pivot.divides(g)) plus.push_back(g);

    std::vector<Monomial> quot;
    quot.reserve(gens.size());
    for (const auto& g : gens) quot.push_back(g / gcd(g, pivot));

    Numerator n = run(std::move(plus));
    add_shifted(n, run(minimalize(quot)), pivot.degree());
    trim(n);
    if (memo_.size() > 200000) memo_.clear();
    memo_.emplace(std::move(key), n);
    return n;
  }

 private:
  std::size_t nvars_;
  std::unordered_map<std::string, Numerator> memo_;
};

}  // namespace

std::int64_t HilbertSeries::multiplicity() const { return eval_at_one(reduced_numerator); }

std::vector<std::int64_t> HilbertSeries::coefficients(std::size_t max_degree) const {
  std::vector<std::int64_t> c(max_degree + 1, 0);
  for (std::size_t k = 0; k < reduced_numerator.size() && k <= max_degree; ++k) c[k] = reduced_numerator[k];
  for (std::size_t r = 0; r < dimension; ++r)
    for (std::size_t k = 1; k <= max_degree; ++k) c[k] = checked_add(c[k], c[k - 1]);
  return c;
}

std::vector<Monomial> minimalize(std::span<const Monomial> gens) {
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : sorted) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

HilbertSeries hilbert_series_monomial(std::span<const Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw Error("monomial does not match ambient variable count");
  HilbertSeries hs;
  hs.ambient_vars = nvars;
  PivotRecursion rec(nvars);
  hs.numerator = rec.run(minimalize(gens));
  trim(hs.numerator);
  Numerator reduced = hs.numerator;
  std::size_t cancelled = 0;
  while (!reduced.empty() && cancelled < nvars && eval_at_one(reduced) == 0) {
    // N(t) = (1-t) Q(t): Q's coefficients are the prefix sums of N.
    Numerator q(reduced.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < reduced.size(); ++k) {
      run = checked_add(run, reduced[k]);
      q[k] = run;
    }
    reduced = std::move(q);
    trim(reduced);
    ++cancelled;
  }
  hs.reduced_numerator = reduced;
  hs.dimension = reduced.empty() ? 0 : nvars - cancelled;
  return hs;
}

std::uint64_t colength(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  if (gb.is_unit()) return 0;
  const auto& leads = gb.leading_monomials();
  for (std::size_t i = 0; i < n; ++i) {
    bool pure = std::any_of(leads.begin(), leads.end(),
                            [&](const Monomial& m) { return m[i] > 0 && m[i] == m.degree(); });
    if (!pure) throw InfiniteColength();
  }
  HilbertSeries hs = hilbert_series_monomial(leads, n);
  if (hs.dimension != 0) throw InfiniteColength();
  return static_cast<std::uint64_t>(hs.multiplicity());
}

std::uint64_t colength(const Ideal& I, const GbBudget& budget) { return colength(I.groebner(budget)); }

std::uint64_t colength(const QuotientRing& R, const Ideal& J) { return colength(R.basis_of(J)); }

std::size_t krull_dimension(const QuotientRing& R) {
  if (!R.weighted_homogeneous())
    throw Error("Krull dimension at the origin requires a weighted homogeneous presentation");
  if (R.defining_basis().is_unit()) return 0;
  return hilbert_series_monomial(R.defining_basis().leading_monomials(), R.nvars()).dimension;
}

DimensionMultiplicity dimension_and_multiplicity(const QuotientRing& R) {
  if (!R.standard_graded())
    throw Error("multiplicity requires homogeneous presentation or explicit parameter ideal");
  if (R.defining_basis().is_unit()) throw Error("the zero ring has no multiplicity");
  HilbertSeries hs = hilbert_series_monomial(R.defining_basis().leading_monomials(), R.nvars());
  return {hs.dimension, hs.multiplicity()};
}

ArtinianProfile artinian_profile(const QuotientRing& R, const Ideal& params) {
  ArtinianProfile prof;
  GroebnerBasis base = R.basis_of(params);
  prof.colength = colength(base);
  std::uint64_t previous = 0;
  for (std::uint64_t i = 1; previous < prof.colength; ++i) {
    std::vector<Polynomial> power;
    for (const auto& m : monomials_of_degree(R.nvars(), i)) power.push_back(Polynomial::monomial(R.ring(), m));
    std::uint64_t current = colength(extend_basis(base, power, R.budget()));
    prof.hilbert_function.push_back(current - previous);
    previous = current;
  }
  prof.top_degree = prof.hilbert_function.empty() ? 0 : prof.hilbert_function.size() - 1;
  Ideal socle_colon = hk::colon(Ideal(base), R.maximal_ideal(), R.budget());
  prof.socle_dim = prof.colength - colength(socle_colon, R.budget());
  return prof;
}

Polynomial socle_element(const QuotientRing& R, const Ideal& params) {
  GroebnerBasis base = R.basis_of(params);
  Ideal socle_colon = hk::colon(Ideal(base), R.maximal_ideal(), R.budget());
  GroebnerBasis reduced = socle_colon.groebner(R.budget());
  for (const auto& g : reduced.elements()) {
    Polynomial nf = base.normal_form(g);
    if (!nf.is_zero()) return nf;
  }
  throw Error("socle is zero: the quotient is the zero ring");
}

bool certify_minimal_reduction(const QuotientRing& R, const Ideal& params, const DimensionMultiplicity& de) {
  if (params.generators().size() != de.dimension) return false;
  return colength(R, params) == static_cast<std::uint64_t>(de.multiplicity);
}

bool certify_minimal_reduction(const QuotientRing& R, const Ideal& params) {
  return certify_minimal_reduction(R, params, dimension_and_multiplicity(R));
}

}  // namespace hk
