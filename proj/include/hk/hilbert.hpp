#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hk/groebner.hpp"
#include "hk/ideal.hpp"
#include "hk/monomial.hpp"
#include "hk/quotient.hpp"

namespace hk {

/// HS(t) = numerator(t) / (1-t)^ambient_vars, plus the form with every
/// (1-t) factor cancelled.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  std::size_t ambient_vars = 0;
  std::vector<std::int64_t> reduced_numerator;
  std::size_t dimension = 0;

  /// reduced_numerator(1); the multiplicity for standard gradings.
  std::int64_t multiplicity() const;
  /// Power-series coefficients of t^0 .. t^max_degree.
  std::vector<std::int64_t> coefficients(std::size_t max_degree) const;
};

/// Raised when a quotient is not finite-dimensional.
class InfiniteColength : public Error {
 public:
  InfiniteColength() : Error("colength is infinite") {}
};

/// Drops generators divisible by another one (and duplicates).
std::vector<Monomial> minimalize(std::span<const Monomial> gens);

/// Hilbert series of k[x]/(gens) by the pivot recursion
/// HS(I) = HS(I + (p)) + t^deg(p) HS(I : p) with a variable-power pivot p,
/// memoized on the minimal generating set.
HilbertSeries hilbert_series_monomial(std::span<const Monomial> gens, std::size_t nvars);

/// Number of standard monomials of a Groebner basis; throws "colength is
/// infinite" unless every variable has a pure power among the leading
/// monomials.
std::uint64_t colength(const GroebnerBasis& gb);
std::uint64_t colength(const Ideal& I, const GbBudget& budget = {});
/// λ(R/J) = colength(J + D).
std::uint64_t colength(const QuotientRing& R, const Ideal& J);

struct DimensionMultiplicity {
  std::size_t dimension;
  std::int64_t multiplicity;
};

/// (d, e) from the initial ideal of the defining ideal. Requires a standard
/// graded presentation.
DimensionMultiplicity dimension_and_multiplicity(const QuotientRing& R);
/// Krull dimension from the initial ideal; valid for any positively
/// weighted homogeneous presentation.
std::size_t krull_dimension(const QuotientRing& R);

/// Invariants of the Artinian ring A = R/params.
struct ArtinianProfile {
  std::uint64_t colength = 0;
  /// k_i = λ(m^i A / m^{i+1} A), i = 0..top_degree.
  std::vector<std::uint64_t> hilbert_function;
  std::size_t top_degree = 0;
  /// λ of the socle ((params + D) : m) / (params + D).
  std::uint64_t socle_dim = 0;
};

ArtinianProfile artinian_profile(const QuotientRing& R, const Ideal& params);

/// A polynomial whose image spans part of the socle of R/params: a generator
/// of (params + D) : m that is not in params + D.
Polynomial socle_element(const QuotientRing& R, const Ideal& params);

/// true iff params has exactly d generators and λ(R/params) = e.
bool certify_minimal_reduction(const QuotientRing& R, const Ideal& params, const DimensionMultiplicity& de);
bool certify_minimal_reduction(const QuotientRing& R, const Ideal& params);

}  // namespace hk
