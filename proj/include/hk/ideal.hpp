#pragma once

#include <vector>

#include "hk/groebner.hpp"
#include "hk/polynomial.hpp"

namespace hk {

/// Ideal of an ambient polynomial ring given by generators. Zero generators
/// are dropped, so the zero ideal has an empty generator list.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  explicit Ideal(const GroebnerBasis& gb) : Ideal(gb.ring(), gb.elements()) {}

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  /// (x_1, ..., x_n).
  static Ideal maximal(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  GroebnerBasis groebner(const GbBudget& budget = {}) const { return buchberger(ring_, gens_, budget); }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// True iff q = p^e for the ring's characteristic p, e >= 0.
bool is_power_of(std::uint64_t q, std::uint64_t p);

/// I^[q] = (g^q : g generators of I). Requires q = p^e.
Ideal frobenius_power(const Ideal& I, std::uint64_t q);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I^n; I^0 is the unit ideal.
Ideal ideal_power(const Ideal& I, std::size_t n);

/// I ∩ J via the basis of t*I + (1-t)*J under a block order eliminating t.
Ideal intersection(const Ideal& I, const Ideal& J, const GbBudget& budget = {});

/// I : (g) = (I ∩ (g)) / g.
Ideal colon(const Ideal& I, const Polynomial& g, const GbBudget& budget = {});
/// I : J as the intersection of I : g over the generators of J; J must be nonzero.
Ideal colon(const Ideal& I, const Ideal& J, const GbBudget& budget = {});

bool membership(const Polynomial& f, const Ideal& I, const GbBudget& budget = {});
/// J ⊆ I, checked on generators of J.
bool contains(const Ideal& I, const Ideal& J, const GbBudget& budget = {});
/// Equal reduced Groebner bases.
bool same_ideal(const Ideal& I, const Ideal& J, const GbBudget& budget = {});

}  // namespace hk
