#pragma once

#include "hk/groebner.hpp"
#include "hk/ideal.hpp"

namespace hk {

/// R = k[x]/D. Every ideal "of R" is represented by an ambient ideal; the
/// defining ideal D is added before any computation, so lengths of R/J are
/// ambient colengths of J + D.
class QuotientRing {
 public:
  explicit QuotientRing(Ideal defining, GbBudget budget = {});

  const RingPtr& ring() const { return ring_; }
  const Ideal& defining_ideal() const { return defining_; }
  const GroebnerBasis& defining_basis() const { return defining_gb_; }
  const GbBudget& budget() const { return budget_; }
  std::size_t nvars() const { return ring_->nvars(); }

  /// Every defining relation is homogeneous for the ring's variable weights.
  bool weighted_homogeneous() const;
  /// Weighted homogeneous with all weights 1.
  bool standard_graded() const { return ring_->standard_graded() && weighted_homogeneous(); }

  /// Reduced Groebner basis of J + D.
  GroebnerBasis basis_of(const Ideal& J) const;
  /// (J + D) : K, returned as an ambient ideal containing D.
  Ideal colon(const Ideal& J, const Ideal& K) const;
  Ideal colon(const Ideal& J, const Polynomial& g) const;
  /// f ∈ J + D.
  bool contains(const Ideal& J, const Polynomial& f) const;
  /// f = 0 in R.
  bool is_zero(const Polynomial& f) const { return defining_gb_.contains(f); }
  /// The same ring under another monomial order.
  QuotientRing with_order(MonomialOrder order) const;

  Ideal maximal_ideal() const { return Ideal::maximal(ring_); }
  Ideal ideal(std::vector<Polynomial> gens) const { return Ideal(ring_, std::move(gens)); }

 private:
  RingPtr ring_;
  Ideal defining_;
  GroebnerBasis defining_gb_;
  GbBudget budget_;
};

}  // namespace hk
