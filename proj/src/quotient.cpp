#include "hk/quotient.hpp"

namespace hk {

QuotientRing::QuotientRing(Ideal defining, GbBudget budget)
    : ring_(defining.ring()),
      defining_(std::move(defining)),
      defining_gb_(buchberger(ring_, defining_.generators(), budget)),
      budget_(budget) {}

bool QuotientRing::weighted_homogeneous() const {
  for (const auto& g : defining_.generators())
    if (!g.is_homogeneous(ring_->weights())) return false;
  return true;
}

GroebnerBasis QuotientRing::basis_of(const Ideal& J) const {
  std::vector<Polynomial> gens;
  gens.reserve(J.generators().size());
  for (const auto& g : J.generators()) gens.push_back(g.to_ring(ring_));
  return extend_basis(defining_gb_, gens, budget_);
}

Ideal QuotientRing::colon(const Ideal& J, const Ideal& K) const {
  Ideal full(basis_of(J));
  return hk::colon(full, K, budget_);
}

Ideal QuotientRing::colon(const Ideal& J, const Polynomial& g) const {
  Ideal full(basis_of(J));
  return hk::colon(full, g, budget_);
}

bool QuotientRing::contains(const Ideal& J, const Polynomial& f) const {
  return basis_of(J).contains(f.to_ring(ring_));
}

QuotientRing QuotientRing::with_order(MonomialOrder order) const {
  auto r = ring_->with_order(order);
  std::vector<Polynomial> gens;
  for (const auto& g : defining_.generators()) gens.push_back(g.to_ring(r));
  return QuotientRing(Ideal(r, std::move(gens)), budget_);
}

}  // namespace hk
