#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hk/polynomial.hpp"

namespace hk {

/// Resource limits for one Buchberger run. Zero means unlimited.
struct GbBudget {
  std::size_t max_pairs = 0;
  std::uint64_t max_degree = 0;
};

/// Thrown when a Buchberger run exceeds its budget. Carries the basis built
/// so far (a generating set of the ideal, not yet a Groebner basis).
class GbBudgetExceeded : public Error {
 public:
  GbBudgetExceeded(const std::string& what, std::vector<Polynomial> partial)
      : Error("GB budget exceeded: " + what), partial_(std::move(partial)) {}
  const std::vector<Polynomial>& partial() const { return partial_; }

 private:
  std::vector<Polynomial> partial_;
};

/// Reduced Groebner basis: monic elements sorted by increasing leading
/// monomial; no term of any element is divisible by another leading monomial.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  bool is_zero() const { return elements_.empty(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  bool operator==(const GroebnerBasis& o) const { return elements_ == o.elements_; }

 private:
  friend class BuchbergerRun;
  friend GroebnerBasis make_reduced_basis(RingPtr ring, std::vector<Polynomial> monic_sorted);

  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar-degree
/// (normal strategy) pair selection. All generators must share `ring`.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const GbBudget& budget = {});

/// Groebner basis of base + (extra), skipping the pairs of `base`.
GroebnerBasis extend_basis(const GroebnerBasis& base, std::span<const Polynomial> extra,
                           const GbBudget& budget = {});

/// Full reduction of f by an arbitrary list of polynomials (first divisor
/// wins). The result has no term divisible by any reducer's leading monomial.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> reducers);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Exact quotient f / g; throws if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of pairs of elements reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// No term of any element is divisible by the leading monomial of another,
/// and every element is monic.
bool is_reduced(const GroebnerBasis& gb);

}  // namespace hk
