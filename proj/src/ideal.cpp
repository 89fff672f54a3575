#include "hk/ideal.hpp"

#include <optional>

namespace hk {

namespace {

void check_same_ambient(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_variables(*J.ring())) throw Error("ideals live in different ambient rings");
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring()->nvars() != ring_->nvars()) throw Error("generator does not belong to the ambient ring");
    gens_.push_back(g.ring() == ring_ ? std::move(g) : g.to_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

bool is_power_of(std::uint64_t q, std::uint64_t p) {
  if (q == 0 || p < 2) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

Ideal frobenius_power(const Ideal& I, std::uint64_t q) {
  auto p = I.ring()->field().characteristic();
  if (!is_power_of(q, p)) throw Error("Frobenius power requires q = p^e");
  if (q > (std::uint64_t{1} << 20)) throw Error("Frobenius power q exceeds 2^20");
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.frobenius(q));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same_ambient(I, J);
  auto gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g.to_ring(I.ring()));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same_ambient(I, J);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g.to_ring(I.ring()));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, std::size_t n) {
  Ideal result = Ideal::unit(I.ring());
  for (std::size_t k = 0; k < n; ++k) {
    result = ideal_product(result, I);
    // Products of monomial generators repeat; keep the list duplicate-free.
    std::vector<Polynomial> uniq;
    for (const auto& g : result.generators()) {
      bool seen = false;
      for (const auto& u : uniq)
        if (u == g) seen = true;
      if (!seen) uniq.push_back(g);
    }
    result = Ideal(I.ring(), std::move(uniq));
  }
  return result;
}

Ideal intersection(const Ideal& I, const Ideal& J, const GbBudget& budget) {
  check_same_ambient(I, J);
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  const RingPtr& ring = I.ring();
  RingPtr ext = ring->with_elimination_vars({"_t"});
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.lift_front(ext, 1));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.lift_front(ext, 1));
  GroebnerBasis gb = buchberger(ext, gens, budget);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements())
    if (e.lead_monomial()[0] == 0) out.push_back(e.drop_front(ring, 1));
  return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& I, const Polynomial& g, const GbBudget& budget) {
  if (g.is_zero()) throw Error("colon by the zero ideal");
  if (g.is_constant()) return I;
  const RingPtr& ring = I.ring();
  Polynomial gg = g.to_ring(ring);
  Ideal meet = intersection(I, Ideal(ring, {gg}), budget);
  std::vector<Polynomial> out;
  for (const auto& f : meet.generators()) out.push_back(divide_exact(f, gg));
  return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& I, const Ideal& J, const GbBudget& budget) {
  check_same_ambient(I, J);
  if (J.is_zero()) throw Error("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal part = colon(I, g, budget);
    acc = acc ? intersection(*acc, part, budget) : part;
  }
  return *acc;
}

bool membership(const Polynomial& f, const Ideal& I, const GbBudget& budget) {
  return I.groebner(budget).contains(f.to_ring(I.ring()));
}

bool contains(const Ideal& I, const Ideal& J, const GbBudget& budget) {
  check_same_ambient(I, J);
  GroebnerBasis gb = I.groebner(budget);
  for (const auto& g : J.generators())
    if (!gb.contains(g.to_ring(I.ring()))) return false;
  return true;
}

bool same_ideal(const Ideal& I, const Ideal& J, const GbBudget& budget) {
  check_same_ambient(I, J);
  return I.groebner(budget) == Ideal(I.ring(), J.generators()).groebner(budget);
}

}  // namespace hk
