#include "hk/groebner.hpp"

#include <algorithm>
#include <optional>

namespace hk {

namespace {

// Sum of polynomials kept in buckets of geometrically growing capacity so
// that repeated additions cost O(n log n) rather than O(n^2). Buckets hold
// terms in increasing order, so the leading term of a bucket is back().
class Geobucket {
 public:
  explicit Geobucket(const PolyRing& ring) : ring_(ring) {}

  void add(std::vector<Term> ascending) {
    if (ascending.empty()) return;
    std::size_t i = 0;
    while (capacity(i) < ascending.size()) ++i;
    for (;;) {
      if (buckets_.size() <= i) buckets_.resize(i + 1);
      if (buckets_[i].empty()) {
        buckets_[i] = std::move(ascending);
        return;
      }
      std::vector<Term> merged = merge(buckets_[i], ascending);
      buckets_[i].clear();
      if (merged.size() <= capacity(i)) {
        buckets_[i] = std::move(merged);
        return;
      }
      ascending = std::move(merged);
      ++i;
    }
  }

  /// c * m * terms, where `terms` is a decreasing term list.
  void add_scaled(std::span<const Term> terms, const Monomial& m, PrimeField::Element c) {
    const auto& f = ring_.field();
    std::vector<Term> v;
    v.reserve(terms.size());
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) v.push_back({it->mono * m, f.mul(it->coeff, c)});
    add(std::move(v));
  }

  std::optional<Term> pop_lead() {
    const auto& ord = ring_.order();
    const auto& f = ring_.field();
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || ord.compare(buckets_[i].back().mono, buckets_[best].back().mono) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return std::nullopt;
      Term lead = buckets_[best].back();
      buckets_[best].pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
        if (buckets_[i].back().mono == lead.mono) {
          lead.coeff = f.add(lead.coeff, buckets_[i].back().coeff);
          buckets_[i].pop_back();
        }
      }
      if (lead.coeff != 0) return lead;
    }
  }

 private:
  static std::size_t capacity(std::size_t i) { return std::size_t{16} << (2 * i); }

  std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) const {
    const auto& ord = ring_.order();
    const auto& f = ring_.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = ord.compare(a[i].mono, b[j].mono);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        auto s = f.add(a[i].coeff, b[j].coeff);
        if (s) out.push_back({a[i].mono, s});
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
  }

  const PolyRing& ring_;
  std::vector<std::vector<Term>> buckets_;
};

// Reducer lookup with a support-mask prefilter.
class ReducerSet {
 public:
  void add(const Polynomial* p) {
    polys_.push_back(p);
    masks_.push_back(p->lead_monomial().support_mask());
  }
  void clear() {
    polys_.clear();
    masks_.clear();
  }
  const Polynomial* find(const Monomial& m) const {
    auto mask = m.support_mask();
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if ((masks_[i] & ~mask) == 0 && polys_[i]->lead_monomial().divides(m)) return polys_[i];
    return nullptr;
  }

 private:
  std::vector<const Polynomial*> polys_;
  std::vector<std::uint32_t> masks_;
};

std::vector<Term> ascending(std::span<const Term> terms) { return {terms.rbegin(), terms.rend()}; }

Polynomial reduce_with(const RingPtr& ring, Geobucket& bucket, const ReducerSet& reducers) {
  const auto& f = ring->field();
  std::vector<Term> result;
  while (auto t = bucket.pop_lead()) {
    if (const Polynomial* g = reducers.find(t->mono)) {
      auto c = f.neg(f.mul(t->coeff, f.inv(g->lead_coeff())));
      bucket.add_scaled(g->terms().subspan(1), t->mono / g->lead_monomial(), c);
    } else {
      result.push_back(*t);
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(result));
}

Polynomial reduce_by(const Polynomial& f, const ReducerSet& reducers) {
  Geobucket bucket(*f.ring());
  bucket.add(ascending(f.terms()));
  return reduce_with(f.ring(), bucket, reducers);
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> reducers) {
  ReducerSet set;
  for (const auto& g : reducers)
    if (!g.is_zero()) set.add(&g);
  return reduce_by(f, set);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& fld = f.ring()->field();
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Geobucket bucket(*f.ring());
  bucket.add_scaled(f.terms().subspan(1), l / f.lead_monomial(), fld.inv(f.lead_coeff()));
  bucket.add_scaled(g.terms().subspan(1), l / g.lead_monomial(), fld.neg(fld.inv(g.lead_coeff())));
  std::vector<Term> out;
  while (auto t = bucket.pop_lead()) out.push_back(*t);
  return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by the zero polynomial");
  const auto& fld = f.ring()->field();
  auto inv_lead = fld.inv(g.lead_coeff());
  Geobucket bucket(*f.ring());
  bucket.add(ascending(f.terms()));
  std::vector<Term> quotient;
  while (auto t = bucket.pop_lead()) {
    if (!g.lead_monomial().divides(t->mono)) throw Error("inexact polynomial division");
    Term q{t->mono / g.lead_monomial(), fld.mul(t->coeff, inv_lead)};
    quotient.push_back(q);
    bucket.add_scaled(g.terms().subspan(1), q.mono, fld.neg(q.coeff));
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(quotient));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (elements_.empty() || f.is_zero()) return f;
  ReducerSet set;
  for (const auto& g : elements_) set.add(&g);
  return reduce_by(f, set);
}

GroebnerBasis make_reduced_basis(RingPtr ring, std::vector<Polynomial> monic_sorted) {
  GroebnerBasis gb(std::move(ring));
  gb.elements_ = std::move(monic_sorted);
  for (const auto& e : gb.elements_) gb.leads_.push_back(e.lead_monomial());
  return gb;
}

// One Buchberger computation. Polynomials are kept monic; `active` marks
// elements whose leading monomial is not divisible by a later one.
class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr ring, const GbBudget& budget) : ring_(std::move(ring)), budget_(budget) {}

  void seed_basis(const GroebnerBasis& base) {
    for (const auto& g : base.elements()) push_element(g, g.degree());
  }

  void add_generator(const Polynomial& g) {
    if (g.ring()->nvars() != ring_->nvars()) throw Error("generator ring mismatch");
    Polynomial h = reduce_by(g.to_ring(ring_), reducers_).monic();
    if (h.is_zero()) return;
    insert(std::move(h), g.degree());
  }

  GroebnerBasis run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      const auto& ord = ring_->order();
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && ord.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();

      ++processed_;
      if (budget_.max_pairs && processed_ > budget_.max_pairs)
        throw GbBudgetExceeded("more than " + std::to_string(budget_.max_pairs) + " S-pairs", active_elements());
      if (budget_.max_degree && pair.sugar > budget_.max_degree)
        throw GbBudgetExceeded("S-pair degree " + std::to_string(pair.sugar) + " above cap", active_elements());

      Polynomial h = reduce_by(s_polynomial(polys_[pair.i], polys_[pair.j]), reducers_).monic();
      if (!h.is_zero()) insert(std::move(h), pair.sugar);
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
  };

  std::uint64_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    auto si = sugar_[i] + l.degree() - leads_[i].degree();
    auto sj = sugar_[j] + l.degree() - leads_[j].degree();
    return std::max(si, sj);
  }

  void push_element(Polynomial h, std::uint64_t sugar) {
    leads_.push_back(h.lead_monomial());
    sugar_.push_back(std::max(sugar, h.degree()));
    polys_.push_back(std::move(h));
    active_.push_back(true);
    rebuild_reducers();
  }

  void rebuild_reducers() {
    reducers_.clear();
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) reducers_.add(&polys_[k]);
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial h, std::uint64_t sugar) {
    const Monomial lh = h.lead_monomial();
    const std::size_t hi = polys_.size();

    std::vector<std::size_t> cand;
    std::vector<Monomial> cand_lcm;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) {
        cand.push_back(k);
        cand_lcm.push_back(lcm(leads_[k], lh));
      }

    // Chain criterion among the new pairs; coprime pairs are kept here and
    // dropped below by the product criterion.
    std::vector<bool> kept(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime(leads_[cand[a]], lh)) {
        kept[a] = true;
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
        if (b == a) continue;
        // b is "still in C" when b > a, "in D" when b < a and kept.
        if (b < a && !kept[b]) continue;
        if (cand_lcm[b].divides(cand_lcm[a])) redundant = true;
      }
      kept[a] = !redundant;
    }

    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lcm(leads_[p.i], lh) == p.lcm) && !(lcm(leads_[p.j], lh) == p.lcm)) continue;
      survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);

    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k] && lh.divides(leads_[k])) active_[k] = false;

    push_element(std::move(h), sugar);

    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!kept[a] || coprime(leads_[cand[a]], lh)) continue;
      pairs_.push_back({cand[a], hi, cand_lcm[a], pair_sugar(cand[a], hi, cand_lcm[a])});
    }
  }

  std::vector<Polynomial> active_elements() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  GroebnerBasis finish() const {
    std::vector<const Polynomial*> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(&polys_[k]);
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      ReducerSet others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.add(minimal[m]);
      const Polynomial& g = *minimal[k];
      Polynomial tail = reduce_by(g.tail(), others);
      std::vector<Term> terms{g.lead_term()};
      terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
      out.push_back(Polynomial::from_sorted_terms(ring_, std::move(terms)));
    }
    const auto& ord = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return make_reduced_basis(ring_, std::move(out));
  }

  RingPtr ring_;
  GbBudget budget_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> leads_;
  std::vector<std::uint64_t> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  ReducerSet reducers_;
  std::size_t processed_ = 0;
};

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const GbBudget& budget) {
  BuchbergerRun run(ring, budget);
  // Low-degree generators first keeps early reductions cheap.
  std::vector<const Polynomial*> order;
  for (const auto& g : gens)
    if (!g.is_zero()) order.push_back(&g);
  std::stable_sort(order.begin(), order.end(),
                   [](const Polynomial* a, const Polynomial* b) { return a->degree() < b->degree(); });
  for (const auto* g : order) run.add_generator(*g);
  return run.run();
}

GroebnerBasis extend_basis(const GroebnerBasis& base, std::span<const Polynomial> extra, const GbBudget& budget) {
  BuchbergerRun run(base.ring(), budget);
  run.seed_basis(base);
  for (const auto& g : extra)
    if (!g.is_zero()) run.add_generator(g);
  return run.run();
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (!gb.normal_form(s_polynomial(els[i], els[j])).is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (els[i].lead_coeff() != 1) return false;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : els[i].terms())
        if (gb.leading_monomials()[j].divides(t.mono)) return false;
    }
  }
  return true;
}

}  // namespace hk
