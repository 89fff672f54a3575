#pragma once

// Brute-force references used by the tests. Nothing here touches the
// library's Groebner, Hilbert or colon code: polynomials are plain maps of
// exponent vectors, and lengths come from dense linear algebra mod p.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hk/polynomial.hpp"

namespace oracle {

using Exps = std::vector<unsigned>;
using Poly = std::map<Exps, std::uint64_t>;

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = r * a % p;
    a = a * a % p;
    k >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline Poly from_hk(const hk::Polynomial& f) {
  Poly out;
  for (const auto& t : f.terms()) {
    auto e = t.mono.exponents();
    out[Exps(e.begin(), e.end())] = t.coeff;
  }
  return out;
}

inline hk::Polynomial to_hk(const Poly& f, const hk::RingPtr& ring) {
  std::vector<hk::Term> terms;
  for (const auto& [e, c] : f) {
    std::vector<hk::Monomial::Exponent> ex(e.begin(), e.end());
    terms.push_back({hk::Monomial(std::span<const hk::Monomial::Exponent>(ex)), static_cast<std::uint32_t>(c)});
  }
  return hk::Polynomial::from_terms(ring, terms);
}

inline Exps mul(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline unsigned degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Row-echelon span of dense vectors over F_p.
class Span {
 public:
  Span(std::size_t width, std::uint64_t p) : width_(width), p_(p) {}

  /// Adds v; returns false if it was already in the span.
  bool insert(std::vector<std::uint64_t> v) {
    reduce(v);
    auto lead = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (lead == v.end()) return false;
    std::size_t col = lead - v.begin();
    std::uint64_t s = inv(v[col], p_);
    for (auto& c : v) c = c * s % p_;
    rows_.emplace(col, std::move(v));
    return true;
  }

  bool contains(std::vector<std::uint64_t> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; });
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  void reduce(std::vector<std::uint64_t>& v) const {
    for (const auto& [col, row] : rows_) {
      std::uint64_t c = v[col];
      if (!c) continue;
      for (std::size_t j = col; j < width_; ++j) v[j] = (v[j] + (p_ - c) * row[j]) % p_;
    }
  }

  std::size_t width_;
  std::uint64_t p_;
  std::map<std::size_t, std::vector<std::uint64_t>> rows_;
};

/// Quotient of k[x] by the box ideal (x_i^bound_i). Every ideal containing the
/// box ideal is handled as a subspace of this finite algebra.
class Box {
 public:
  Box(std::vector<unsigned> bounds, std::uint64_t p) : bounds_(std::move(bounds)), p_(p) {
    size_ = 1;
    for (unsigned b : bounds_) size_ *= b;
  }

  std::size_t size() const { return size_; }

  /// Index of a monomial, or size() if it is zero in the box.
  std::size_t index(const Exps& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
      if (e[i] >= bounds_[i]) return size_;
      idx = idx * bounds_[i] + e[i];
    }
    return idx;
  }

  Exps monomial(std::size_t idx) const {
    Exps e(bounds_.size());
    for (std::size_t i = bounds_.size(); i-- > 0;) {
      e[i] = idx % bounds_[i];
      idx /= bounds_[i];
    }
    return e;
  }

  std::vector<std::uint64_t> vec(const Poly& f) const {
    std::vector<std::uint64_t> v(size_, 0);
    for (const auto& [e, c] : f)
      if (auto i = index(e); i < size_) v[i] = (v[i] + c) % p_;
    return v;
  }

  /// The image of the ideal generated by `gens` (plus the box ideal).
  Span ideal_span(const std::vector<Poly>& gens) const {
    Span s(size_, p_);
    for (const auto& g : gens)
      for (std::size_t m = 0; m < size_; ++m) {
        Poly shifted;
        Exps me = monomial(m);
        for (const auto& [e, c] : g) shifted[mul(me, e)] = c;
        s.insert(vec(shifted));
      }
    return s;
  }

  std::uint64_t colength(const std::vector<Poly>& gens) const { return size_ - ideal_span(gens).rank(); }

  bool member(const std::vector<Poly>& gens, const Poly& f) const { return ideal_span(gens).contains(vec(f)); }

 private:
  std::vector<unsigned> bounds_;
  std::uint64_t p_;
  std::size_t size_;
};

inline std::vector<Exps> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exps> out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// dim_k (k[x]/I)_t for t = 0..max_degree, I generated by homogeneous
/// polynomials, by spanning every degree-t multiple of every generator.
inline std::vector<std::uint64_t> hilbert_function(std::size_t n, const std::vector<Poly>& gens, unsigned max_degree,
                                                   std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (unsigned t = 0; t <= max_degree; ++t) {
    auto monos = monomials_of_degree(n, t);
    std::map<Exps, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
    Span s(monos.size(), p);
    for (const auto& g : gens) {
      unsigned dg = degree(g.begin()->first);
      if (dg > t) continue;
      for (const auto& m : monomials_of_degree(n, t - dg)) {
        std::vector<std::uint64_t> v(monos.size(), 0);
        for (const auto& [e, c] : g) v[col.at(mul(m, e))] = c;
        s.insert(v);
      }
    }
    out.push_back(monos.size() - s.rank());
  }
  return out;
}

/// Division and a criterion-free Buchberger loop under the order `cmp`
/// (cmp(a, b) < 0 iff a < b).
template <class Cmp>
class NaiveGroebner {
 public:
  NaiveGroebner(Cmp cmp, std::uint64_t p) : cmp_(cmp), p_(p) {}

  Exps lead(const Poly& f) const {
    auto it = f.begin();
    Exps best = it->first;
    for (; it != f.end(); ++it)
      if (cmp_(it->first, best) > 0) best = it->first;
    return best;
  }

  static bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  void add_scaled(Poly& f, const Poly& g, const Exps& shift, std::uint64_t c) const {
    for (const auto& [e, gc] : g) {
      Exps k = mul(e, shift);
      std::uint64_t v = (f[k] + c * gc) % p_;
      if (v)
        f[k] = v;
      else
        f.erase(k);
    }
  }

  /// Full reduction: repeatedly cancels the largest reducible term.
  Poly reduce(Poly f, const std::vector<Poly>& G) const {
    Poly rem;
    while (!f.empty()) {
      Exps lt = lead(f);
      std::uint64_t lc = f.at(lt);
      bool done = false;
      for (const auto& g : G) {
        Exps lg = lead(g);
        if (!divides(lg, lt)) continue;
        Exps shift(lt.size());
        for (std::size_t i = 0; i < lt.size(); ++i) shift[i] = lt[i] - lg[i];
        add_scaled(f, g, shift, (p_ - lc) * inv(g.at(lg), p_) % p_);
        done = true;
        break;
      }
      if (!done) {
        rem[lt] = lc;
        f.erase(lt);
      }
    }
    return rem;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    Exps lf = lead(f), lg = lead(g), l(lf.size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(lf[i], lg[i]);
    Exps sf(l.size()), sg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      sf[i] = l[i] - lf[i];
      sg[i] = l[i] - lg[i];
    }
    Poly s;
    add_scaled(s, f, sf, inv(f.at(lf), p_));
    add_scaled(s, g, sg, (p_ - inv(g.at(lg), p_)) % p_);
    return s;
  }

  /// Reduced Groebner basis, monic, sorted by increasing leading monomial.
  std::vector<Poly> basis(std::vector<Poly> G) const {
    std::erase_if(G, [](const Poly& f) { return f.empty(); });
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < G.size() && !grew; ++i)
        for (std::size_t j = i + 1; j < G.size() && !grew; ++j) {
          Poly r = reduce(spoly(G[i], G[j]), G);
          if (!r.empty()) {
            G.push_back(r);
            grew = true;
          }
        }
    }
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
        if (i == j || !divides(lead(G[j]), lead(G[i]))) continue;
        redundant = lead(G[j]) != lead(G[i]) || j < i;
      }
      if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Poly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Exps l = lead(minimal[i]);
      Poly tail = minimal[i];
      std::uint64_t lc = tail.at(l);
      tail.erase(l);
      Poly f = reduce(tail, others);
      f[l] = lc;
      std::uint64_t s = inv(lc, p_);
      for (auto& [e, c] : f) c = c * s % p_;
      out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return cmp_(lead(a), lead(b)) < 0; });
    return out;
  }

 private:
  Cmp cmp_;
  std::uint64_t p_;
};

/// A random polynomial with up to `terms` terms of total degree <= max_degree
/// (exactly max_degree when `homogeneous`).
inline Poly random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_degree, std::size_t terms, std::uint64_t p,
                        bool homogeneous = false) {
  Poly f;
  for (std::size_t k = 0; k < terms; ++k) {
    unsigned d = homogeneous ? max_degree : static_cast<unsigned>(rng() % (max_degree + 1));
    auto monos = monomials_of_degree(n, d);
    std::uint64_t c = 1 + rng() % (p - 1);
    f[monos[rng() % monos.size()]] = c;
  }
  return f;
}

}  // namespace oracle
