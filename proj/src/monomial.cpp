#include "hk/monomial.hpp"

#include <algorithm>
#include <limits>

namespace hk {

namespace {

void check_nvars(std::size_t n) {
  if (n > Monomial::kMaxVars)
    throw Error("at most " + std::to_string(Monomial::kMaxVars) + " variables are supported, got " +
                std::to_string(n));
}

int compare_range(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  if (kind == MonomialOrder::Kind::kLex) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) : nvars_(static_cast<std::uint8_t>(exps.size())) {
  check_nvars(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps_[i] = exps[i];
    degree_ += exps[i];
  }
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i]) mask |= 1u << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::uint64_t e = std::uint64_t{exps_[i]} + o.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw Error("monomial exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = exps_[i] - o.exps_[i];
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::pow(std::uint64_t q) const {
  Monomial r = *this;
  r.degree_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::uint64_t e = std::uint64_t{exps_[i]} * q;
    if (e > std::numeric_limits<Exponent>::max()) throw Error("monomial exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
    r.degree_ += e;
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars_; ++i)
    if (a.exps_[i] && b.exps_[i]) return false;
  return true;
}

Monomial Monomial::drop_front(std::size_t count) const {
  Monomial r(nvars_ - count);
  for (std::size_t i = count; i < nvars_; ++i) r.set(i - count, exps_[i]);
  return r;
}

Monomial Monomial::push_front(std::size_t count) const {
  Monomial r(nvars_ + count);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i + count, exps_[i]);
  return r;
}

Monomial Monomial::extend_back(std::size_t count) const {
  Monomial r(nvars_ + count);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, exps_[i]);
  return r;
}

std::uint64_t Monomial::weighted_degree(std::span<const std::uint32_t> weights) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += std::uint64_t{exps_[i]} * weights[i];
  return d;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

MonomialOrder MonomialOrder::block(std::size_t split, Kind first, Kind second) {
  if (first == Kind::kBlock || second == Kind::kBlock) throw Error("nested block orders are not supported");
  return MonomialOrder(Kind::kBlock, split, first, second);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::kGrevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    case Kind::kLex:
      return compare_range(Kind::kLex, a, b, 0, n);
    case Kind::kBlock: {
      int c = compare_range(first_, a, b, 0, split_);
      return c != 0 ? c : compare_range(second_, a, b, split_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  auto base = [](Kind k) { return k == Kind::kLex ? std::string("lex") : std::string("grevlex"); };
  if (kind_ != Kind::kBlock) return base(kind_);
  return "block(" + std::to_string(split_) + "," + base(first_) + "," + base(second_) + ")";
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // Odometer over compositions of `degree` into nvars parts.
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == nvars) {
      m.set(i, static_cast<Monomial::Exponent>(left));
      out.push_back(m);
      return;
    }
    for (std::uint64_t e = left + 1; e-- > 0;) {
      m.set(i, static_cast<Monomial::Exponent>(e));
      rec(i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(0, degree);
  return out;
}

}  // namespace hk
