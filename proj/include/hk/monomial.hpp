#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hk/field.hpp"

namespace hk {

/// Exponent vector with inline storage. Frobenius powers and elimination
/// variables keep the variable count small, so a fixed capacity avoids a heap
/// allocation per term.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 12;
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t nvars() const { return nvars_; }
  std::uint64_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), nvars_}; }

  void set(std::size_t i, Exponent e);
  /// Bit i set iff variable i occurs; a cheap prefilter for divisibility.
  std::uint32_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires divides(o).
  Monomial operator/(const Monomial& o) const;
  /// Every exponent multiplied by q; throws if an exponent would reach 2^32.
  Monomial pow(std::uint64_t q) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  /// Monomial with the variables in [first, first+count) removed or a block
  /// of zero exponents inserted; used to move between a ring and its
  /// extension by elimination variables.
  Monomial drop_front(std::size_t count) const;
  Monomial push_front(std::size_t count) const;
  Monomial extend_back(std::size_t count) const;

  std::uint64_t weighted_degree(std::span<const std::uint32_t> weights) const;

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exps_ == o.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint64_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Total orders on monomials refining divisibility. Block orders compare the
/// first `split` variables by `first`, then the rest by `second`; the
/// elimination variables of intersection and colon computations live in the
/// first block.
class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kLex, kBlock };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, 0, Kind::kGrevlex, Kind::kGrevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0, Kind::kLex, Kind::kLex); }
  static MonomialOrder block(std::size_t split, Kind first = Kind::kGrevlex,
                             Kind second = Kind::kGrevlex);

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  Kind first() const { return first_; }
  Kind second() const { return second_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && split_ == o.split_ && first_ == o.first_ && second_ == o.second_;
  }

  std::string name() const;

 private:
  MonomialOrder(Kind k, std::size_t split, Kind first, Kind second)
      : kind_(k), split_(split), first_(first), second_(second) {}

  Kind kind_;
  std::size_t split_;
  Kind first_;
  Kind second_;
};

/// All monomials of total degree `degree` in `nvars` variables.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree);

}  // namespace hk
