#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hk/field.hpp"
#include "hk/monomial.hpp"

namespace hk {

/// Ambient polynomial ring F_p[x_1..x_n] with a fixed monomial order and
/// positive integer variable weights (default 1).
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
           std::vector<std::uint32_t> weights = {});

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  bool standard_graded() const;

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;
  /// Same ring with `names` prepended (weights 1), under the block order
  /// eliminating them.
  std::shared_ptr<const PolyRing> with_elimination_vars(const std::vector<std::string>& names) const;

  bool same_variables(const PolyRing& o) const { return field_ == o.field_ && names_ == o.names_; }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<std::uint32_t> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::grevlex(), std::vector<std::uint32_t> weights = {});

struct Term {
  Monomial mono;
  PrimeField::Element coeff;
  bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

/// Sparse polynomial: terms with nonzero coefficients, strictly decreasing in
/// the ring's monomial order. Values are immutable once built.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, PrimeField::Element c = 1);
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Takes terms already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Throws on the zero polynomial.
  const Term& lead_term() const;
  const Monomial& lead_monomial() const { return lead_term().mono; }
  PrimeField::Element lead_coeff() const { return lead_term().coeff; }
  std::uint64_t degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(PrimeField::Element c) const;
  Polynomial mul_term(const Monomial& m, PrimeField::Element c) const;
  Polynomial pow(std::uint64_t k) const;
  /// f^q for q a power of the characteristic: coefficients are fixed by
  /// Fermat and exponents scale by q.
  Polynomial frobenius(std::uint64_t q) const;
  Polynomial monic() const;
  /// Everything but the leading term.
  Polynomial tail() const;

  /// Same variables, re-sorted under `target`'s order.
  Polynomial to_ring(const RingPtr& target) const;
  /// Into a ring that prepends `count` elimination variables.
  Polynomial lift_front(const RingPtr& target, std::size_t count) const;
  /// Drops the first `count` variables; requires they do not occur.
  Polynomial drop_front(const RingPtr& target, std::size_t count) const;
  /// Into a ring with `count` extra trailing variables.
  Polynomial extend_back(const RingPtr& target, std::size_t count) const;

  bool is_homogeneous(std::span<const std::uint32_t> weights) const;
  bool is_homogeneous() const { return is_homogeneous(ring_->weights()); }
  std::uint64_t weighted_degree() const;
  bool is_monomial() const { return terms_.size() == 1; }

  std::string to_string() const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void check_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Text syntax error with a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses `x^2*y - 3*z^3`, `(x+y)^2` and the like over `ring`'s variables.
/// `line` and `column_offset` only affect error locations.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column_offset = 0);

}  // namespace hk
