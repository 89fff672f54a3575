#include "hk/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

namespace hk {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order,
                   std::vector<std::uint32_t> weights)
    : field_(field), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
  if (names_.size() > Monomial::kMaxVars)
    throw Error("at most " + std::to_string(Monomial::kMaxVars) + " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw Error("weight count does not match variable count");
  for (auto w : weights_)
    if (w == 0) throw Error("variable weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("duplicate variable '" + names_[i] + "'");
}

bool PolyRing::standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return std::make_shared<PolyRing>(field_, names_, order, weights_);
}

RingPtr PolyRing::with_elimination_vars(const std::vector<std::string>& names) const {
  std::vector<std::string> all = names;
  all.insert(all.end(), names_.begin(), names_.end());
  std::vector<std::uint32_t> w(names.size(), 1);
  w.insert(w.end(), weights_.begin(), weights_.end());
  auto inner = order_.kind() == MonomialOrder::Kind::kLex ? MonomialOrder::Kind::kLex
                                                          : MonomialOrder::Kind::kGrevlex;
  return std::make_shared<PolyRing>(field_, std::move(all),
                                    MonomialOrder::block(names.size(), MonomialOrder::Kind::kGrevlex, inner),
                                    std::move(w));
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order,
                  std::vector<std::uint32_t> weights) {
  return std::make_shared<PolyRing>(PrimeField(p), std::move(names), order, std::move(weights));
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  auto v = ring->field().reduce(c);
  std::vector<Term> t;
  if (v) t.push_back({Monomial(ring->nvars()), v});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  return Polynomial(std::move(ring), {{m, 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, PrimeField::Element c) {
  if (m.nvars() != ring->nvars()) throw Error("monomial does not match ring variable count");
  c = ring->field().reduce(c);
  std::vector<Term> t;
  if (c) t.push_back({m, c});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  const auto& f = ring->field();
  for (auto& t : terms)
    if (t.mono.nvars() != ring->nvars()) throw Error("term does not match ring variable count");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    auto c = f.reduce(t.coeff);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = f.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.mono, c});
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(ring_->same_variables(*o.ring_) && ring_->order() == o.ring_->order()))
    throw Error("polynomials live in different rings (variable count or order mismatch)");
}

namespace {

// Merge of two decreasing term lists, b scaled by `sign_b` coefficient.
std::vector<Term> merge(const PolyRing& ring, std::span<const Term> a, std::span<const Term> b,
                        PrimeField::Element scale_b) {
  const auto& ord = ring.order();
  const auto& f = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, f.mul(b[j].coeff, scale_b)});
      ++j;
    } else {
      auto s = f.add(a[i].coeff, f.mul(b[j].coeff, scale_b));
      if (s) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, f.mul(b[j].coeff, scale_b)});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  return Polynomial(ring_, merge(*ring_, terms_, o.terms_, 1));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(o);
  return Polynomial(ring_, merge(*ring_, terms_, o.terms_, ring_->field().neg(1)));
}

Polynomial Polynomial::operator-() const { return scale(ring_->field().neg(1)); }

Polynomial Polynomial::scale(PrimeField::Element c) const {
  c = ring_->field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coeff = ring_->field().mul(term.coeff, c);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::mul_term(const Monomial& m, PrimeField::Element c) const {
  c = ring_->field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.mono * m, ring_->field().mul(term.coeff, c)});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  // Accumulate through a hash map; cheaper than repeated merges for dense products.
  std::unordered_map<Monomial, PrimeField::Element, MonomialHash> acc;
  acc.reserve(small.size() * big.size());
  const auto& f = ring_->field();
  for (const auto& s : small.terms_)
    for (const auto& b : big.terms_) {
      auto& slot = acc[s.mono * b.mono];
      slot = f.add(slot, f.mul(s.coeff, b.coeff));
    }
  std::vector<Term> t;
  t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) t.push_back({m, c});
  return from_terms(ring_, std::move(t));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  // A multiplicative order keeps the term list sorted under m -> m^q.
  for (const auto& term : terms_) t.push_back({term.mono.pow(q), term.coeff});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::to_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars()) throw Error("ring change requires equal variable counts");
  if (target->order() == ring_->order()) return Polynomial(target, terms_);
  return from_terms(target, terms_);
}

Polynomial Polynomial::lift_front(const RingPtr& target, std::size_t count) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.mono.push_front(count), term.coeff});
  return from_terms(target, std::move(t));
}

Polynomial Polynomial::drop_front(const RingPtr& target, std::size_t count) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) {
    for (std::size_t i = 0; i < count; ++i)
      if (term.mono[i]) throw Error("cannot drop a variable that occurs");
    t.push_back({term.mono.drop_front(count), term.coeff});
  }
  return from_terms(target, std::move(t));
}

Polynomial Polynomial::extend_back(const RingPtr& target, std::size_t count) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.mono.extend_back(count), term.coeff});
  return from_terms(target, std::move(t));
}

bool Polynomial::is_homogeneous(std::span<const std::uint32_t> weights) const {
  if (terms_.empty()) return true;
  auto d = terms_.front().mono.weighted_degree(weights);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.weighted_degree(weights) == d; });
}

std::uint64_t Polynomial::weighted_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(ring_->weights()));
  return d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->names();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::int64_t c = ring_->field().lift(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, offset_ + pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Polynomial expr() {
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    Polynomial base(ring_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer();
      base = Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_->field().characteristic()));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      base = Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    } else if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (eat('^')) {
      std::uint64_t k = integer();
      if (base.is_monomial() && !base.is_zero()) {
        const auto& t = base.lead_term();
        return Polynomial::monomial(ring_, t.mono.pow(k), ring_->field().pow(t.coeff, k));
      }
      return base.pow(k);
    }
    return base;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).parse();
}

}  // namespace hk
