#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The prime field F_p with 2 <= p <= 65521. Elements are plain integers in
/// [0, p); products fit in 64 bits so reduction is a single modulo.
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kMaxCharacteristic = 65521;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Element reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element pow(Element a, std::uint64_t k) const;
  /// Throws on a == 0.
  Element inv(Element a) const;

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t lift(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace hk
