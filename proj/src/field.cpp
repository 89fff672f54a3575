#include "hk/field.hpp"

namespace hk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p > kMaxCharacteristic || !is_prime(p))
    throw Error("characteristic must be prime in [2, 65521], got " + std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t k) const {
  Element result = 1 % p_;
  while (k) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw Error("division by zero in F_p");
  // Extended Euclid; p is small so signed 64-bit arithmetic is plenty.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace hk
