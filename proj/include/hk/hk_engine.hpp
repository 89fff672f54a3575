#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/bound_report.hpp"
#include "hk/ideal.hpp"
#include "hk/quotient.hpp"
#include "hk/rational.hpp"

namespace hk {

struct HKSample {
  unsigned e = 0;
  std::uint64_t q = 1;
  /// λ(R/J^[q]); for relative samples the difference of two such lengths.
  std::uint64_t colength = 0;
  Rational normalized = 0;
};

struct HKEstimate {
  /// Increasing q.
  std::vector<HKSample> samples;
  /// Normalized value at the largest q.
  Rational estimate = 0;
  /// |last - second-to-last|, 0 with a single sample.
  Rational error_heuristic = 0;
  std::size_t d = 0;
  /// Some requested sample ran out of Groebner budget; samples is a prefix.
  bool truncated = false;
  std::string note;

  /// max(error_heuristic, 1/1000).
  Rational tolerance() const;
};

/// λ(R/(J^[q] + D)). q must be a power of the characteristic.
std::uint64_t hk_function(const QuotientRing& R, const Ideal& J, std::uint64_t q);

/// 3 for p <= 5, 2 for p <= 13, else 1.
unsigned default_emax(std::uint32_t p);

/// Samples at q = p^1 .. p^e_max, evaluated concurrently. With e_max = 1 the
/// q = 1 sample is added so that the successive-difference heuristic exists.
/// `d` defaults to the Krull dimension of a weighted homogeneous R.
HKEstimate hk_estimate(const QuotientRing& R, const Ideal& J, unsigned e_max,
                       std::optional<std::size_t> d = std::nullopt);

/// Samples of (λ(R/I^[q]) - λ(R/J^[q])) / q^d for I ⊆ J.
HKEstimate relative_hk(const QuotientRing& R, const Ideal& I, const Ideal& J, unsigned e_max,
                       std::optional<std::size_t> d = std::nullopt);

/// A minimal prime of top dimension with its local length λ(R_P).
struct Component {
  Ideal prime;
  std::uint64_t length = 1;
};

/// Compares ê(R) with Σ length · ê(k[x]/P) at the maximal ideal, within the
/// sum of the error heuristics. `unmixed` is the user's assertion; without it
/// the report is inconclusive.
BoundReport associativity_check(const QuotientRing& R, const std::vector<Component>& components, unsigned e_max,
                                bool unmixed, std::optional<std::size_t> d = std::nullopt);

}  // namespace hk
