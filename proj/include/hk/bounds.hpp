#pragma once

#include <optional>
#include <vector>

#include "hk/bound_report.hpp"
#include "hk/hilbert.hpp"
#include "hk/hk_engine.hpp"

namespace hk {

/// Ring-theoretic hypotheses the user vouches for; none of them is verified
/// except `homogeneous`.
struct RingFlags {
  bool homogeneous = false;
  bool cm = false;
  bool gorenstein = false;
  bool unmixed = false;
  bool normal = false;

  bool operator==(const RingFlags&) const = default;
};

enum class ReductionStatus {
  /// d generators and λ(R/params) = e(R) with e(R) from the Hilbert series.
  kCertified,
  /// d generators with finite colength; e(R) is taken to be that colength.
  kAsserted,
  /// Not a minimal reduction, or not a system of parameters at all.
  kFailed,
  kMissing,
};
std::string_view reduction_status_name(ReductionStatus s);

/// Everything the checks consume, computed once per ring.
struct RingInvariants {
  std::size_t d = 0;
  std::int64_t e = 0;
  bool e_known = false;
  /// μ(m) = λ(R/(m^2 + D)) - 1.
  std::size_t embedding_dim = 0;
  RingFlags flags;
  HKEstimate hk;
  Rational tolerance = Rational(1, 1000);
  std::optional<Ideal> params;
  ReductionStatus reduction = ReductionStatus::kMissing;
  /// d generators with finite colength.
  bool params_sop = false;
  /// λ(R/params) when params is a system of parameters.
  std::uint64_t params_colength = 0;
  std::optional<ArtinianProfile> profile;
};

/// μ(m) for a presentation whose defining ideal lies in m.
std::size_t embedding_dimension(const QuotientRing& R);

BoundReport check_sandwich(const RingInvariants& in);
/// Duality bound with λ* replaced by λ and (x)* : I by (x) : I, I ⊇ params.
BoundReport check_duality_bound(const QuotientRing& R, const RingInvariants& in, const Ideal& I);
BoundReport check_type_bound(const RingInvariants& in);
BoundReport check_minimal_multiplicity(const RingInvariants& in);
BoundReport check_small_ehk_cm(const RingInvariants& in);
BoundReport check_small_ehk_unmixed(const RingInvariants& in);
BoundReport check_embdim_bound(const RingInvariants& in);
BoundReport check_graded_bounds(const RingInvariants& in);
BoundReport check_gorenstein_non_fregular(const RingInvariants& in);
BoundReport check_dimension_bound(const RingInvariants& in);

/// 1 + 1/(d (d!(d-1)+1)^d).
Rational dimension_bound_rhs(std::size_t d);

/// Strongest certificate the estimate supports, by contrapositive.
Certificate deduce_regularity_class(const RingInvariants& in);

}  // namespace hk
