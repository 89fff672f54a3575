#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hk/bounds.hpp"
#include "hk/presentation.hpp"

namespace hk {

struct PipelineConfig {
  /// Defaults to default_emax(p).
  std::optional<unsigned> e_max;
  /// Replaces the estimate's own tolerance when set.
  std::optional<Rational> tolerance;
  std::uint64_t seed = 0;
  GbBudget budget;
  /// Root degree of the radical extensions built by the transfer checks.
  unsigned radical_n = 2;
  /// The nested check compares n = 1 .. nested_n_max - 1 with n + 1.
  unsigned nested_n_max = 4;
  bool timings = false;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct RunReport {
  RingPresentation presentation;
  std::uint64_t seed = 0;
  unsigned e_max = 0;
  std::optional<std::size_t> d;
  std::optional<std::int64_t> e;
  /// "hilbert_series", "parameter_colength" or "unknown".
  std::string multiplicity_source = "unknown";
  std::size_t embedding_dim = 0;
  std::vector<std::string> params;
  /// "declared", "random" or "none".
  std::string params_origin = "none";
  ReductionStatus reduction = ReductionStatus::kMissing;
  std::uint64_t params_colength = 0;
  std::optional<ArtinianProfile> profile;
  std::optional<HKEstimate> hk;
  Rational tolerance = 0;
  /// One entry per id of reported_bound_ids(), in that order.
  std::vector<BoundReport> bounds;
  std::optional<BoundReport> associativity;
  std::vector<Certificate> certificates;
  Certificate regularity_class;
  /// Every relaxation used by some check, in first-use order.
  std::vector<std::string> substitutions;
  std::vector<std::string> errors;
  std::vector<StageTiming> timings;

  const BoundReport& bound(BoundId id) const;
  /// Some unconditional check with met hypotheses failed.
  bool any_violation() const;
};

/// Runs every stage; failures become inconclusive entries and `errors`.
RunReport run_pipeline(const RingPresentation& pres, const PipelineConfig& config);

/// Runs the presentations concurrently; the result order follows the input.
std::vector<RunReport> run_many(const std::vector<RingPresentation>& rings, const PipelineConfig& config);

}  // namespace hk
