#pragma once

#include <string>
#include <vector>

#include "hk/corpus.hpp"
#include "hk/pipeline.hpp"
#include "json.hpp"

namespace hk {

inline constexpr const char* kReportSchema = "hk-report/1";

nlohmann::json to_json(const HKEstimate& est);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const RunReport& r);

/// {"schema", "seed", "reports": [...], "skipped": [{"name", "reason"}]}.
nlohmann::json corpus_json(const std::vector<RunReport>& reports, const std::vector<CorpusSlot>& skipped,
                           std::uint64_t seed);

/// One row per bound: ring,bound_id,status,lhs,rhs,tolerance,conditional,certificate.
std::string to_csv(const std::vector<RunReport>& reports);

/// Short human-readable summary.
std::string to_text(const RunReport& r);

}  // namespace hk
