#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/presentation.hpp"

namespace hk {

/// Names of the built-in rings, in report order.
const std::vector<std::string>& corpus_names();

/// A built-in ring, optionally over another characteristic. Throws for
/// unknown names and for characteristics the entry does not support.
RingPresentation corpus_entry(std::string_view name, std::optional<std::uint32_t> p = std::nullopt);

struct CorpusSlot {
  std::string name;
  std::optional<RingPresentation> ring;
  /// Why the entry is unavailable for the requested characteristic.
  std::string rejection;
};

/// Every entry, with rejections instead of exceptions.
std::vector<CorpusSlot> corpus_slots(std::optional<std::uint32_t> p = std::nullopt);

/// The entries available at their default characteristics.
std::vector<RingPresentation> corpus();

}  // namespace hk
