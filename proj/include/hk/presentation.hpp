#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/bounds.hpp"
#include "hk/polynomial.hpp"
#include "hk/quotient.hpp"

namespace hk {

/// A declared minimal prime and its local length, as polynomial strings.
struct ComponentSpec {
  std::uint64_t length = 1;
  std::vector<std::string> generators;

  bool operator==(const ComponentSpec&) const = default;
};

/// A ring k[vars]/(relations) in the `hkring v1` text format:
///
///     hkring v1
///     name quadric_A1
///     char 5
///     vars x y z            (or x:2 y:3 for weights)
///     rel x*y - z^2
///     flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted normal_asserted
///     params x+y, z
///     component 1: x*y - z^2
///     dim 2
///
/// `#` starts a comment. Polynomials are stored as text in canonical form.
struct RingPresentation {
  std::string name;
  std::uint32_t p = 0;
  std::vector<std::string> variables;
  std::vector<std::uint32_t> weights;
  std::vector<std::string> relations;
  RingFlags flags;
  std::optional<std::vector<std::string>> params;
  std::vector<ComponentSpec> components;
  std::optional<std::size_t> dimension;

  RingPtr make_ring() const;
  Ideal defining_ideal(const RingPtr& ring) const;
  std::vector<Polynomial> parse_list(const std::vector<std::string>& polys, const RingPtr& ring) const;
  /// Serializes back to the text format; parse_presentation(to_text()) == *this.
  std::string to_text() const;

  bool operator==(const RingPresentation&) const = default;
};

RingPresentation parse_presentation(std::string_view text);

}  // namespace hk
