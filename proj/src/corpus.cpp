#include "hk/corpus.hpp"

#include <map>

namespace hk {

namespace {

struct Builtin {
  std::uint32_t default_p;
  bool odd_only;
  const char* body;
};

const std::map<std::string, Builtin, std::less<>>& builtins() {
  static const std::map<std::string, Builtin, std::less<>> table = {
      {"regular2",
       {5, false,
        "vars x y\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted normal_asserted\n"
        "params x, y\n"
        "component 1:\n"}},
      {"two_lines",
       {5, false,
        "vars x y\n"
        "rel x*y\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted\n"
        "params x+y\n"
        "component 1: x\n"
        "component 1: y\n"}},
      {"double_line",
       {5, false,
        "vars x y\n"
        "rel y^2\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted\n"
        "params x\n"
        "component 2: y\n"}},
      {"cusp",
       {5, false,
        "vars x:2 y:3\n"
        "rel x^3 - y^2\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted\n"
        "params x\n"
        "component 1: x^3 - y^2\n"}},
      {"quadric_A1",
       {5, false,
        "vars x y z\n"
        "rel x*y - z^2\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted normal_asserted\n"
        "params x+y, z\n"
        "component 1: x*y - z^2\n"}},
      {"quadric_d3",
       {3, true,
        "vars x0 x1 x2 x3\n"
        "rel x0^2 + x1^2 + x2^2 + x3^2\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted normal_asserted\n"
        "params x0, x1, x2\n"
        "component 1: x0^2 + x1^2 + x2^2 + x3^2\n"}},
      {"A2_surface",
       {5, false,
        "vars x:3 y:3 z:2\n"
        "rel x*y - z^3\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted normal_asserted\n"
        "params x+y, z\n"
        "component 1: x*y - z^3\n"}},
      {"A3_surface",
       {5, false,
        "vars x:2 y:2 z\n"
        "rel x*y - z^4\n"
        "flags homogeneous cm_asserted gorenstein_asserted unmixed_asserted normal_asserted\n"
        "params x+y, z\n"
        "component 1: x*y - z^4\n"}},
      {"twisted_cubic_cone",
       {5, false,
        "vars a b c d\n"
        "rel b^2 - a*c\n"
        "rel c^2 - b*d\n"
        "rel a*d - b*c\n"
        "flags homogeneous cm_asserted unmixed_asserted normal_asserted\n"
        "params a, d\n"
        "component 1: b^2 - a*c, c^2 - b*d, a*d - b*c\n"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"regular2",   "two_lines",  "double_line",
                                                 "cusp",       "quadric_A1", "quadric_d3",
                                                 "A2_surface", "A3_surface", "twisted_cubic_cone"};
  return names;
}

RingPresentation corpus_entry(std::string_view name, std::optional<std::uint32_t> p) {
  auto it = builtins().find(name);
  if (it == builtins().end()) throw Error("unknown corpus entry '" + std::string(name) + "'");
  const Builtin& b = it->second;
  const std::uint32_t chosen = p.value_or(b.default_p);
  if (b.odd_only && chosen == 2) throw Error("p must be odd for the quadric corpus entry");
  std::string text = "hkring v1\nname " + std::string(name) + "\nchar " + std::to_string(chosen) + "\n" + b.body;
  return parse_presentation(text);
}

std::vector<CorpusSlot> corpus_slots(std::optional<std::uint32_t> p) {
  std::vector<CorpusSlot> out;
  for (const auto& name : corpus_names()) {
    CorpusSlot slot{name, std::nullopt, ""};
    try {
      slot.ring = corpus_entry(name, p);
    } catch (const Error& ex) {
      slot.rejection = ex.what();
    }
    out.push_back(std::move(slot));
  }
  return out;
}

std::vector<RingPresentation> corpus() {
  std::vector<RingPresentation> out;
  for (const auto& name : corpus_names()) out.push_back(corpus_entry(name));
  return out;
}

}  // namespace hk
