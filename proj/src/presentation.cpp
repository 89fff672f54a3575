#include "hk/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hk {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// A piece of a line and its 0-based column.
struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> words(std::string_view s, std::size_t from) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start});
  }
  return out;
}

// Comma-separated fields, whitespace-trimmed.
std::vector<Token> fields(std::string_view s, std::size_t from) {
  std::vector<Token> out;
  std::size_t start = from;
  for (std::size_t i = from; i <= s.size(); ++i) {
    if (i != s.size() && s[i] != ',') continue;
    std::size_t a = start, b = i;
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    out.push_back({s.substr(a, b - a), a});
    start = i + 1;
  }
  return out;
}

std::uint64_t parse_unsigned(const Token& t, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (t.text.empty() || ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(std::string("expected ") + what + ", found '" + std::string(t.text) + "'", line, t.column + 1);
  return v;
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct SourceLine {
  std::size_t number;
  std::string text;
  Token keyword;
};

}  // namespace

RingPtr RingPresentation::make_ring() const {
  return hk::make_ring(p, variables, MonomialOrder::grevlex(), weights);
}

std::vector<Polynomial> RingPresentation::parse_list(const std::vector<std::string>& polys,
                                                     const RingPtr& ring) const {
  std::vector<Polynomial> out;
  for (const auto& s : polys) out.push_back(parse_polynomial(s, ring));
  return out;
}

Ideal RingPresentation::defining_ideal(const RingPtr& ring) const { return Ideal(ring, parse_list(relations, ring)); }

std::string RingPresentation::to_text() const {
  std::ostringstream out;
  out << "hkring v1\n";
  if (!name.empty()) out << "name " << name << "\n";
  out << "char " << p << "\n";
  out << "vars";
  for (std::size_t i = 0; i < variables.size(); ++i) {
    out << " " << variables[i];
    if (weights[i] != 1) out << ":" << weights[i];
  }
  out << "\n";
  for (const auto& r : relations) out << "rel " << r << "\n";
  std::string flag_line;
  if (flags.homogeneous) flag_line += " homogeneous";
  if (flags.cm) flag_line += " cm_asserted";
  if (flags.gorenstein) flag_line += " gorenstein_asserted";
  if (flags.unmixed) flag_line += " unmixed_asserted";
  if (flags.normal) flag_line += " normal_asserted";
  if (!flag_line.empty()) out << "flags" << flag_line << "\n";
  if (params) {
    out << "params";
    for (std::size_t i = 0; i < params->size(); ++i) out << (i ? ", " : " ") << (*params)[i];
    out << "\n";
  }
  for (const auto& c : components) {
    out << "component " << c.length << ":";
    for (std::size_t i = 0; i < c.generators.size(); ++i) out << (i ? ", " : " ") << c.generators[i];
    out << "\n";
  }
  if (dimension) out << "dim " << *dimension << "\n";
  return out.str();
}

RingPresentation parse_presentation(std::string_view text) {
  std::vector<SourceLine> lines;
  {
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string raw(text.substr(pos, end - pos));
      ++number;
      pos = end + 1;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      while (!raw.empty() && (is_space(raw.back()))) raw.pop_back();
      auto w = words(raw, 0);
      if (w.empty()) continue;
      Token kw = w.front();
      lines.push_back({number, std::move(raw), {}});
      lines.back().keyword = {std::string_view(lines.back().text).substr(kw.column, kw.text.size()), kw.column};
      if (end == text.size()) break;
    }
  }
  // Token views must point into the stored strings, which no longer move.
  for (auto& l : lines) l.keyword.text = std::string_view(l.text).substr(l.keyword.column, l.keyword.text.size());

  if (lines.empty() || lines.front().text.substr(lines.front().keyword.column) != "hkring v1")
    throw ParseError("missing header 'hkring v1'", lines.empty() ? 1 : lines.front().number, 1);

  RingPresentation pres;
  bool have_char = false, have_vars = false;
  auto rest_of = [](const SourceLine& l) { return l.keyword.column + l.keyword.text.size(); };

  // First pass: everything that does not need the polynomial ring.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const SourceLine& l = lines[i];
    const std::string_view kw = l.keyword.text;
    auto args = words(l.text, rest_of(l));
    if (kw == "name") {
      if (args.size() != 1) throw ParseError("'name' takes one word", l.number, l.keyword.column + 1);
      pres.name = std::string(args[0].text);
    } else if (kw == "char") {
      if (args.size() != 1) throw ParseError("'char' takes one integer", l.number, l.keyword.column + 1);
      std::uint64_t p = parse_unsigned(args[0], l.number, "an integer");
      if (!is_prime(p) || p > 65521)
        throw ParseError("characteristic must be prime (got " + std::string(args[0].text) + ")", l.number,
                         args[0].column + 1);
      pres.p = static_cast<std::uint32_t>(p);
      have_char = true;
    } else if (kw == "vars") {
      if (args.empty()) throw ParseError("'vars' needs at least one variable", l.number, l.keyword.column + 1);
      for (const auto& a : args) {
        std::string_view name = a.text;
        std::uint32_t weight = 1;
        if (auto colon = name.find(':'); colon != std::string_view::npos) {
          Token w{name.substr(colon + 1), a.column + colon + 1};
          std::uint64_t wv = parse_unsigned(w, l.number, "a positive weight");
          if (wv == 0 || wv > 1000) throw ParseError("weights must lie in [1, 1000]", l.number, w.column + 1);
          weight = static_cast<std::uint32_t>(wv);
          name = name.substr(0, colon);
        }
        if (!valid_identifier(name))
          throw ParseError("invalid variable name '" + std::string(name) + "'", l.number, a.column + 1);
        if (std::find(pres.variables.begin(), pres.variables.end(), name) != pres.variables.end())
          throw ParseError("duplicate variable '" + std::string(name) + "'", l.number, a.column + 1);
        pres.variables.emplace_back(name);
        pres.weights.push_back(weight);
      }
      if (pres.variables.size() > Monomial::kMaxVars)
        throw ParseError("at most " + std::to_string(Monomial::kMaxVars) + " variables are supported", l.number,
                         l.keyword.column + 1);
      have_vars = true;
    } else if (kw == "flags") {
      for (const auto& a : args) {
        if (a.text == "homogeneous")
          pres.flags.homogeneous = true;
        else if (a.text == "cm_asserted")
          pres.flags.cm = true;
        else if (a.text == "gorenstein_asserted")
          pres.flags.gorenstein = true;
        else if (a.text == "unmixed_asserted")
          pres.flags.unmixed = true;
        else if (a.text == "normal_asserted")
          pres.flags.normal = true;
        else
          throw ParseError("unknown flag '" + std::string(a.text) + "'", l.number, a.column + 1);
      }
    } else if (kw == "dim") {
      if (args.size() != 1) throw ParseError("'dim' takes one integer", l.number, l.keyword.column + 1);
      pres.dimension = parse_unsigned(args[0], l.number, "an integer");
    } else if (kw != "rel" && kw != "params" && kw != "component") {
      throw ParseError("unknown keyword '" + std::string(kw) + "'", l.number, l.keyword.column + 1);
    }
  }
  if (!have_char) throw ParseError("missing 'char' line", lines.back().number, 1);
  if (!have_vars) throw ParseError("missing 'vars' line", lines.back().number, 1);

  RingPtr ring = pres.make_ring();
  auto parse_fields = [&](const SourceLine& l, std::size_t from, bool allow_empty) {
    std::vector<std::string> out;
    auto fs = fields(l.text, from);
    if (fs.size() == 1 && fs[0].text.empty() && allow_empty) return out;
    for (const auto& f : fs) {
      if (f.text.empty()) throw ParseError("empty polynomial", l.number, f.column + 1);
      out.push_back(parse_polynomial(f.text, ring, l.number, f.column).to_string());
    }
    return out;
  };

  // Second pass: polynomial data.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const SourceLine& l = lines[i];
    const std::string_view kw = l.keyword.text;
    if (kw == "rel") {
      for (const auto& f : fields(l.text, rest_of(l))) {
        if (f.text.empty()) throw ParseError("empty relation", l.number, f.column + 1);
        Polynomial rel = parse_polynomial(f.text, ring, l.number, f.column);
        if (rel.is_zero()) continue;
        if (pres.flags.homogeneous && !rel.is_homogeneous())
          throw ParseError("relation is not homogeneous for the declared weights", l.number, f.column + 1);
        pres.relations.push_back(rel.to_string());
      }
    } else if (kw == "params") {
      if (pres.params) throw ParseError("duplicate 'params' line", l.number, l.keyword.column + 1);
      pres.params = parse_fields(l, rest_of(l), false);
    } else if (kw == "component") {
      std::size_t colon = l.text.find(':', rest_of(l));
      if (colon == std::string::npos)
        throw ParseError("expected 'component <length>: <generators>'", l.number, l.keyword.column + 1);
      auto len_words = words(std::string_view(l.text).substr(0, colon), rest_of(l));
      if (len_words.size() != 1) throw ParseError("expected one length before ':'", l.number, colon + 1);
      ComponentSpec c;
      c.length = parse_unsigned(len_words[0], l.number, "a positive length");
      if (c.length == 0) throw ParseError("component length must be positive", l.number, len_words[0].column + 1);
      c.generators = parse_fields(l, colon + 1, true);
      pres.components.push_back(std::move(c));
    }
  }
  return pres;
}

}  // namespace hk
