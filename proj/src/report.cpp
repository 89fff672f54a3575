#include "hk/report.hpp"

#include <sstream>

namespace hk {

using nlohmann::json;

namespace {

json rational(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

json approx(const std::optional<Rational>& r) { return r ? json(to_double(*r)) : json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const HKEstimate& est) {
  json samples = json::array();
  for (const auto& s : est.samples)
    samples.push_back({{"e", s.e},
                       {"q", s.q},
                       {"colength", s.colength},
                       {"normalized", to_string(s.normalized)},
                       {"normalized_approx", to_double(s.normalized)}});
  json j = {{"samples", samples},
            {"estimate", to_string(est.estimate)},
            {"estimate_approx", to_double(est.estimate)},
            {"error_heuristic", to_string(est.error_heuristic)},
            {"d", est.d},
            {"truncated", est.truncated}};
  if (!est.note.empty()) j["note"] = est.note;
  return j;
}

json to_json(const Certificate& c) {
  return {{"kind", std::string(certificate_kind_name(c.kind))}, {"premise", c.premise}, {"citation", c.citation}};
}

json to_json(const BoundReport& r) {
  json details = json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  json j = {{"bound_id", std::string(bound_id_name(r.id))},
            {"statement", r.statement},
            {"lhs", rational(r.lhs)},
            {"rhs", rational(r.rhs)},
            {"lhs_approx", approx(r.lhs)},
            {"rhs_approx", approx(r.rhs)},
            {"status", std::string(status_name(r.status))},
            {"tolerance_used", to_string(r.tolerance)},
            {"conditional", r.conditional},
            {"inequality_satisfied", r.inequality_satisfied},
            {"substitutions", r.substitutions},
            {"hypotheses", r.hypotheses},
            {"details", details},
            {"note", r.note},
            {"citation", r.citation},
            {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)}};
  return j;
}

json to_json(const RunReport& r) {
  const RingPresentation& p = r.presentation;
  json flags = {{"homogeneous", p.flags.homogeneous},
                {"cm_asserted", p.flags.cm},
                {"gorenstein_asserted", p.flags.gorenstein},
                {"unmixed_asserted", p.flags.unmixed},
                {"normal_asserted", p.flags.normal}};
  json vars = json::array();
  for (std::size_t i = 0; i < p.variables.size(); ++i)
    vars.push_back({{"name", p.variables[i]}, {"weight", p.weights[i]}});
  json bounds = json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  json profile = nullptr;
  if (r.profile)
    profile = {{"colength", r.profile->colength},
               {"hilbert_function", r.profile->hilbert_function},
               {"top_degree", r.profile->top_degree},
               {"socle_dim", r.profile->socle_dim}};
  json j = {{"schema", kReportSchema},
            {"ring", p.name},
            {"characteristic", p.p},
            {"variables", vars},
            {"relations", p.relations},
            {"flags", flags},
            {"seed", r.seed},
            {"e_max", r.e_max},
            {"dimension", r.d ? json(*r.d) : json(nullptr)},
            {"multiplicity", r.e ? json(*r.e) : json(nullptr)},
            {"multiplicity_source", r.multiplicity_source},
            {"embedding_dimension", r.embedding_dim},
            {"parameters",
             {{"generators", r.params},
              {"origin", r.params_origin},
              {"reduction", std::string(reduction_status_name(r.reduction))},
              {"colength", r.params_colength}}},
            {"artinian_profile", profile},
            {"hk", r.hk ? to_json(*r.hk) : json(nullptr)},
            {"tolerance", to_string(r.tolerance)},
            {"bounds", bounds},
            {"associativity", r.associativity ? to_json(*r.associativity) : json(nullptr)},
            {"certificates", certs},
            {"regularity_class", to_json(r.regularity_class)},
            {"substitutions", r.substitutions},
            {"errors", r.errors},
            {"violation", r.any_violation()}};
  if (!r.timings.empty()) {
    json t = json::object();
    for (const auto& s : r.timings) t[s.stage] = s.milliseconds;
    j["timings_ms"] = t;
  }
  return j;
}

json corpus_json(const std::vector<RunReport>& reports, const std::vector<CorpusSlot>& skipped, std::uint64_t seed) {
  json runs = json::array();
  for (const auto& r : reports) runs.push_back(to_json(r));
  json skip = json::array();
  for (const auto& s : skipped) skip.push_back({{"name", s.name}, {"reason", s.rejection}});
  return {{"schema", kReportSchema}, {"seed", seed}, {"reports", runs}, {"skipped", skip}};
}

std::string to_csv(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  out << "ring,bound_id,status,lhs,rhs,tolerance,conditional,certificate\n";
  for (const auto& r : reports) {
    auto row = [&](const BoundReport& b) {
      out << csv_field(r.presentation.name) << "," << bound_id_name(b.id) << "," << status_name(b.status) << ","
          << (b.lhs ? to_string(*b.lhs) : "") << "," << (b.rhs ? to_string(*b.rhs) : "") << ","
          << to_string(b.tolerance) << "," << (b.conditional ? "yes" : "no") << ","
          << (b.certificate ? certificate_kind_name(b.certificate->kind) : "") << "\n";
    };
    for (const auto& b : r.bounds) row(b);
    if (r.associativity) row(*r.associativity);
  }
  return out.str();
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << r.presentation.name << " (p = " << r.presentation.p << ")";
  if (r.d) out << "  d = " << *r.d;
  if (r.e) out << "  e = " << *r.e;
  out << "\n";
  if (r.hk) {
    for (const auto& s : r.hk->samples)
      out << "  q = " << s.q << "  length " << s.colength << "  normalized " << to_string(s.normalized) << " ~ "
          << to_double(s.normalized) << "\n";
    out << "  e_HK ~ " << to_double(r.hk->estimate) << " +- " << to_double(r.tolerance)
        << (r.hk->truncated ? " (truncated)" : "") << "\n";
  }
  auto line = [&](const BoundReport& b) {
    out << "  " << bound_id_name(b.id) << ": " << status_name(b.status);
    if (b.lhs && b.rhs) out << "  " << to_double(*b.lhs) << " vs " << to_double(*b.rhs);
    if (b.certificate) out << "  certificate " << certificate_kind_name(b.certificate->kind);
    if (!b.note.empty()) out << "  (" << b.note << ")";
    out << "\n";
  };
  for (const auto& b : r.bounds) line(b);
  if (r.associativity) line(*r.associativity);
  out << "  regularity class: " << certificate_kind_name(r.regularity_class.kind);
  if (!r.regularity_class.premise.empty())
    out << " (" << r.regularity_class.citation << ": " << r.regularity_class.premise << ")";
  out << "\n";
  for (const auto& e : r.errors) out << "  error: " << e << "\n";
  return out.str();
}

}  // namespace hk
