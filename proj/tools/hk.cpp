// Command-line front end: hk run | corpus | radical | tower.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hk/corpus.hpp"
#include "hk/radical.hpp"
#include "hk/report.hpp"

namespace {

using hk::Rational;

struct Common {
  unsigned emax = 0;
  std::string tol;
  std::uint64_t seed = 0;
  std::size_t gb_budget = 0;
  std::string json_path;
  bool json_requested = false;
  std::string csv_path;
  bool timings = false;
  std::vector<std::string> bound_filter;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--emax", c.emax, "largest Frobenius exponent (default depends on p)");
  app->add_option("--tol", c.tol, "tolerance override, e.g. 1/100 or 0.01");
  app->add_option("--seed", c.seed, "seed for random parameter search");
  app->add_option("--gb-budget", c.gb_budget, "maximum S-pairs per Groebner basis (0 = unlimited)");
  app->add_option("--json", c.json_path, "write JSON here ('-' or no value: stdout)")->expected(0, 1);
  app->add_option("--csv", c.csv_path, "write CSV here");
  app->add_flag("--timings", c.timings, "include wall-clock timings in the report");
  app->add_option("--bound", c.bound_filter, "only print these bound ids");
}

Rational parse_rational(const std::string& s) {
  try {
    if (auto slash = s.find('/'); slash != std::string::npos)
      return Rational(hk::BigInt(s.substr(0, slash)), hk::BigInt(s.substr(slash + 1)));
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      return Rational(hk::BigInt(digits.empty() ? "0" : digits), hk::ipow(10, s.size() - dot - 1));
    }
    return Rational(hk::BigInt(s));
  } catch (const std::exception&) {
    throw hk::Error("invalid rational '" + s + "'");
  }
}

hk::PipelineConfig make_config(const Common& c) {
  hk::PipelineConfig cfg;
  if (c.emax) cfg.e_max = c.emax;
  if (!c.tol.empty()) cfg.tolerance = parse_rational(c.tol);
  cfg.seed = c.seed;
  cfg.budget.max_pairs = c.gb_budget;
  cfg.timings = c.timings;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hk::Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw hk::Error("cannot write '" + path + "'");
  out << content;
}

bool json_to_stdout(const Common& c) { return c.json_requested && (c.json_path.empty() || c.json_path == "-"); }

void filter_bounds(std::vector<hk::RunReport>& reports, const std::vector<std::string>& ids) {
  if (ids.empty()) return;
  for (const auto& id : ids)
    if (!hk::parse_bound_id(id)) throw hk::Error("unknown bound id '" + id + "'");
  for (auto& r : reports)
    std::erase_if(r.bounds, [&](const hk::BoundReport& b) {
      return std::find(ids.begin(), ids.end(), hk::bound_id_name(b.id)) == ids.end();
    });
}

int emit(std::vector<hk::RunReport> reports, const std::vector<hk::CorpusSlot>& skipped, const Common& c,
         bool corpus_mode) {
  bool violation = false;
  for (const auto& r : reports) violation = violation || r.any_violation();
  if (c.json_requested) {
    nlohmann::json j = corpus_mode ? hk::corpus_json(reports, skipped, c.seed) : hk::to_json(reports.front());
    write_output(c.json_path, j.dump(2) + "\n");
  }
  if (!c.csv_path.empty()) write_output(c.csv_path, hk::to_csv(reports));
  if (!json_to_stdout(c)) {
    filter_bounds(reports, c.bound_filter);
    for (const auto& r : reports) std::cout << hk::to_text(r) << "\n";
    for (const auto& s : skipped) std::cout << s.name << ": skipped (" << s.rejection << ")\n";
  }
  return violation ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz multiplicity estimates and lower-bound checks"};
  app.require_subcommand(1);

  Common run_opts;
  std::string run_file;
  auto* run = app.add_subcommand("run", "run every check on a ring presentation file");
  run->add_option("file", run_file, "hkring v1 presentation")->required();
  add_common(run, run_opts);

  Common corpus_opts;
  std::string only;
  std::uint32_t corpus_char = 0;
  auto* corpus = app.add_subcommand("corpus", "run every check on the built-in rings");
  corpus->add_option("--only", only, "run a single entry");
  corpus->add_option("--char", corpus_char, "override the characteristic");
  add_common(corpus, corpus_opts);

  Common radical_opts;
  std::string radical_file, z_text;
  unsigned radical_n = 2;
  auto* radical = app.add_subcommand("radical", "transfer checks for S = R[v]/(v^n - z)");
  radical->add_option("file", radical_file, "hkring v1 presentation")->required();
  radical->add_option("--z", z_text, "the element z")->required();
  radical->add_option("--n", radical_n, "root degree")->required();
  add_common(radical, radical_opts);

  Common tower_opts;
  std::string tower_file, gens_text;
  unsigned tower_n = 2;
  std::size_t depth = 0;
  auto* tower = app.add_subcommand("tower", "iterated radical extensions R_i = R_(i-1)[y_i^(1/n)]");
  tower->add_option("file", tower_file, "hkring v1 presentation")->required();
  tower->add_option("--gens", gens_text, "comma-separated generators y_1, ..., y_k")->required();
  tower->add_option("--n", tower_n, "root degree")->required();
  tower->add_option("--depth", depth, "number of steps")->required();
  add_common(tower, tower_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      run_opts.json_requested = run->count("--json") > 0;
      hk::RingPresentation pres = hk::parse_presentation(read_file(run_file));
      if (pres.name.empty()) pres.name = run_file;
      return emit({hk::run_pipeline(pres, make_config(run_opts))}, {}, run_opts, false);
    }
    if (*corpus) {
      corpus_opts.json_requested = corpus->count("--json") > 0;
      std::optional<std::uint32_t> p;
      if (corpus_char) p = corpus_char;
      std::vector<hk::RingPresentation> rings;
      std::vector<hk::CorpusSlot> skipped;
      if (!only.empty()) {
        rings.push_back(hk::corpus_entry(only, p));
      } else {
        for (auto& slot : hk::corpus_slots(p)) {
          if (slot.ring)
            rings.push_back(*slot.ring);
          else
            skipped.push_back(slot);
        }
      }
      hk::PipelineConfig cfg = make_config(corpus_opts);
      return emit(hk::run_many(rings, cfg), skipped, corpus_opts, true);
    }
    if (*radical) {
      radical_opts.json_requested = radical->count("--json") > 0;
      hk::RingPresentation pres = hk::parse_presentation(read_file(radical_file));
      hk::PipelineConfig cfg = make_config(radical_opts);
      const unsigned emax = cfg.e_max.value_or(hk::default_emax(pres.p));
      hk::QuotientRing R(pres.defining_ideal(pres.make_ring()), cfg.budget);
      hk::Polynomial z = hk::parse_polynomial(z_text, R.ring());
      hk::RadicalExtension ext = hk::build_radical_extension(R, z, radical_n, pres.flags.normal);
      std::optional<std::size_t> d = pres.dimension;
      std::vector<hk::BoundReport> reports{hk::check_scaling_4_1(ext, R.maximal_ideal(), emax, d)};
      if (pres.params && (pres.flags.cm || pres.flags.gorenstein)) {
        hk::Ideal params = R.ideal(pres.parse_list(*pres.params, R.ring()));
        hk::HKEstimate base = hk::hk_estimate(R, R.maximal_ideal(), emax, d);
        reports.push_back(hk::check_radical_bound_4_4(ext, params, base, emax, d));
      }
      nlohmann::json j = {{"schema", hk::kReportSchema},
                          {"base", pres.name},
                          {"extension", ext.extended.defining_ideal().to_string()},
                          {"b_assumed", ext.b_assumed},
                          {"b_exact", ext.b_exact},
                          {"graded", ext.graded},
                          {"hypotheses", ext.hypotheses},
                          {"bounds", nlohmann::json::array()}};
      bool violation = false;
      for (const auto& r : reports) {
        j["bounds"].push_back(hk::to_json(r));
        violation = violation || r.violated();
      }
      if (radical_opts.json_requested) write_output(radical_opts.json_path, j.dump(2) + "\n");
      if (!json_to_stdout(radical_opts)) {
        std::cout << "S = " << j["extension"].get<std::string>() << "\n";
        for (const auto& r : reports)
          std::cout << "  " << hk::bound_id_name(r.id) << ": " << hk::status_name(r.status) << "  "
                    << (r.lhs ? hk::to_string(*r.lhs) : "-") << " vs " << (r.rhs ? hk::to_string(*r.rhs) : "-")
                    << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
      }
      return violation ? 2 : 0;
    }
    if (*tower) {
      tower_opts.json_requested = tower->count("--json") > 0;
      hk::RingPresentation pres = hk::parse_presentation(read_file(tower_file));
      hk::PipelineConfig cfg = make_config(tower_opts);
      const unsigned emax = cfg.e_max.value_or(hk::default_emax(pres.p));
      hk::QuotientRing R(pres.defining_ideal(pres.make_ring()), cfg.budget);
      std::vector<hk::Polynomial> gens;
      std::stringstream ss(gens_text);
      for (std::string piece; std::getline(ss, piece, ',');) gens.push_back(hk::parse_polynomial(piece, R.ring()));
      hk::TowerResult res = hk::run_tower(R, gens, tower_n, depth, emax, pres.flags.normal, pres.dimension);
      nlohmann::json steps = nlohmann::json::array();
      bool violation = false;
      for (const auto& s : res.steps) {
        steps.push_back({{"index", s.index},
                         {"ring", s.ring},
                         {"hk", hk::to_json(s.hk)},
                         {"multiplicity_constant", s.multiplicity_constant},
                         {"report", hk::to_json(s.report)}});
        violation = violation || s.report.violated() || !s.multiplicity_constant;
      }
      nlohmann::json j = {{"schema", hk::kReportSchema},
                          {"base", pres.name},
                          {"e", res.e},
                          {"socle_element", res.socle_element},
                          {"socle_order", res.socle_order},
                          {"subset_failures", res.subset_failures},
                          {"truncated", res.truncated},
                          {"steps", steps}};
      if (tower_opts.json_requested) write_output(tower_opts.json_path, j.dump(2) + "\n");
      if (!json_to_stdout(tower_opts)) {
        std::cout << "e = " << res.e << "  socle element " << res.socle_element << "  r = " << res.socle_order
                  << "\n";
        for (const auto& f : res.subset_failures) std::cout << "  not a minimal reduction: " << f << "\n";
        for (const auto& s : res.steps)
          std::cout << "  step " << s.index << ": e_HK ~ " << hk::to_double(s.hk.estimate) << "  "
                    << hk::status_name(s.report.status) << (s.multiplicity_constant ? "" : "  e changed") << "\n";
        if (!res.truncated.empty()) std::cout << "  " << res.truncated << "\n";
      }
      return violation ? 2 : 0;
    }
  } catch (const hk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
