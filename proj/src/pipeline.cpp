#include "hk/pipeline.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>

#include "hk/radical.hpp"

namespace hk {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    out_.push_back({stage, std::chrono::duration<double, std::milli>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point start_;
};

bool is_sop(const QuotientRing& R, const Ideal& params, std::size_t d, std::uint64_t& len) {
  if (params.generators().size() != d) return false;
  try {
    len = colength(R, params);
    return true;
  } catch (const InfiniteColength&) {
    return false;
  }
}

std::vector<std::string> texts(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

}  // namespace

const BoundReport& RunReport::bound(BoundId id) const {
  for (const auto& b : bounds)
    if (b.id == id) return b;
  throw Error("bound not present in report: " + std::string(bound_id_name(id)));
}

bool RunReport::any_violation() const {
  for (const auto& b : bounds)
    if (b.violated()) return true;
  return associativity && associativity->violated();
}

RunReport run_pipeline(const RingPresentation& pres, const PipelineConfig& config) {
  RunReport out;
  out.presentation = pres;
  out.seed = config.seed;
  out.e_max = config.e_max.value_or(default_emax(pres.p));
  Stopwatch clock(out.timings);
  std::map<BoundId, BoundReport> done;

  auto fail_all = [&](const std::string& why) {
    for (BoundId id : reported_bound_ids())
      if (!done.count(id)) done.emplace(id, inconclusive(id, "", why));
  };
  auto guarded = [&](BoundId id, const std::function<BoundReport()>& fn) {
    try {
      done.emplace(id, fn());
    } catch (const Error& ex) {
      done.emplace(id, inconclusive(id, "", ex.what()));
      out.errors.push_back(std::string(bound_id_name(id)) + ": " + ex.what());
    }
  };

  RingInvariants in;
  in.flags = pres.flags;
  in.flags.cm = pres.flags.cm || pres.flags.gorenstein;
  std::optional<QuotientRing> ring;
  try {
    RingPtr poly = pres.make_ring();
    ring.emplace(pres.defining_ideal(poly), config.budget);
    const QuotientRing& R = *ring;
    in.embedding_dim = out.embedding_dim = embedding_dimension(R);
    clock.lap("setup");

    // Dimension and multiplicity.
    if (R.standard_graded()) {
      DimensionMultiplicity de = dimension_and_multiplicity(R);
      in.d = de.dimension;
      in.e = de.multiplicity;
      in.e_known = true;
      out.multiplicity_source = "hilbert_series";
    } else if (R.weighted_homogeneous()) {
      in.d = krull_dimension(R);
    } else if (pres.dimension) {
      in.d = *pres.dimension;
    } else {
      throw Error("dimension unknown: add a 'dim' line for a non-homogeneous presentation");
    }
    if (pres.dimension && *pres.dimension != in.d)
      throw Error("declared dim " + std::to_string(*pres.dimension) + " differs from computed " +
                  std::to_string(in.d));
    out.d = in.d;

    // Parameters.
    if (pres.params) {
      Ideal params = R.ideal(pres.parse_list(*pres.params, R.ring()));
      out.params_origin = "declared";
      out.params = texts(params.generators());
      in.params = params;
      in.params_sop = is_sop(R, params, in.d, in.params_colength);
    } else if (R.standard_graded() && in.d > 0) {
      std::mt19937_64 rng(config.seed);
      for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Polynomial> forms;
        for (std::size_t k = 0; k < in.d; ++k) {
          Polynomial f(R.ring());
          for (std::size_t v = 0; v < R.nvars(); ++v)
            f = f + Polynomial::variable(R.ring(), v).scale(R.ring()->field().reduce(
                        static_cast<std::int64_t>(rng() % pres.p)));
          forms.push_back(f);
        }
        Ideal candidate = R.ideal(forms);
        std::uint64_t len = 0;
        if (!is_sop(R, candidate, in.d, len)) continue;
        if (!in.params_sop || len == static_cast<std::uint64_t>(in.e)) {
          in.params = candidate;
          in.params_sop = true;
          in.params_colength = len;
          out.params_origin = "random";
          out.params = texts(candidate.generators());
        }
        if (len == static_cast<std::uint64_t>(in.e)) break;
      }
    } else if (in.d == 0) {
      in.params = Ideal::zero(R.ring());
      in.params_sop = true;
      in.params_colength = colength(R, *in.params);
      out.params_origin = "declared";
    }
    if (in.params_sop) {
      if (in.e_known) {
        in.reduction = in.params_colength == static_cast<std::uint64_t>(in.e) ? ReductionStatus::kCertified
                                                                               : ReductionStatus::kFailed;
      } else {
        in.reduction = ReductionStatus::kAsserted;
        in.e = static_cast<std::int64_t>(in.params_colength);
        in.e_known = true;
        out.multiplicity_source = "parameter_colength";
        out.substitutions.push_back("e(R) = λ(R/params) asserted, not certified by a Hilbert series");
      }
      in.profile = artinian_profile(R, *in.params);
    } else if (in.params) {
      in.reduction = ReductionStatus::kFailed;
    }
    out.reduction = in.reduction;
    out.params_colength = in.params_colength;
    out.profile = in.profile;
    if (in.e_known) out.e = in.e;
    clock.lap("invariants");

    in.hk = hk_estimate(R, R.maximal_ideal(), out.e_max, in.d);
    in.tolerance = config.tolerance.value_or(in.hk.tolerance());
    out.hk = in.hk;
    out.tolerance = in.tolerance;
    if (in.hk.truncated) out.errors.push_back(in.hk.note);
    clock.lap("hk_estimate");
  } catch (const Error& ex) {
    out.errors.push_back(ex.what());
    fail_all(ex.what());
  }

  if (out.hk) {
    const QuotientRing& R = *ring;
    guarded(BoundId::kSandwich, [&] { return check_sandwich(in); });
    guarded(BoundId::kDuality, [&] { return check_duality_bound(R, in, R.maximal_ideal()); });
    guarded(BoundId::kType, [&] { return check_type_bound(in); });
    guarded(BoundId::kMinimalMultiplicity, [&] { return check_minimal_multiplicity(in); });
    guarded(BoundId::kSmallEhk, [&] { return check_small_ehk_cm(in); });
    guarded(BoundId::kSmallEhkUnmixed, [&] { return check_small_ehk_unmixed(in); });
    guarded(BoundId::kEmbeddingDimension, [&] { return check_embdim_bound(in); });
    guarded(BoundId::kGraded, [&] { return check_graded_bounds(in); });
    guarded(BoundId::kGorensteinNonFRegular, [&] { return check_gorenstein_non_fregular(in); });
    guarded(BoundId::kDimension, [&] { return check_dimension_bound(in); });
    clock.lap("bounds");

    const unsigned n = config.radical_n;
    guarded(BoundId::kScaling, [&] {
      for (std::size_t i = 0; i < R.nvars(); ++i) {
        Polynomial z = Polynomial::variable(R.ring(), i);
        if (!is_minimal_generator(R, z)) continue;
        RadicalExtension ext = build_radical_extension(R, z, n, pres.flags.normal);
        BoundReport r = check_scaling_4_1(ext, R.maximal_ideal(), out.e_max, in.d);
        r.details.emplace_back("z", z.to_string());
        return r;
      }
      return inconclusive(BoundId::kScaling, "", "no variable is a minimal generator of m");
    });
    guarded(BoundId::kRadical, [&] {
      const std::string statement = "e_HK(R) >= (b(n-1)e + n e_HK(S)) / (b(a(n-1)+1))";
      if (!in.flags.cm) return inconclusive(BoundId::kRadical, statement, "hypothesis not met: CM not asserted");
      if (!in.params_sop) return inconclusive(BoundId::kRadical, statement, "no system of parameters");
      for (std::size_t i = 0; i < R.nvars(); ++i) {
        Polynomial z = Polynomial::variable(R.ring(), i);
        if (!is_minimal_generator(R, z) || R.contains(*in.params, z)) continue;
        RadicalExtension ext = build_radical_extension(R, z, n, pres.flags.normal);
        BoundReport r = check_radical_bound_4_4(ext, *in.params, in.hk, out.e_max, in.d);
        r.details.emplace_back("z", z.to_string());
        return r;
      }
      return inconclusive(BoundId::kRadical, statement, "every minimal generator lies in the parameter ideal");
    });
    guarded(BoundId::kNested, [&] {
      std::vector<Polynomial> rest;
      for (std::size_t i = 0; i + 1 < R.nvars(); ++i) rest.push_back(Polynomial::variable(R.ring(), i));
      Polynomial v = Polynomial::variable(R.ring(), R.nvars() - 1);
      std::vector<std::uint64_t> qs{1};
      for (unsigned e = 1; e <= std::min(2u, out.e_max); ++e) qs.push_back(qs.back() * pres.p);
      BoundReport r = check_nested_monotonicity_4_8(R, R.ideal(rest), v, config.nested_n_max, qs);
      r.details.emplace_back("v", v.to_string());
      return r;
    });
    clock.lap("radical");

    if (!pres.components.empty()) {
      try {
        std::vector<Component> comps;
        for (const auto& c : pres.components)
          comps.push_back({R.ideal(pres.parse_list(c.generators, R.ring())), c.length});
        out.associativity = associativity_check(R, comps, out.e_max, pres.flags.unmixed, in.d);
      } catch (const Error& ex) {
        out.errors.push_back(std::string("associativity: ") + ex.what());
      }
      clock.lap("associativity");
    }
    out.regularity_class = deduce_regularity_class(in);
  }

  fail_all("not run");
  for (BoundId id : reported_bound_ids()) {
    BoundReport& r = done.at(id);
    if (r.statement.empty()) r.statement = std::string(bound_id_name(id));
    for (const auto& s : r.substitutions)
      if (std::find(out.substitutions.begin(), out.substitutions.end(), s) == out.substitutions.end())
        out.substitutions.push_back(s);
    if (r.certificate) out.certificates.push_back(*r.certificate);
    out.bounds.push_back(std::move(r));
  }
  if (!config.timings) out.timings.clear();
  return out;
}

std::vector<RunReport> run_many(const std::vector<RingPresentation>& rings, const PipelineConfig& config) {
  std::vector<std::future<RunReport>> jobs;
  for (const auto& r : rings)
    jobs.push_back(std::async(std::launch::async, [&r, &config] { return run_pipeline(r, config); }));
  std::vector<RunReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace hk
