#include "hk/bounds.hpp"

#include <algorithm>

namespace hk {

namespace {

Rational rational_factorial(std::size_t n) { return Rational(factorial(n)); }

std::string flag_text(bool asserted, const char* what) {
  return std::string(what) + (asserted ? " (asserted)" : " (not asserted)");
}

void note_multiplicity_source(BoundReport& r, const RingInvariants& in) {
  if (in.reduction == ReductionStatus::kAsserted)
    r.substitutions.push_back("e(R) = λ(R/params) asserted, not certified by a Hilbert series");
}

std::optional<std::string> missing_multiplicity(const RingInvariants& in) {
  if (!in.e_known) return "multiplicity unknown";
  return std::nullopt;
}

}  // namespace

std::string_view reduction_status_name(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::kCertified:
      return "certified";
    case ReductionStatus::kAsserted:
      return "asserted";
    case ReductionStatus::kFailed:
      return "failed";
    case ReductionStatus::kMissing:
      return "missing";
  }
  return "missing";
}

std::size_t embedding_dimension(const QuotientRing& R) {
  Ideal m = R.maximal_ideal();
  return colength(R, ideal_product(m, m)) - 1;
}

BoundReport check_sandwich(const RingInvariants& in) {
  const std::string statement = "max(1, e/d!) <= e_HK(R) <= e";
  if (auto why = missing_multiplicity(in)) return inconclusive(BoundId::kSandwich, statement, *why);
  BoundReport r = make_report(BoundId::kSandwich, statement);
  note_multiplicity_source(r, in);
  r.hypotheses.push_back(flag_text(in.flags.unmixed, "unmixed"));
  const Rational e(in.e);
  Rational lower = e / rational_factorial(in.d);
  if (in.flags.unmixed && lower < 1) lower = 1;
  if (!in.flags.unmixed) r.note = "lower bound e/d! only: unmixedness not asserted";
  const Rational& est = in.hk.estimate;
  judge_lower_bound(r, est, lower, in.tolerance);
  const bool upper_ok = est <= e + in.tolerance;
  r.details.emplace_back("upper", to_string(e));
  r.inequality_satisfied = r.inequality_satisfied && upper_ok;
  r.status = r.inequality_satisfied ? Status::kHolds : Status::kViolated;
  return r;
}

BoundReport check_duality_bound(const QuotientRing& R, const RingInvariants& in, const Ideal& I) {
  const std::string statement = "e_HK(R) >= e/(f' + a'), a' = λ(R/I), f' = λ(R/((x):I))";
  if (!in.flags.cm) return inconclusive(BoundId::kDuality, statement, "hypothesis not met: CM not asserted");
  if (!in.params_sop) return inconclusive(BoundId::kDuality, statement, "no system of parameters");
  BoundReport r = make_report(BoundId::kDuality, statement);
  r.hypotheses.push_back("CM (asserted)");
  r.substitutions = {"λ*(R/I) -> λ(R/I)", "(x)* : I -> (x) : I"};
  try {
    const Ideal full = ideal_sum(I, *in.params);
    const std::uint64_t a = colength(R, full);
    const std::uint64_t f = colength(R, R.colon(*in.params, full));
    const Rational e(in.params_colength);
    r.details = {{"e", to_string(e)},
                 {"a'", std::to_string(a)},
                 {"f'", std::to_string(f)},
                 {"b'", std::to_string(in.params_colength - f)}};
    judge_lower_bound(r, in.hk.estimate, e / Rational(a + f), in.tolerance);
  } catch (const Error& ex) {
    return inconclusive(BoundId::kDuality, statement, ex.what());
  }
  return r;
}

BoundReport check_type_bound(const RingInvariants& in) {
  const std::string statement = "e_HK(R) >= e/(e - t + 1), t the CM type";
  if (!in.flags.cm) return inconclusive(BoundId::kType, statement, "hypothesis not met: CM not asserted");
  if (!in.params_sop || !in.profile) return inconclusive(BoundId::kType, statement, "no system of parameters");
  BoundReport r = make_report(BoundId::kType, statement);
  r.hypotheses.push_back("CM (asserted)");
  const Rational e(in.params_colength);
  const Rational t(in.profile->socle_dim);
  r.details = {{"e", to_string(e)}, {"t", std::to_string(in.profile->socle_dim)}};
  judge_lower_bound(r, in.hk.estimate, e / (e - t + 1), in.tolerance);
  return r;
}

BoundReport check_minimal_multiplicity(const RingInvariants& in) {
  const std::string statement = "e_HK(R) >= e/2 when e = μ(m) - d + 1";
  if (!in.flags.cm)
    return inconclusive(BoundId::kMinimalMultiplicity, statement, "hypothesis not met: CM not asserted");
  if (auto why = missing_multiplicity(in)) return inconclusive(BoundId::kMinimalMultiplicity, statement, *why);
  const std::int64_t expected = static_cast<std::int64_t>(in.embedding_dim) - static_cast<std::int64_t>(in.d) + 1;
  BoundReport r = make_report(BoundId::kMinimalMultiplicity, statement);
  r.details = {{"e", std::to_string(in.e)},
               {"mu", std::to_string(in.embedding_dim)},
               {"d", std::to_string(in.d)}};
  if (in.e < 2 || in.e != expected) {
    r.status = Status::kInconclusive;
    r.note = "hypothesis not met";
    return r;
  }
  r.hypotheses.push_back("CM (asserted)");
  note_multiplicity_source(r, in);
  judge_lower_bound(r, in.hk.estimate, Rational(in.e, 2), in.tolerance);
  return r;
}

BoundReport check_small_ehk_cm(const RingInvariants& in) {
  const std::string statement = "if R is not Gorenstein and F-regular then e_HK(R) >= e/(e - 1)";
  if (!in.flags.cm) return inconclusive(BoundId::kSmallEhk, statement, "hypothesis not met: CM not asserted");
  if (auto why = missing_multiplicity(in)) return inconclusive(BoundId::kSmallEhk, statement, *why);
  if (in.e < 2) return inconclusive(BoundId::kSmallEhk, statement, "e = 1: bound degenerate");
  BoundReport r = make_report(BoundId::kSmallEhk, statement);
  r.hypotheses.push_back("CM (asserted)");
  note_multiplicity_source(r, in);
  judge_conditional(r, in.hk.estimate, Rational(in.e, in.e - 1), in.tolerance,
                    CertificateKind::kFRegularGorenstein);
  return r;
}

BoundReport check_small_ehk_unmixed(const RingInvariants& in) {
  const std::string statement = "if R is not Gorenstein and F-regular then e_HK(R) > 1 + max(1/d!, 1/e)";
  if (!in.flags.unmixed)
    return inconclusive(BoundId::kSmallEhkUnmixed, statement, "hypothesis not met: unmixed not asserted");
  if (in.d < 2) return inconclusive(BoundId::kSmallEhkUnmixed, statement, "theorem hypothesis d >= 2");
  if (auto why = missing_multiplicity(in)) return inconclusive(BoundId::kSmallEhkUnmixed, statement, *why);
  BoundReport r = make_report(BoundId::kSmallEhkUnmixed, statement);
  r.hypotheses.push_back("formally unmixed (asserted)");
  note_multiplicity_source(r, in);
  const Rational by_dim = Rational(1) / rational_factorial(in.d);
  const Rational by_mult(1, in.e);
  judge_conditional(r, in.hk.estimate, 1 + std::max(by_dim, by_mult), in.tolerance,
                    CertificateKind::kFRegularGorenstein);
  return r;
}

BoundReport check_embdim_bound(const RingInvariants& in) {
  const std::string statement = "if R is not F-regular then e_HK(R) >= e/(e - v + d), v = μ(m)";
  if (!in.flags.gorenstein)
    return inconclusive(BoundId::kEmbeddingDimension, statement, "hypothesis not met: Gorenstein not asserted");
  if (in.d < 2) return inconclusive(BoundId::kEmbeddingDimension, statement, "theorem hypothesis d >= 2");
  if (auto why = missing_multiplicity(in)) return inconclusive(BoundId::kEmbeddingDimension, statement, *why);
  const std::int64_t denom =
      in.e - static_cast<std::int64_t>(in.embedding_dim) + static_cast<std::int64_t>(in.d);
  if (denom <= 0) return inconclusive(BoundId::kEmbeddingDimension, statement, "bound degenerate");
  BoundReport r = make_report(BoundId::kEmbeddingDimension, statement);
  r.hypotheses.push_back("Gorenstein (asserted)");
  note_multiplicity_source(r, in);
  r.details = {{"e", std::to_string(in.e)}, {"v", std::to_string(in.embedding_dim)}, {"d", std::to_string(in.d)}};
  judge_conditional(r, in.hk.estimate, Rational(in.e, denom), in.tolerance, CertificateKind::kFRegularGorenstein);
  return r;
}

BoundReport check_graded_bounds(const RingInvariants& in) {
  const std::string statement = "if R is not F-regular then e_HK(R) >= max_{1<=i<=r} e/(e - k_i) >= (r+1)/r";
  if (!in.flags.gorenstein)
    return inconclusive(BoundId::kGraded, statement, "hypothesis not met: Gorenstein not asserted");
  if (in.d < 2)
    return inconclusive(BoundId::kGraded, statement, "requires d >= 2 as for the (d+1)/d form");
  if (!in.profile || (in.reduction != ReductionStatus::kCertified && in.reduction != ReductionStatus::kAsserted))
    return inconclusive(BoundId::kGraded, statement, "no minimal reduction");
  const ArtinianProfile& prof = *in.profile;
  if (prof.socle_dim != 1)
    return inconclusive(BoundId::kGraded, statement, "socle dimension is not 1");
  if (prof.top_degree == 0) return inconclusive(BoundId::kGraded, statement, "r = 0: R is regular");
  BoundReport r = make_report(BoundId::kGraded, statement);
  r.hypotheses.push_back("Gorenstein (asserted)");
  note_multiplicity_source(r, in);
  const Rational e(prof.colength);
  Rational best = 0;
  std::string ks;
  for (std::size_t i = 0; i < prof.hilbert_function.size(); ++i) {
    ks += (i ? "," : "") + std::to_string(prof.hilbert_function[i]);
    if (i == 0) continue;
    best = std::max(best, e / (e - Rational(prof.hilbert_function[i])));
  }
  const Rational rr(prof.top_degree);
  r.details = {{"k", "[" + ks + "]"}, {"r", std::to_string(prof.top_degree)}, {"(r+1)/r", to_string((rr + 1) / rr)}};
  judge_conditional(r, in.hk.estimate, best, in.tolerance, CertificateKind::kFRegularGorenstein);
  return r;
}

BoundReport check_gorenstein_non_fregular(const RingInvariants& in) {
  const std::string statement = "if R is not F-regular then e_HK(R) >= (d+1)/d, and >= d/(d-1) off hypersurfaces";
  if (!in.flags.gorenstein)
    return inconclusive(BoundId::kGorensteinNonFRegular, statement, "hypothesis not met: Gorenstein not asserted");
  if (in.d < 2) return inconclusive(BoundId::kGorensteinNonFRegular, statement, "theorem hypothesis d > 1");
  BoundReport r = make_report(BoundId::kGorensteinNonFRegular, statement);
  r.hypotheses.push_back("Gorenstein (asserted)");
  const Rational d(in.d);
  const bool hypersurface = in.embedding_dim <= in.d + 1;
  r.details = {{"hypersurface", hypersurface ? "yes" : "no"}};
  judge_conditional(r, in.hk.estimate, hypersurface ? (d + 1) / d : d / (d - 1), in.tolerance,
                    CertificateKind::kFRegularGorenstein);
  return r;
}

Rational dimension_bound_rhs(std::size_t d) {
  BigInt base = factorial(d) * (d - 1) + 1;
  BigInt denom = BigInt(d);
  for (std::size_t i = 0; i < d; ++i) denom *= base;
  return 1 + Rational(BigInt(1), denom);
}

BoundReport check_dimension_bound(const RingInvariants& in) {
  const std::string statement = "e_HK(R) >= 1 + 1/(d (d!(d-1)+1)^d) for non-regular R";
  if (!in.flags.unmixed)
    return inconclusive(BoundId::kDimension, statement, "hypothesis not met: unmixed not asserted");
  if (in.d < 2) return inconclusive(BoundId::kDimension, statement, "theorem hypothesis d >= 2");
  if (auto why = missing_multiplicity(in)) return inconclusive(BoundId::kDimension, statement, *why);
  if (in.e < 2) return inconclusive(BoundId::kDimension, statement, "R is regular");
  BoundReport r = make_report(BoundId::kDimension, statement);
  r.hypotheses.push_back("formally unmixed (asserted)");
  note_multiplicity_source(r, in);
  judge_lower_bound(r, in.hk.estimate, dimension_bound_rhs(in.d), in.tolerance);
  return r;
}

Certificate deduce_regularity_class(const RingInvariants& in) {
  Certificate none;
  if (!in.e_known) return none;
  if (in.e == 1) {
    Certificate c;
    c.kind = CertificateKind::kRegular;
    c.premise = "e = 1";
    c.citation = "sandwich";
    return c;
  }
  const Rational& est = in.hk.estimate;
  const Rational& tol = in.tolerance;
  auto fire = [&](CertificateKind kind, const Rational& rhs, BoundId id) {
    Certificate c;
    c.kind = kind;
    c.premise = to_string(est) + " + " + to_string(tol) + " < " + to_string(rhs);
    c.citation = std::string(bound_id_name(id));
    return c;
  };
  const Rational small(in.e, in.e - 1);
  if (in.flags.cm && est + tol < small) return fire(CertificateKind::kFRegularGorenstein, small, BoundId::kSmallEhk);
  if (in.flags.unmixed && in.d >= 2) {
    const Rational thr = 1 + std::max(Rational(1) / rational_factorial(in.d), Rational(1, in.e));
    if (est + tol < thr) return fire(CertificateKind::kFRegularGorenstein, thr, BoundId::kSmallEhkUnmixed);
  }
  if (in.flags.gorenstein && in.d > 1) {
    const Rational thr = Rational(in.d + 1, in.d);
    if (est + tol < thr) return fire(CertificateKind::kFRegularGorenstein, thr, BoundId::kGorensteinNonFRegular);
  }
  if (in.flags.unmixed && in.d >= 2 && est + tol < small)
    return fire(CertificateKind::kCMFRational, small, BoundId::kSmallEhk);
  return none;
}

}  // namespace hk
