#include "hk/radical.hpp"

#include <algorithm>

#include "hk/hilbert.hpp"

namespace hk {

namespace {

std::string fresh_name(const PolyRing& ring, std::string wanted) {
  if (wanted.empty()) wanted = "v";
  while (ring.index_of(wanted) >= 0) wanted += "_";
  return wanted;
}

std::size_t dimension_of(const QuotientRing& R, std::optional<std::size_t> d) {
  if (d) return *d;
  if (!R.weighted_homogeneous()) throw Error("dimension unknown: supply d for a non-homogeneous presentation");
  return krull_dimension(R);
}

Rational floor_tolerance(Rational t) {
  const Rational floor(1, 1000);
  return t < floor ? floor : t;
}

std::string join(const std::vector<Polynomial>& polys) {
  std::string s;
  for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + polys[i].to_string();
  return s;
}

}  // namespace

Polynomial RadicalExtension::lift(const Polynomial& f) const {
  if (v_name.empty()) return f;
  return f.extend_back(extended.ring(), 1);
}

Ideal RadicalExtension::lift(const Ideal& J) const {
  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) gens.push_back(lift(g));
  return Ideal(extended.ring(), std::move(gens));
}

Polynomial RadicalExtension::root() const {
  if (v_name.empty()) return z;
  return Polynomial::variable(extended.ring(), extended.nvars() - 1);
}

bool is_minimal_generator(const QuotientRing& R, const Polynomial& z) {
  for (const auto& t : z.terms())
    if (t.mono.is_one()) return false;
  Ideal m = R.maximal_ideal();
  return !R.contains(ideal_product(m, m), z);
}

RadicalExtension build_radical_extension(const QuotientRing& R, const Polynomial& z, unsigned n, bool normal_asserted,
                                         std::string v_name) {
  if (n == 0) throw Error("root degree must be positive");
  if (R.is_zero(z)) throw Error("z is zero in R");
  const bool minimal = is_minimal_generator(R, z);
  RadicalExtension ext{R, z, n, R, "", n, normal_asserted && minimal, normal_asserted, R.weighted_homogeneous(), {}};
  if (normal_asserted)
    ext.hypotheses.push_back("R normal (asserted)");
  else
    ext.hypotheses.push_back("R not asserted normal: b <= n only");
  ext.hypotheses.push_back(minimal ? "z is a minimal generator of m (verified)" : "z is not a minimal generator of m");
  if (n == 1) {
    ext.b_exact = true;
    return ext;
  }

  const PolyRing& base = *R.ring();
  std::vector<std::string> names = base.names();
  std::vector<std::uint32_t> weights = base.weights();
  ext.v_name = fresh_name(base, v_name);
  names.push_back(ext.v_name);
  if (z.is_homogeneous()) {
    const std::uint64_t deg = z.weighted_degree();
    if (deg % n == 0) {
      weights.push_back(static_cast<std::uint32_t>(deg / n));
    } else {
      for (auto& w : weights) w *= n;
      weights.push_back(static_cast<std::uint32_t>(deg));
    }
  } else {
    weights.push_back(1);
    ext.graded = false;
    ext.hypotheses.push_back("z is not homogeneous: the extension is not graded");
  }
  RingPtr ring = std::make_shared<PolyRing>(base.field(), names, base.order(), weights);
  std::vector<Polynomial> rels;
  for (const auto& g : R.defining_ideal().generators()) rels.push_back(g.extend_back(ring, 1));
  Polynomial v = Polynomial::variable(ring, names.size() - 1);
  rels.push_back(v.pow(n) - z.extend_back(ring, 1));
  ext.extended = QuotientRing(Ideal(ring, std::move(rels)), R.budget());
  ext.graded = ext.graded && ext.extended.weighted_homogeneous();
  return ext;
}

BoundReport check_scaling_4_1(const RadicalExtension& ext, const Ideal& J, unsigned e_max,
                              std::optional<std::size_t> d) {
  const std::string statement = "e_HK(J; R) = e_HK(JS; S) / [Q(S):Q(R)]";
  BoundReport r = make_report(BoundId::kScaling, statement);
  r.hypotheses = ext.hypotheses;
  r.hypotheses.push_back("residue degree [S/n : R/m] = 1");
  try {
    const std::size_t dim = dimension_of(ext.base, d);
    HKEstimate below = hk_estimate(ext.base, J, e_max, dim);
    HKEstimate above = hk_estimate(ext.extended, ext.lift(J), e_max, dim);
    const Rational b(ext.b_assumed);
    bool exact = below.samples.size() == above.samples.size();
    for (std::size_t i = 0; exact && i < below.samples.size(); ++i)
      exact = above.samples[i].colength == ext.b_assumed * below.samples[i].colength;
    r.details = {{"b", std::to_string(ext.b_assumed)},
                 {"n", std::to_string(ext.n)},
                 {"e_HK(JS; S)", to_string(above.estimate)},
                 {"per-q equality", exact ? "exact" : "no"}};
    const Rational tol = floor_tolerance(below.error_heuristic + above.error_heuristic / b);
    const Rational rhs = above.estimate / b;
    r.lhs = below.estimate;
    r.rhs = rhs;
    r.tolerance = tol;
    if (ext.b_exact) {
      r.inequality_satisfied = abs(below.estimate - rhs) <= tol;
    } else {
      r.substitutions.push_back("b <= n: only e_HK(J) >= e_HK(JS)/n is implied");
      r.inequality_satisfied = below.estimate >= rhs - tol;
    }
    if (!ext.normal_asserted) {
      r.status = Status::kInconclusive;
      r.note = "hypothesis not met: R not asserted to be a normal domain";
    } else {
      r.status = r.inequality_satisfied ? Status::kHolds : Status::kViolated;
    }
  } catch (const Error& ex) {
    r.status = Status::kInconclusive;
    r.note = ex.what();
  }
  return r;
}

BoundReport check_radical_bound_4_4(const RadicalExtension& ext, const Ideal& params, const HKEstimate& base_hk,
                                    unsigned e_max, std::optional<std::size_t> d) {
  if (ext.base.contains(params, ext.z)) throw Error("z lies in the parameter ideal");
  const std::string statement = "e_HK(R) >= (b(n-1)e + n e_HK(S)) / (b(a(n-1)+1))";
  BoundReport r = make_report(BoundId::kRadical, statement);
  r.hypotheses = ext.hypotheses;
  r.hypotheses.push_back("z not in (x) verified; z not in (x)* assumed");
  r.substitutions.push_back("a = λ(R/(x)*) -> a' = λ(R/(x))");
  if (!ext.b_exact) r.substitutions.push_back("b -> n (the bound decreases in b)");
  try {
    const std::size_t dim = dimension_of(ext.base, d);
    const std::uint64_t e_val = colength(ext.base, params);
    HKEstimate above = hk_estimate(ext.extended, ext.extended.maximal_ideal(), e_max, dim);
    const Rational e(e_val), a(e_val), n(ext.n), b(ext.b_assumed);
    const Rational denom = b * (a * (n - 1) + 1);
    const Rational rhs = (b * (n - 1) * e + n * above.estimate) / denom;
    const Rational tol = floor_tolerance(base_hk.error_heuristic + n * above.error_heuristic / denom);
    r.details = {{"e", to_string(e)},
                 {"a'", to_string(a)},
                 {"b", std::to_string(ext.b_assumed)},
                 {"n", std::to_string(ext.n)},
                 {"e_HK(S)", to_string(above.estimate)}};
    judge_lower_bound(r, base_hk.estimate, rhs, tol);
    if (!ext.normal_asserted) {
      r.status = Status::kInconclusive;
      r.note = "hypothesis not met: R not asserted to be a normal domain";
    }
  } catch (const Error& ex) {
    r.status = Status::kInconclusive;
    r.note = ex.what();
  }
  return r;
}

BoundReport check_nested_monotonicity_4_8(const QuotientRing& R, const Ideal& I, const Polynomial& v,
                                          unsigned n_max, const std::vector<std::uint64_t>& qs) {
  const std::string statement =
      "λ(R/((I,v^n)^[q] : v^((n-1)q))) >= λ(R/((I,v^(n+1))^[q] : v^(nq))) for every q";
  BoundReport r = make_report(BoundId::kNested, statement);
  r.tolerance = 0;
  bool all = true;
  std::optional<std::int64_t> worst;
  for (std::uint64_t q : qs) {
    std::vector<std::uint64_t> lengths;
    std::vector<Ideal> colons;
    for (unsigned k = 1; k <= n_max; ++k) {
      Ideal powered = frobenius_power(ideal_sum(I, Ideal(R.ring(), {v.pow(k)})), q);
      colons.push_back(R.colon(powered, v.pow((k - 1) * q)));
      lengths.push_back(colength(R, colons.back()));
    }
    for (unsigned k = 1; k < n_max; ++k) {
      const std::uint64_t left = lengths[k - 1], right = lengths[k];
      bool included = true;
      for (const auto& g : colons[k - 1].generators())
        if (!R.contains(colons[k], g)) {
          included = false;
          break;
        }
      const std::int64_t gap = static_cast<std::int64_t>(left) - static_cast<std::int64_t>(right);
      if (!worst || gap < *worst) worst = gap;
      all = all && left >= right && included;
      r.details.emplace_back("q=" + std::to_string(q) + ",n=" + std::to_string(k),
                             std::to_string(left) + " >= " + std::to_string(right) +
                                 (included ? "" : " (inclusion fails)"));
    }
  }
  if (!worst) {
    r.status = Status::kInconclusive;
    r.note = "no (q, n) pairs requested";
    return r;
  }
  r.lhs = Rational(*worst);
  r.rhs = 0;
  r.inequality_satisfied = all;
  r.status = all ? Status::kHolds : Status::kViolated;
  r.note = "smallest gap over all (q, n)";
  return r;
}

std::vector<BoundReport> TowerResult::reports() const {
  std::vector<BoundReport> out;
  for (const auto& s : steps) out.push_back(s.report);
  return out;
}

TowerResult run_tower(const QuotientRing& R, const std::vector<Polynomial>& gens, unsigned n, std::size_t depth,
                      unsigned e_max, bool normal_asserted, std::optional<std::size_t> d) {
  TowerResult out;
  if (depth == 0) return out;
  if (depth > gens.size()) throw Error("tower depth exceeds the number of generators");
  const std::size_t dim = dimension_of(R, d);
  if (gens.size() > dim + 1) throw Error("at most d + 1 generators are used");
  if (gens.size() < dim) throw Error("the tower needs at least d generators");

  std::vector<Polynomial> first(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(dim));
  const Ideal y_ideal = R.ideal(first);
  try {
    out.e = static_cast<std::int64_t>(colength(R, y_ideal));
  } catch (const InfiniteColength&) {
    throw Error("the first d generators are not a system of parameters");
  }

  // Every d-subset must be a minimal reduction (all of the same colength).
  std::vector<bool> pick(gens.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim), true);
  do {
    std::vector<Polynomial> subset;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (pick[i]) subset.push_back(gens[i]);
    bool ok = false;
    try {
      ok = R.standard_graded() ? certify_minimal_reduction(R, R.ideal(subset))
                               : colength(R, R.ideal(subset)) == static_cast<std::uint64_t>(out.e);
    } catch (const InfiniteColength&) {
      ok = false;
    }
    if (!ok) out.subset_failures.push_back("(" + join(subset) + ")");
  } while (std::prev_permutation(pick.begin(), pick.end()));

  Polynomial u = socle_element(R, y_ideal);
  out.socle_element = u.to_string();
  const Ideal m = R.maximal_ideal();
  Ideal power = m;
  while (!u.is_zero() && R.contains(ideal_sum(power, y_ideal), u)) {
    ++out.socle_order;
    power = ideal_product(power, m);
  }

  QuotientRing current = R;
  std::vector<Polynomial> ys = gens;
  std::vector<Polynomial> roots;
  HKEstimate previous = hk_estimate(R, R.maximal_ideal(), e_max, dim);
  const Rational e(out.e), nn(n);
  const Rational factor = e * (nn - 1) + 1;
  for (std::size_t i = 1; i <= depth; ++i) {
    const Polynomial& y = ys[i - 1];
    if (!y.is_homogeneous() || !current.weighted_homogeneous()) {
      out.truncated = "generator " + y.to_string() + " is not homogeneous: tower stops before step " +
                      std::to_string(i);
      break;
    }
    RadicalExtension ext =
        build_radical_extension(current, y, n, normal_asserted, "v" + std::to_string(i));
    for (auto& g : ys) g = ext.lift(g);
    for (auto& g : roots) g = ext.lift(g);
    roots.push_back(ext.root());
    current = ext.extended;

    TowerStep step;
    step.index = i;
    step.ring = current.defining_ideal().to_string();
    step.hk = hk_estimate(current, current.maximal_ideal(), e_max, dim);
    std::vector<Polynomial> params = roots;
    for (std::size_t j = i; j < dim; ++j) params.push_back(ys[j]);
    step.multiplicity_constant = colength(current, current.ideal(params)) == static_cast<std::uint64_t>(out.e);
    if (current.standard_graded())
      step.multiplicity_constant =
          step.multiplicity_constant && dimension_and_multiplicity(current).multiplicity == out.e;

    BoundReport r = make_report(BoundId::kRadical,
                                "tower step " + std::to_string(i) + ": δ_(i-1) >= δ_i / (e(n-1)+1)");
    r.conditional = true;
    r.hypotheses = {"R_(i-1) F-regular and Gorenstein (assumed)"};
    const Rational lhs = previous.estimate - 1;
    const Rational rhs = (step.hk.estimate - 1) / factor;
    judge_lower_bound(r, lhs, rhs, floor_tolerance(previous.error_heuristic + step.hk.error_heuristic / factor));
    if (!r.inequality_satisfied) {
      r.status = Status::kInconclusive;
      r.note = "inequality fails: R_(i-1) is not F-regular or the estimates have not converged";
    }
    r.details = {{"e(R_i) = e(R_0)", step.multiplicity_constant ? "yes" : "no"},
                 {"e_HK(R_i)", to_string(step.hk.estimate)}};
    step.report = r;
    previous = step.hk;
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace hk
