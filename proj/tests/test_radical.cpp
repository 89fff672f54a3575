// Radical extensions S = R[v]/(v^n - z) and the transfer checks.

#include "doctest.h"
#include "hk/hilbert.hpp"
#include "hk/radical.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> g) {
  std::vector<Polynomial> gens;
  for (const char* s : g) gens.push_back(P(s, r));
  return Ideal(r, gens);
}

std::string detail(const BoundReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("building radical extensions") {
  auto r = make_ring(5, {"x", "y", "z"});
  QuotientRing A1(I(r, {"x*y - z^2"}));
  RadicalExtension ext = build_radical_extension(A1, P("x", r), 2, true);
  CHECK(ext.v_name == "v");
  CHECK(ext.extended.defining_ideal().to_string() == "(x*y - z^2, v^2 - x)");
  CHECK(ext.b_assumed == 2);
  CHECK(ext.b_exact);
  // deg x = 1 is odd, so the base weights double and v gets weight 1.
  CHECK(ext.extended.ring()->weights() == std::vector<std::uint32_t>{2, 2, 2, 1});
  CHECK(ext.graded);
  CHECK(ext.root() == Polynomial::variable(ext.extended.ring(), 3));

  RadicalExtension same = build_radical_extension(A1, P("x", r), 1, true);
  CHECK(same.b_assumed == 1);
  CHECK(same.extended.nvars() == 3);

  CHECK_THROWS_WITH(build_radical_extension(A1, P("x*y - z^2", r), 2, true), "z is zero in R");

  auto rv = make_ring(5, {"x", "v"});
  QuotientRing has_v(Ideal::zero(rv));
  CHECK(build_radical_extension(has_v, P("x", rv), 2, true).v_name == "v_");

  RadicalExtension not_min = build_radical_extension(A1, P("x^2", r), 2, true);
  CHECK_FALSE(not_min.b_exact);
  CHECK(not_min.extended.ring()->weights() == std::vector<std::uint32_t>{1, 1, 1, 1});
  RadicalExtension inhomog = build_radical_extension(A1, P("x + y^2", r), 2, true);
  CHECK_FALSE(inhomog.graded);
  CHECK(is_minimal_generator(A1, P("x + y", r)));
  CHECK_FALSE(is_minimal_generator(A1, P("z^2", r)));
  CHECK_FALSE(is_minimal_generator(A1, P("x + 1", r)));
}

TEST_CASE("scaling on the affine line is exact at every q") {
  auto r = make_ring(5, {"x"});
  QuotientRing line(Ideal::zero(r));
  RadicalExtension ext = build_radical_extension(line, P("x", r), 2, true);
  BoundReport rep = check_scaling_4_1(ext, I(r, {"x"}), 3);
  CHECK(rep.status == Status::kHolds);
  CHECK(detail(rep, "per-q equality") == "exact");
  CHECK(*rep.lhs == 1);
  CHECK(*rep.rhs == 1);
  CHECK(detail(rep, "e_HK(JS; S)") == "2/1");

  RadicalExtension trivial = build_radical_extension(line, P("x", r), 1, true);
  rep = check_scaling_4_1(trivial, I(r, {"x"}), 2);
  CHECK(*rep.lhs == *rep.rhs);
}

TEST_CASE("scaling on the A1 quadric") {
  auto r = make_ring(5, {"x", "y", "z"});
  QuotientRing A1(I(r, {"x*y - z^2"}));
  RadicalExtension ext = build_radical_extension(A1, P("x + y", r), 2, true);
  BoundReport rep = check_scaling_4_1(ext, A1.maximal_ideal(), 2);
  CHECK(rep.status == Status::kHolds);
  CHECK(abs(*rep.lhs - *rep.rhs) <= rep.tolerance);

  RadicalExtension weak = build_radical_extension(A1, P("x + y", r), 2, false);
  rep = check_scaling_4_1(weak, A1.maximal_ideal(), 2);
  CHECK(rep.status == Status::kInconclusive);
  CHECK_FALSE(rep.substitutions.empty());
}

TEST_CASE("length of S/(x, v) is a 1/n share") {
  auto r = make_ring(5, {"x", "y", "z"});
  QuotientRing A1(I(r, {"x*y - z^2"}));
  for (unsigned n : {2u, 3u}) {
    RadicalExtension ext = build_radical_extension(A1, P("x + y", r), n, true);
    const auto& S = ext.extended;
    Polynomial zS = ext.lift(P("z", r));
    std::uint64_t with_v = colength(S, S.ideal({zS, ext.root()}));
    std::uint64_t with_z = colength(S, S.ideal({zS, ext.lift(P("x + y", r))}));
    CHECK(with_v * n == with_z);
  }
}

TEST_CASE("radical extension bound") {
  auto r = make_ring(5, {"x", "y", "z"});
  QuotientRing A1(I(r, {"x*y - z^2"}));
  Ideal params = I(r, {"x + y", "z"});
  HKEstimate base = hk_estimate(A1, A1.maximal_ideal(), 2);
  RadicalExtension ext = build_radical_extension(A1, P("x", r), 2, true);
  BoundReport rep = check_radical_bound_4_4(ext, params, base, 2);
  CHECK(rep.status == Status::kHolds);
  CHECK(detail(rep, "e") == "2/1");
  CHECK(detail(rep, "a'") == "2/1");
  // (b(n-1)e + n e_HK(S)) / (b(a'(n-1)+1)) with e_HK(S) >= 1 is at least 1.
  CHECK(*rep.rhs >= 1);
  Rational ehk_s = make_rational(1, 1);
  CHECK((2 * 1 * 2 + 2 * ehk_s) / (2 * (2 * 1 + 1)) == 1);

  RadicalExtension inside = build_radical_extension(A1, P("z", r), 2, true);
  CHECK_THROWS_WITH(check_radical_bound_4_4(inside, params, base, 2), "z lies in the parameter ideal");
}

TEST_CASE("nested colon monotonicity") {
  auto r = make_ring(3, {"x", "y"});
  QuotientRing plane(Ideal::zero(r));
  BoundReport rep = check_nested_monotonicity_4_8(plane, I(r, {"x"}), P("y", r), 3, {1, 3, 9});
  CHECK(rep.status == Status::kHolds);
  CHECK(rep.tolerance == 0);
  // λ(R/((x^3, y^6) : y^3)) = λ(R/(x^3, y^6)) - λ(R/(x^3, y^3)), by the box oracle.
  oracle::Box box({3, 6}, 3);
  const auto big = box.colength({});
  const auto small = box.colength({oracle::from_hk(P("y^3", r))});
  CHECK(detail(rep, "q=3,n=1") == "9 >= " + std::to_string(big - small));

  rep = check_nested_monotonicity_4_8(plane, I(r, {"x", "y"}), P("y", r), 3, {1, 3});
  CHECK(rep.status == Status::kHolds);
  CHECK(*rep.lhs == 0);
  CHECK(detail(rep, "q=3,n=2") == "0 >= 0");

  auto r3 = make_ring(5, {"x", "y", "z"});
  QuotientRing A1(I(r3, {"x*y - z^2"}));
  rep = check_nested_monotonicity_4_8(A1, I(r3, {"x", "y"}), P("z", r3), 4, {1, 5, 25});
  CHECK(rep.status == Status::kHolds);
  CHECK(detail(rep, "q=5,n=1") == "37 >= 13");
  CHECK(detail(rep, "q=25,n=2") == "313 >= 0");
}

TEST_CASE("towers") {
  auto r = make_ring(5, {"x", "y", "z"});
  QuotientRing A1(I(r, {"x*y - z^2"}));
  std::vector<Polynomial> gens{P("x", r), P("y", r), P("x + y + z", r)};
  CHECK(run_tower(A1, gens, 2, 0, 2, true).steps.empty());
  TowerResult t = run_tower(A1, gens, 2, 2, 2, true);
  CHECK(t.e == 2);
  CHECK(t.subset_failures.empty());
  CHECK(t.socle_order == 1);
  REQUIRE(t.steps.size() == 2);
  for (const auto& s : t.steps) {
    CHECK(s.multiplicity_constant);
    CHECK(s.report.status != Status::kViolated);
    CHECK(s.report.id == BoundId::kRadical);
  }
  CHECK(t.reports().size() == 2);

  std::vector<Polynomial> bad{P("x", r), P("y", r), P("z", r)};
  CHECK(run_tower(A1, bad, 2, 1, 2, true).subset_failures.size() == 2);
  std::vector<Polynomial> not_sop{P("x", r), P("z", r)};
  CHECK_THROWS_WITH(run_tower(A1, not_sop, 2, 1, 2, true), "the first d generators are not a system of parameters");
  CHECK_THROWS_WITH(run_tower(A1, gens, 2, 4, 2, true), "tower depth exceeds the number of generators");
  std::vector<Polynomial> many{P("x", r), P("y", r), P("z", r), P("x + z", r)};
  CHECK_THROWS_WITH(run_tower(A1, many, 2, 1, 2, true), "at most d + 1 generators are used");
  std::vector<Polynomial> inhomog{P("x + y^2", r), P("y", r)};
  CHECK_FALSE(run_tower(A1, inhomog, 2, 1, 2, true).truncated.empty());
}
