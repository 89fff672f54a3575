// Hilbert-Kunz function and estimates.

#include "doctest.h"
#include "hk/hk_engine.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> g) {
  std::vector<Polynomial> gens;
  for (const char* s : g) gens.push_back(P(s, r));
  return Ideal(r, gens);
}

QuotientRing Q(const RingPtr& r, std::initializer_list<const char*> rels) { return QuotientRing(I(r, rels)); }

}  // namespace

TEST_CASE("HK function on small rings") {
  auto r2 = make_ring(2, {"x", "y"});
  CHECK(hk_function(QuotientRing(Ideal::zero(r2)), Ideal::maximal(r2), 4) == 16);
  auto r5 = make_ring(5, {"x", "y"});
  CHECK(hk_function(Q(r5, {"x*y"}), Ideal::maximal(r5), 5) == 9);
  auto r3 = make_ring(3, {"x", "y"});
  CHECK(hk_function(Q(r3, {"y^2"}), Ideal::maximal(r3), 3) == 6);
  CHECK_THROWS_WITH(hk_function(Q(r3, {"y^2"}), Ideal::maximal(r3), 4), "Frobenius power requires q = p^e");
}

TEST_CASE("HK function of the A1 quadric, twisted cubic and 3-dim quadric") {
  // (3q^2 - 1)/2 for the A1 quadric; checked at q = 5 against the box oracle.
  auto r = make_ring(5, {"x", "y", "z"});
  QuotientRing A1 = Q(r, {"x*y - z^2"});
  CHECK(hk_function(A1, Ideal::maximal(r), 5) == 37);
  CHECK(hk_function(A1, Ideal::maximal(r), 25) == 937);
  oracle::Box box({5, 5, 5}, 5);
  CHECK(box.colength({oracle::from_hk(P("x*y - z^2", r))}) == 37);

  auto r4 = make_ring(5, {"a", "b", "c", "d"});
  QuotientRing cubic = Q(r4, {"b^2 - a*c", "c^2 - b*d", "a*d - b*c"});
  CHECK(hk_function(cubic, Ideal::maximal(r4), 5) == 50);
  CHECK(hk_function(cubic, Ideal::maximal(r4), 25) == 1249);
  oracle::Box box4({5, 5, 5, 5}, 5);
  std::vector<oracle::Poly> rels;
  for (const auto& g : cubic.defining_ideal().generators()) rels.push_back(oracle::from_hk(g));
  CHECK(box4.colength(rels) == 50);

  auto rd = make_ring(3, {"x0", "x1", "x2", "x3"});
  QuotientRing d3 = Q(rd, {"x0^2 + x1^2 + x2^2 + x3^2"});
  CHECK(hk_function(d3, Ideal::maximal(rd), 3) == 35);
  CHECK(hk_function(d3, Ideal::maximal(rd), 9) == 969);
  oracle::Box box3({3, 3, 3, 3}, 3);
  CHECK(box3.colength({oracle::from_hk(P("x0^2 + x1^2 + x2^2 + x3^2", rd))}) == 35);
}

TEST_CASE("estimates") {
  auto r = make_ring(5, {"x", "y"});
  HKEstimate two_lines = hk_estimate(Q(r, {"x*y"}), Ideal::maximal(r), 3);
  REQUIRE(two_lines.samples.size() == 3);
  CHECK(two_lines.samples[2].q == 125);
  CHECK(two_lines.samples[2].colength == 249);
  CHECK(two_lines.estimate == make_rational(249, 125));
  CHECK(two_lines.error_heuristic == make_rational(249, 125) - make_rational(49, 25));
  CHECK(two_lines.d == 1);
  CHECK_FALSE(two_lines.truncated);

  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto rp = make_ring(p, {"x", "y", "z"});
    HKEstimate reg = hk_estimate(QuotientRing(Ideal::zero(rp)), Ideal::maximal(rp), 2);
    CHECK(reg.estimate == 1);
    CHECK(reg.error_heuristic == 0);
    CHECK(reg.tolerance() == make_rational(1, 1000));
  }

  auto r3 = make_ring(5, {"x", "y", "z"});
  HKEstimate a1 = hk_estimate(Q(r3, {"x*y - z^2"}), Ideal::maximal(r3), 2);
  CHECK(abs(a1.estimate - make_rational(3, 2)) < make_rational(5, 100));

  // e_max = 1 adds the q = 1 sample.
  HKEstimate one = hk_estimate(Q(r3, {"x*y - z^2"}), Ideal::maximal(r3), 1);
  REQUIRE(one.samples.size() == 2);
  CHECK(one.samples[0].q == 1);
  CHECK(one.samples[0].colength == 1);

  CHECK(default_emax(2) == 3);
  CHECK(default_emax(5) == 3);
  CHECK(default_emax(7) == 2);
  CHECK(default_emax(13) == 2);
  CHECK(default_emax(17) == 1);
  CHECK_THROWS(hk_estimate(Q(r3, {"x*y - z^2"}), Ideal::maximal(r3), 0));
  CHECK_THROWS_WITH(hk_estimate(Q(r, {"x^2 - y"}), Ideal::maximal(r), 1),
                    "dimension unknown: supply d for a non-homogeneous presentation");
  CHECK_NOTHROW(hk_estimate(Q(r, {"x^2 - y"}), Ideal::maximal(r), 1, 1));
}

TEST_CASE("truncation keeps the finished prefix") {
  auto r = make_ring(5, {"x", "y", "z"});
  QuotientRing tight(I(r, {"x*y - z^2"}), GbBudget{0, 40});
  HKEstimate est = hk_estimate(tight, Ideal::maximal(r), 3);
  CHECK(est.truncated);
  REQUIRE_FALSE(est.samples.empty());
  CHECK(est.samples.size() < 3);
  CHECK(est.samples[0].colength == 37);
  CHECK_FALSE(est.note.empty());
}

TEST_CASE("parameter ideals have constant normalized samples") {
  auto r3 = make_ring(5, {"x", "y", "z"});
  QuotientRing A1 = Q(r3, {"x*y - z^2"});
  HKEstimate est = hk_estimate(A1, I(r3, {"x + y", "z"}), 2);
  for (const auto& s : est.samples) CHECK(s.normalized == 2);
  auto r2 = make_ring(3, {"x", "y"});
  est = hk_estimate(QuotientRing(Ideal::zero(r2)), I(r2, {"x^2", "y"}), 3);
  for (const auto& s : est.samples) CHECK(s.normalized == 2);
}

TEST_CASE("relative HK") {
  auto r = make_ring(5, {"x", "y"});
  QuotientRing R = Q(r, {"x*y"});
  Ideal m = Ideal::maximal(r);
  HKEstimate same = relative_hk(R, m, m, 2);
  for (const auto& s : same.samples) CHECK(s.colength == 0);
  HKEstimate vs_unit = relative_hk(R, m, Ideal::unit(r), 3);
  CHECK(vs_unit.estimate == hk_estimate(R, m, 3).estimate);
  CHECK_THROWS_WITH(relative_hk(R, Ideal::unit(r), m, 2), "relative HK requires nested ideals");

  // λ(R/I^[q]) - λ(R/J^[q]) >= 0 whenever I ⊆ J.
  auto r3 = make_ring(3, {"x", "y", "z"});
  QuotientRing A1 = Q(r3, {"x*y - z^2"});
  HKEstimate rel = relative_hk(A1, I(r3, {"x + y", "z"}), Ideal::maximal(r3), 2);
  for (const auto& s : rel.samples) CHECK(s.normalized >= 0);
  CHECK(rel.estimate > 0);
}

TEST_CASE("associativity") {
  auto r = make_ring(5, {"x", "y"});
  QuotientRing two_lines = Q(r, {"x*y"});
  std::vector<Component> comps{{I(r, {"x"}), 1}, {I(r, {"y"}), 1}};
  BoundReport rep = associativity_check(two_lines, comps, 3, true);
  CHECK(rep.status == Status::kHolds);
  CHECK(*rep.rhs == 2);
  CHECK(abs(*rep.lhs - 2) <= rep.tolerance);

  auto r3 = make_ring(5, {"x", "y", "z"});
  QuotientRing A1 = Q(r3, {"x*y - z^2"});
  rep = associativity_check(A1, {{I(r3, {"x*y - z^2"}), 1}}, 2, true);
  CHECK(rep.status == Status::kHolds);
  CHECK(*rep.lhs == *rep.rhs);

  QuotientRing mixed = Q(r, {"x^2*y"});
  rep = associativity_check(mixed, {{I(r, {"x"}), 2}}, 2, false);
  CHECK(rep.status == Status::kInconclusive);
  CHECK(rep.note == "input not unmixed");
  CHECK_THROWS(associativity_check(two_lines, {{I(r, {"x - 1"}), 1}}, 2, true));

  // A wrong length is caught.
  rep = associativity_check(two_lines, {{I(r, {"x"}), 2}, {I(r, {"y"}), 1}}, 3, true);
  CHECK(rep.status == Status::kViolated);
}
