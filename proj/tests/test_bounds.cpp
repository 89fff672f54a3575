// Lower-bound checks on hand-built invariants.

#include <random>
#include <set>

#include "doctest.h"
#include "hk/bounds.hpp"

using namespace hk;

namespace {

RingInvariants make_invariants(std::size_t d, std::int64_t e, Rational est, RingFlags flags,
                               Rational tol = Rational(1, 1000)) {
  RingInvariants in;
  in.d = d;
  in.e = e;
  in.e_known = true;
  in.flags = flags;
  in.hk.estimate = est;
  in.hk.d = d;
  in.tolerance = tol;
  in.params_sop = true;
  in.params_colength = static_cast<std::uint64_t>(e);
  in.reduction = ReductionStatus::kCertified;
  return in;
}

RingFlags all_flags() { return {true, true, true, true, true}; }

ArtinianProfile profile(std::vector<std::uint64_t> k, std::uint64_t socle) {
  ArtinianProfile p;
  p.hilbert_function = k;
  p.top_degree = k.size() - 1;
  for (auto v : k) p.colength += v;
  p.socle_dim = socle;
  return p;
}

}  // namespace

TEST_CASE("dimension bound right-hand side") {
  CHECK(dimension_bound_rhs(2) == make_rational(19, 18));
  CHECK(dimension_bound_rhs(3) == make_rational(6592, 6591));
  // d = 4: 4!*3 + 1 = 73.
  CHECK(dimension_bound_rhs(4) == 1 + make_rational(1, 4 * 73 * 73 * 73 * 73));
}

TEST_CASE("sandwich") {
  auto reg = check_sandwich(make_invariants(2, 1, 1, all_flags()));
  CHECK(reg.status == Status::kHolds);
  CHECK(*reg.rhs == 1);
  auto a1 = check_sandwich(make_invariants(2, 2, make_rational(3, 2), all_flags()));
  CHECK(a1.status == Status::kHolds);
  CHECK(*a1.rhs == 1);
  auto lines = check_sandwich(make_invariants(1, 2, make_rational(249, 125), all_flags(), make_rational(4, 125)));
  CHECK(lines.status == Status::kHolds);
  CHECK(*lines.rhs == 2);
  CHECK(check_sandwich(make_invariants(2, 2, make_rational(5, 2), all_flags())).status == Status::kViolated);
  CHECK(check_sandwich(make_invariants(1, 2, make_rational(3, 2), all_flags())).status == Status::kViolated);
  RingInvariants unknown = make_invariants(2, 2, 1, all_flags());
  unknown.e_known = false;
  CHECK(check_sandwich(unknown).status == Status::kInconclusive);
  RingFlags mixed = all_flags();
  mixed.unmixed = false;
  auto weak = check_sandwich(make_invariants(3, 2, make_rational(1, 2), mixed));
  CHECK(*weak.rhs == make_rational(1, 3));
  CHECK(weak.status == Status::kHolds);
}

TEST_CASE("type and minimal multiplicity") {
  RingInvariants a1 = make_invariants(2, 2, make_rational(3, 2), all_flags());
  a1.profile = profile({1, 1}, 1);
  a1.embedding_dim = 3;
  auto t = check_type_bound(a1);
  CHECK(*t.rhs == 1);
  CHECK(t.status == Status::kHolds);
  auto mm = check_minimal_multiplicity(a1);
  CHECK(*mm.rhs == 1);
  CHECK(mm.status == Status::kHolds);

  RingFlags cm{true, true, false, true, true};
  RingInvariants cubic = make_invariants(2, 3, 2, cm);
  cubic.profile = profile({1, 2}, 2);
  cubic.embedding_dim = 4;
  CHECK(*check_type_bound(cubic).rhs == make_rational(3, 2));
  CHECK(*check_minimal_multiplicity(cubic).rhs == make_rational(3, 2));
  cubic.hk.estimate = make_rational(7, 5);
  CHECK(check_type_bound(cubic).status == Status::kViolated);

  RingInvariants dl = make_invariants(1, 2, 2, all_flags());
  dl.embedding_dim = 2;
  CHECK(check_minimal_multiplicity(dl).status == Status::kHolds);
  dl.embedding_dim = 3;
  CHECK(check_minimal_multiplicity(dl).note == "hypothesis not met");

  RingInvariants reg = make_invariants(2, 1, 1, all_flags());
  reg.profile = profile({1}, 1);
  CHECK(*check_type_bound(reg).rhs == 1);
  CHECK(check_type_bound(reg).status == Status::kHolds);
}

TEST_CASE("conditional bounds issue certificates, never violations") {
  RingInvariants a1 = make_invariants(2, 2, make_rational(3, 2), all_flags());
  a1.profile = profile({1, 1}, 1);
  a1.embedding_dim = 3;
  auto small = check_small_ehk_cm(a1);
  CHECK(small.conditional);
  CHECK(*small.rhs == 2);
  REQUIRE(small.certificate);
  CHECK(small.certificate->kind == CertificateKind::kFRegularGorenstein);
  CHECK(small.certificate->citation == "smallehk_3_5");
  auto emb = check_embdim_bound(a1);
  CHECK(*emb.rhs == 2);
  CHECK(emb.certificate);
  auto graded = check_graded_bounds(a1);
  CHECK(*graded.rhs == 2);
  CHECK(graded.certificate);
  bool saw_r = false;
  for (const auto& [k, v] : graded.details)
    if (k == "(r+1)/r") saw_r = v == "2/1";
  CHECK(saw_r);
  auto gor = check_gorenstein_non_fregular(a1);
  CHECK(*gor.rhs == make_rational(3, 2));
  CHECK_FALSE(gor.certificate);

  RingInvariants lines = make_invariants(1, 2, 2, RingFlags{true, true, false, true, false});
  auto s = check_small_ehk_cm(lines);
  CHECK(s.status == Status::kHolds);
  CHECK_FALSE(s.certificate);
  CHECK(check_small_ehk_unmixed(lines).note == "theorem hypothesis d >= 2");
  CHECK(check_embdim_bound(lines).status == Status::kInconclusive);

  RingInvariants cusp = make_invariants(1, 2, 2, RingFlags{true, true, true, true, false});
  cusp.profile = profile({1, 1}, 1);
  CHECK(check_graded_bounds(cusp).note == "requires d >= 2 as for the (d+1)/d form");

  RingInvariants degenerate = make_invariants(2, 2, make_rational(3, 2), all_flags());
  degenerate.embedding_dim = 4;
  CHECK(check_embdim_bound(degenerate).note == "bound degenerate");

  RingInvariants non_hyper = make_invariants(3, 4, 2, all_flags());
  non_hyper.embedding_dim = 5;
  CHECK(*check_gorenstein_non_fregular(non_hyper).rhs == make_rational(3, 2));

  // A value far below every threshold never yields a violated conditional.
  RingInvariants low = make_invariants(2, 3, make_rational(1, 2), all_flags());
  low.profile = profile({1, 1, 1}, 1);
  low.embedding_dim = 3;
  for (auto* fn : {&check_small_ehk_cm, &check_small_ehk_unmixed, &check_embdim_bound, &check_graded_bounds,
                   &check_gorenstein_non_fregular}) {
    BoundReport r = fn(low);
    CHECK(r.status != Status::kViolated);
  }
}

TEST_CASE("certificates are monotone in the tolerance") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + rng() % 3;
    const std::int64_t e = 2 + static_cast<std::int64_t>(rng() % 5);
    Rational est = 1 + make_rational(static_cast<std::int64_t>(rng() % 2000), 1000);
    RingInvariants in = make_invariants(d, e, est, all_flags(), make_rational(1 + rng() % 200, 1000));
    in.embedding_dim = d + 1;
    in.profile = profile({1, 1}, 1);
    for (auto* fn : {&check_small_ehk_cm, &check_small_ehk_unmixed, &check_embdim_bound,
                     &check_gorenstein_non_fregular}) {
      BoundReport wide = fn(in);
      RingInvariants tight = in;
      tight.tolerance = in.tolerance / 2;
      BoundReport narrow = fn(tight);
      if (wide.certificate) CHECK(narrow.certificate.has_value());
      CHECK(wide.status != Status::kViolated);
    }
    Certificate wide = deduce_regularity_class(in);
    RingInvariants tight = in;
    tight.tolerance = 0;
    if (wide.kind != CertificateKind::kNone) CHECK(deduce_regularity_class(tight).kind != CertificateKind::kNone);
  }
}

TEST_CASE("regularity class") {
  CHECK(deduce_regularity_class(make_invariants(2, 1, 1, all_flags())).kind == CertificateKind::kRegular);
  Certificate a1 = deduce_regularity_class(make_invariants(2, 2, make_rational(3, 2), all_flags()));
  CHECK(a1.kind == CertificateKind::kFRegularGorenstein);
  CHECK(a1.citation == "smallehk_3_5");
  CHECK(a1.premise == "3/2 + 1/1000 < 2/1");
  RingFlags lines_flags{true, true, false, true, false};
  CHECK(deduce_regularity_class(make_invariants(1, 2, make_rational(249, 125), lines_flags, make_rational(4, 125)))
            .kind == CertificateKind::kNone);
  // Unmixed but not asserted CM: only CM + F-rational can be concluded.
  RingFlags unmixed_only{true, false, false, true, false};
  Certificate weak = deduce_regularity_class(make_invariants(2, 4, make_rational(6, 5), unmixed_only));
  CHECK(weak.kind == CertificateKind::kFRegularGorenstein);
  CHECK(weak.citation == "smallehk_3_6");
  weak = deduce_regularity_class(make_invariants(3, 4, make_rational(13, 10), unmixed_only));
  CHECK(weak.kind == CertificateKind::kCMFRational);
}

TEST_CASE("dimension bound") {
  RingInvariants a1 = make_invariants(2, 2, make_rational(3, 2), all_flags());
  auto r = check_dimension_bound(a1);
  CHECK(*r.rhs == make_rational(19, 18));
  CHECK(r.status == Status::kHolds);
  RingInvariants too_low = make_invariants(2, 2, make_rational(1001, 1000), all_flags());
  CHECK(check_dimension_bound(too_low).status == Status::kViolated);
  CHECK(check_dimension_bound(make_invariants(2, 1, 1, all_flags())).note == "R is regular");
  CHECK(check_dimension_bound(make_invariants(1, 2, 2, all_flags())).note == "theorem hypothesis d >= 2");
}

TEST_CASE("bound identifiers") {
  std::set<std::string> names;
  for (BoundId id : reported_bound_ids()) {
    names.insert(std::string(bound_id_name(id)));
    CHECK(parse_bound_id(bound_id_name(id)) == id);
  }
  CHECK(names.size() == 13);
  CHECK(names == std::set<std::string>{"sandwich", "duality_3_2", "type_3_3", "minmult_3_4", "smallehk_3_5",
                                       "smallehk_3_6", "embdim_3_7", "graded_3_10", "gor_nonfreg_3_12",
                                       "scaling_4_1", "radical_4_4", "nested_4_8", "dimension_4_10"});
  CHECK_FALSE(parse_bound_id("nope"));
  CHECK(status_name(Status::kViolated) == "violated");
  CHECK(certificate_kind_name(CertificateKind::kFRegularGorenstein) == "F-regular+Gorenstein");
}
