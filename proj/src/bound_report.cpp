#include "hk/bound_report.hpp"

#include <array>

namespace hk {

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 14> kNames{{
    {BoundId::kSandwich, "sandwich"},
    {BoundId::kDuality, "duality_3_2"},
    {BoundId::kType, "type_3_3"},
    {BoundId::kMinimalMultiplicity, "minmult_3_4"},
    {BoundId::kSmallEhk, "smallehk_3_5"},
    {BoundId::kSmallEhkUnmixed, "smallehk_3_6"},
    {BoundId::kEmbeddingDimension, "embdim_3_7"},
    {BoundId::kGraded, "graded_3_10"},
    {BoundId::kGorensteinNonFRegular, "gor_nonfreg_3_12"},
    {BoundId::kScaling, "scaling_4_1"},
    {BoundId::kRadical, "radical_4_4"},
    {BoundId::kNested, "nested_4_8"},
    {BoundId::kDimension, "dimension_4_10"},
    {BoundId::kAssociativity, "associativity_2_7"},
}};

}  // namespace

const std::vector<BoundId>& reported_bound_ids() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> v;
    for (const auto& [id, name] : kNames)
      if (id != BoundId::kAssociativity) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string_view bound_id_name(BoundId id) {
  for (const auto& [i, name] : kNames)
    if (i == id) return name;
  return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& [i, n] : kNames)
    if (n == name) return i;
  return std::nullopt;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kHolds:
      return "holds";
    case Status::kViolated:
      return "violated";
    case Status::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kNone:
      return "none";
    case CertificateKind::kRegular:
      return "regular";
    case CertificateKind::kFRegularGorenstein:
      return "F-regular+Gorenstein";
    case CertificateKind::kCMFRational:
      return "CM+F-rational";
  }
  return "none";
}

BoundReport make_report(BoundId id, std::string statement) {
  BoundReport r;
  r.id = id;
  r.statement = std::move(statement);
  r.citation = std::string(bound_id_name(id));
  return r;
}

BoundReport inconclusive(BoundId id, std::string statement, std::string reason) {
  BoundReport r = make_report(id, std::move(statement));
  r.status = Status::kInconclusive;
  r.note = std::move(reason);
  return r;
}

void judge_lower_bound(BoundReport& r, const Rational& lhs, const Rational& rhs, const Rational& tol) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tol;
  r.inequality_satisfied = lhs >= rhs - tol;
  r.status = r.inequality_satisfied ? Status::kHolds : Status::kViolated;
}

void judge_conditional(BoundReport& r, const Rational& lhs, const Rational& rhs, const Rational& tol,
                       CertificateKind kind) {
  r.conditional = true;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tol;
  r.inequality_satisfied = lhs >= rhs - tol;
  r.status = Status::kHolds;
  if (lhs + tol < rhs) {
    Certificate c;
    c.kind = kind;
    c.premise = to_string(lhs) + " + " + to_string(tol) + " < " + to_string(rhs);
    c.citation = r.citation;
    r.certificate = c;
  }
}

}  // namespace hk
