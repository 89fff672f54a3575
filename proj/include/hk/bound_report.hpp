#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

/// Stable identifiers of the checked inequalities. The string forms are part
/// of the JSON/CSV report format and the CLI filters.
enum class BoundId {
  kSandwich,
  kDuality,
  kType,
  kMinimalMultiplicity,
  kSmallEhk,
  kSmallEhkUnmixed,
  kEmbeddingDimension,
  kGraded,
  kGorensteinNonFRegular,
  kScaling,
  kRadical,
  kNested,
  kDimension,
  kAssociativity,
};

/// Every id that a run report must contain exactly once.
const std::vector<BoundId>& reported_bound_ids();
std::string_view bound_id_name(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);

enum class Status { kHolds, kViolated, kInconclusive };
std::string_view status_name(Status s);

enum class CertificateKind { kNone, kRegular, kFRegularGorenstein, kCMFRational };
std::string_view certificate_kind_name(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::kNone;
  /// The inequality instance that fired, e.g. "1499/1000 + 1/50 < 2/1".
  std::string premise;
  /// Stable id of the bound used.
  std::string citation;
};

/// One inequality instantiated on computed quantities. Conditional bounds
/// ("if R is not F-regular then ...") never report `kViolated`; a failure of
/// their inequality by more than the tolerance yields a certificate instead.
struct BoundReport {
  BoundId id = BoundId::kSandwich;
  std::string statement;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  Status status = Status::kInconclusive;
  Rational tolerance = 0;
  bool conditional = false;
  /// lhs >= rhs - tolerance, whatever the status.
  bool inequality_satisfied = false;
  std::vector<std::string> substitutions;
  std::vector<std::string> hypotheses;
  /// Named intermediate quantities (e, t, a', ...), exact.
  std::vector<std::pair<std::string, std::string>> details;
  std::string note;
  std::string citation;
  std::optional<Certificate> certificate;

  bool violated() const { return status == Status::kViolated; }
};

BoundReport make_report(BoundId id, std::string statement);
BoundReport inconclusive(BoundId id, std::string statement, std::string reason);

/// lhs >= rhs - tol decides holds/violated for an unconditional bound.
void judge_lower_bound(BoundReport& r, const Rational& lhs, const Rational& rhs, const Rational& tol);
/// For "if R is not <kind> then lhs >= rhs": status holds, and a certificate
/// of `kind` when lhs + tol < rhs.
void judge_conditional(BoundReport& r, const Rational& lhs, const Rational& rhs, const Rational& tol,
                       CertificateKind kind);

}  // namespace hk
