#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hk/bound_report.hpp"
#include "hk/hk_engine.hpp"
#include "hk/quotient.hpp"

namespace hk {

/// S = R[v]/(v^n - z). S is free over R with basis 1, v, ..., v^(n-1).
struct RadicalExtension {
  QuotientRing base;
  Polynomial z;
  unsigned n = 1;
  QuotientRing extended;
  /// Empty when n = 1 and S = R.
  std::string v_name;
  /// [Q(S):Q(R)] used by the checks: n, which is exact when R is a normal
  /// domain and z is a minimal generator, and an upper bound otherwise.
  std::uint64_t b_assumed = 1;
  bool b_exact = false;
  /// The user vouches that R is a normal domain.
  bool normal_asserted = false;
  /// The extended presentation is weighted homogeneous.
  bool graded = false;
  std::vector<std::string> hypotheses;

  Polynomial lift(const Polynomial& f) const;
  Ideal lift(const Ideal& J) const;
  /// The root v (z itself when n = 1).
  Polynomial root() const;
};

/// z ∈ m and z ∉ m^2 + D.
bool is_minimal_generator(const QuotientRing& R, const Polynomial& z);

/// Adjoins v with v^n = z. v gets weight deg(z)/n when n divides deg(z);
/// otherwise the base weights are multiplied by n and v gets weight deg(z).
/// Throws "z is zero in R" when z ∈ D.
RadicalExtension build_radical_extension(const QuotientRing& R, const Polynomial& z, unsigned n,
                                         bool normal_asserted, std::string v_name = "");

/// e_HK(J; R) against e_HK(JS; S)/b, sample by sample.
BoundReport check_scaling_4_1(const RadicalExtension& ext, const Ideal& J, unsigned e_max,
                              std::optional<std::size_t> d = std::nullopt);

/// e_HK(R) >= (b(n-1)e + n e_HK(S)) / (b(a'(n-1)+1)) with a' = e = λ(R/params).
/// Throws "z lies in the parameter ideal" when z ∈ params + D.
BoundReport check_radical_bound_4_4(const RadicalExtension& ext, const Ideal& params, const HKEstimate& base_hk,
                                    unsigned e_max, std::optional<std::size_t> d = std::nullopt);

/// Exact check of λ(R/((I,v^n)^[q] : v^((n-1)q))) >= λ(R/((I,v^(n+1))^[q] : v^(nq)))
/// for every q in `qs` and 1 <= n < n_max, together with the ideal inclusion
/// behind it.
BoundReport check_nested_monotonicity_4_8(const QuotientRing& R, const Ideal& I, const Polynomial& v,
                                          unsigned n_max, const std::vector<std::uint64_t>& qs);

struct TowerStep {
  std::size_t index = 0;
  std::string ring;
  HKEstimate hk;
  /// λ(R_i/(v_1..v_i, y_{i+1}..y_d)) equals e(R_0).
  bool multiplicity_constant = false;
  BoundReport report;
};

struct TowerResult {
  std::int64_t e = 0;
  /// d-subsets of the generators that are not minimal reductions.
  std::vector<std::string> subset_failures;
  std::string socle_element;
  /// max{i : u ∈ m^i + (y_1..y_d)}.
  std::size_t socle_order = 0;
  std::vector<TowerStep> steps;
  std::string truncated;

  std::vector<BoundReport> reports() const;
};

/// R_0 = R, R_i = R_{i-1}[v_i] with v_i^n = y_i, checking
/// δ_{i-1} >= δ_i/(e(n-1)+1) at each step, where e_HK(R_i) = 1 + δ_i.
TowerResult run_tower(const QuotientRing& R, const std::vector<Polynomial>& gens, unsigned n, std::size_t depth,
                      unsigned e_max, bool normal_asserted, std::optional<std::size_t> d = std::nullopt);

}  // namespace hk
