#pragma once

// Drivers behind the CLI: theorem-vs-oracle verification, the exhaustive
// sweep, and the human-readable params / orbit / predicates reports.

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "ff.hpp"

namespace chebgraph::report {

struct VerifyOutcome {
  bool ok = false;
  std::string text;
};

/// Theorem spec vs brute force for T_n on F_q, plus parameters; with
/// `deep`, also the covering checks against the power map.
VerifyOutcome verify_chebyshev(const BigInt& n, const ff::PrimePower& q, bool deep);
/// Same for x -> n x on Z_m.
VerifyOutcome verify_mult(const BigInt& n, std::uint64_t m);

struct SweepOptions {
  std::uint64_t n_max = 60;
  std::uint64_t q_max = 343;
  unsigned jobs = 1;
  /// The involution criterion iterates T_n twice on every element; limit it.
  std::uint64_t involution_q_max = 125;
};

struct SweepCell {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  bool structural_ok = false;
  bool params_ok = false;
  bool closed_form_ok = false;  // N, T0, C
  bool printed_T_agrees = false;
  bool permutation_ok = false;
  bool involution_ok = false;
  bool involution_checked = false;
  bool roundtrip_ok = false;
  std::string printed_T;
  std::string structural_T;
  std::string error;
};

struct SweepSummary {
  SweepOptions options;
  std::uint64_t fields = 0;
  std::vector<SweepCell> cells;  // sorted by (q, n)
  std::uint64_t structural_failures = 0;
  std::uint64_t param_failures = 0;
  std::uint64_t closed_form_failures = 0;
  std::uint64_t printed_T_discrepancies = 0;
  std::uint64_t permutation_failures = 0;
  std::uint64_t involution_failures = 0;
  std::uint64_t involution_checked = 0;
  std::uint64_t roundtrip_failures = 0;
  std::uint64_t errors = 0;
  double seconds = 0;

  /// Everything except the printed-T census, which is informational.
  bool ok() const {
    return structural_failures + param_failures + closed_form_failures + permutation_failures +
               involution_failures + roundtrip_failures + errors ==
           0;
  }
};

SweepSummary sweep(const SweepOptions& options);
std::string format_sweep(const SweepSummary& summary, bool closed_form_report);

std::string params_report(const BigInt& n, const ff::PrimePower& q);

struct OrbitCheck {
  BigInt formula_period;
  std::uint64_t formula_preperiod = 0;
  bool iterated = false;
  std::uint64_t iterated_period = 0;
  std::uint64_t iterated_preperiod = 0;
  bool agree() const {
    return !iterated || (formula_period == iterated_period && formula_preperiod == iterated_preperiod);
  }
};

OrbitCheck orbit_check(const BigInt& n, const ff::PrimePower& q, std::uint64_t a);
std::string orbit_report(const BigInt& n, const ff::PrimePower& q, std::uint64_t a);

std::string predicates_report(const BigInt& n, const ff::PrimePower& q);

}  // namespace chebgraph::report
