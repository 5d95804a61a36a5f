#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "kummer/cyclotomic.hpp"

// Classification of units-at-pi: semi-primary, primary, hyper-primary, and
// the non-primary dichotomy diagnostic. Everything here requires
// v_pi(A) = 0 and works from the first few lambda digits of A.

namespace kummer {

enum class PrimarityClass { not_semi_primary, non_primary, primary, hyper_primary };

std::string_view to_string(PrimarityClass cls);

struct PrimarityReport {
  std::int64_t p;
  std::int64_t residue_a0;  // a0 = A mod pi, lifted to [0, p-1]
  bool semi_primary;        // second lambda digit of A vanishes
  Valuation t;              // v_pi(A - a0^p), cap p+2
  PrimarityClass cls;
  std::optional<std::int64_t> m;  // t = 2m, present iff non_primary with even t
  bool dichotomy_ok;              // primary/hyper, or t even

  bool operator==(const PrimarityReport&) const = default;
};

/// (semi-primary?, a0). Semi-primary means A == a0 mod pi^2 for the integer
/// a0 = A mod pi. Rejects v_pi(A) != 0.
std::pair<bool, std::int64_t> is_semi_primary(const CycInt& A);

/// The zeta-twist (j, zeta^j A) making A semi-primary:
/// j == -a1 * a0^{-1} mod p from the first two lambda digits.
/// j = 0 exactly on already-semi-primary input.
std::pair<std::int64_t, CycInt> normalize_semi_primary(const CycInt& A);

/// Full primarity report for A with v_pi(A) = 0. The witness integer a in
/// "A == a^p mod pi^p" can be fixed to the lift of a0: a^p mod pi^{p+1}
/// depends only on a mod p, since v_pi(p^2) = 2p-2 >= p+1. Non-semi-primary
/// input is not rejected; it is classified as not_semi_primary with t
/// computed anyway (such A always has t = 1).
///
/// dichotomy_ok records whether the singular-number dichotomy shape holds
/// (t >= p, or t = 2m exactly); it is a diagnostic, not an assertion, since
/// nothing here verifies that A is genuinely singular.
PrimarityReport classify_primarity(const CycInt& A);

/// True iff pi^{p+1} exactly divides A - 1 (the normalized primary case is
/// hyper-primary in unit form).
bool check_hyper_primary_unit_form(const CycInt& A);

}  // namespace kummer
