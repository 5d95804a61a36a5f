#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

// Closed-form decomposition of the prime p across the tower Q - K - S and
// the degree-p subfield M (plus the intermediate field N of the primary
// case). Everything is parametric in (p, v, n, primary): the engine never
// constructs the singular number A itself.

namespace kummer {

enum class Extension { K_over_Q, S_over_K, S_over_Q, M_over_Q, N_over_M };

std::string_view to_string(Extension ext);
/// Accepts the CLI spellings "K-Q", "S-K", "S-Q", "M", "N-M" as well as the
/// slash forms "K/Q", ..., "M/Q".
Extension parse_extension(std::string_view s);

/// One (e, f, count) entry: `count` primes with ramification index e and
/// residue degree f over the base.
struct PrimeBlock {
  std::int64_t e;
  std::int64_t f;
  std::int64_t count;

  bool operator==(const PrimeBlock&) const = default;
};

struct DecompShape {
  Extension extension;
  std::int64_t degree;
  std::vector<PrimeBlock> primes;  // sorted by (e, f)

  bool operator==(const DecompShape&) const = default;
};

/// Sorts the blocks by (e, f) and checks the fundamental identity
/// sum e*f*count = degree; throws std::invalid_argument when it fails.
DecompShape make_shape(Extension ext, std::int64_t degree, std::vector<PrimeBlock> primes);

struct CaseParams {
  std::int64_t p;
  std::int64_t v;  // primitive root mod p
  std::int64_t n;  // exponent in [2, p-2]; mu = v^n
  bool primary;

  bool operator==(const CaseParams&) const = default;
};

/// p prime >= 5, v a primitive root, n in [2, p-2]. n = 1 in particular is
/// rejected, never clamped: mu = v would make d = 1.
void validate_case_params(const CaseParams& params);

/// Common ramification index of the ramified primes of M over p in the
/// primary case: the multiplicative order of w = v * mu^{-1} mod p,
/// equivalently (p-1)/gcd(p-1, n-1). Always > 1 for valid params.
std::int64_t compute_d(const CaseParams& params);

/// p is totally ramified in K/Q: one prime with e = p-1, f = 1.
DecompShape decompose_K_over_Q(std::int64_t p);

/// pi splits totally in S/K in the primary case (p primes, e = f = 1) and
/// is fully ramified otherwise (one prime, e = p).
DecompShape decompose_S_over_K(const CaseParams& params);

/// Primary: p primes with e = p-1, f = 1; non-primary: one prime with
/// e = p(p-1), f = 1.
DecompShape decompose_S_over_Q(const CaseParams& params);

/// Primary: one unramified prime plus (p-1)/d primes of index d, so that
/// p = 1 + ((p-1)/d) * d; non-primary: one prime with e = p.
DecompShape decompose_M_over_Q(const CaseParams& params);

/// Relative shape over each ramified prime P of M, primary case only:
/// P is fully ramified in N/M, e = (p-1)/d. Non-primary input is rejected.
DecompShape decompose_N_over_M(const CaseParams& params);

/// Dispatch on the extension label.
DecompShape decompose(const CaseParams& params, Extension ext);

}  // namespace kummer
