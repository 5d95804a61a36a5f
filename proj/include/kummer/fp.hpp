#pragma once

#include <cstdint>
#include <vector>

// Residue arithmetic mod p and mod p-1: primitive roots, multiplicative
// orders, discrete logs. All moduli here are odd primes p >= 5; every entry
// point validates its inputs and throws std::invalid_argument on violation.

namespace kummer {

/// A residue mod an odd prime p >= 5, kept normalized to [0, p).
struct FpScalar {
  std::int64_t value;
  std::int64_t modulus;

  bool operator==(const FpScalar&) const = default;
};

/// Normalizes x mod p and packs it; rejects non-prime or p < 5.
FpScalar make_fp(std::int64_t p, std::int64_t x);

bool is_prime(std::int64_t m);

/// Throws unless p is a prime >= 5.
void require_prime(std::int64_t p);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t mod_inverse(std::int64_t x, std::int64_t p);

/// Distinct prime divisors of m >= 2, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t m);

/// True iff the multiplicative order of v mod p is exactly p-1.
/// v == 0 mod p is rejected.
bool is_primitive_root(std::int64_t p, std::int64_t v);

/// Least v >= 2 generating (Z/p)^*.
std::int64_t smallest_primitive_root(std::int64_t p);

/// Least t >= 1 with x^t == 1 mod p; divides p-1. x == 0 mod p is rejected.
std::int64_t mult_order(std::int64_t p, std::int64_t x);

/// The unique n in [0, p-2] with v^n == y mod p, by exhaustive scan
/// (p stays at desk scale here, no need for baby-step/giant-step).
/// Requires v to be a primitive root and y != 0 mod p.
std::int64_t discrete_log(std::int64_t p, std::int64_t v, std::int64_t y);

}  // namespace kummer
