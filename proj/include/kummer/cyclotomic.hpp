#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

// Exact arithmetic in Z[zeta_p] together with the lambda-adic engine,
// lambda = zeta - 1. Elements live in the power basis zeta^0..zeta^{p-2};
// the Galois action is a cheap index permutation there, and the expansion
// engine converts to lambda digits only when asked.

namespace kummer {

/// Element of Z[zeta_p], canonically reduced: zeta^{p-1} is always rewritten
/// as -(1 + zeta + ... + zeta^{p-2}). Coefficients are unbounded integers.
class CycInt {
 public:
  /// Zero element of Z[zeta_p].
  explicit CycInt(std::int64_t p);

  /// Takes ownership of exactly p-1 coefficients, c[i] the coefficient of
  /// zeta^i. Throws if the length is wrong.
  CycInt(std::int64_t p, std::vector<mpz_class> coeffs);

  static CycInt integer(std::int64_t p, const mpz_class& m);
  /// Canonical form of zeta^k, any integer k.
  static CycInt zeta_power(std::int64_t p, std::int64_t k);
  /// lambda = zeta - 1, the uniformizer of pi.
  static CycInt lambda(std::int64_t p);

  std::int64_t p() const { return p_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool is_zero() const;
  /// True iff the element is a rational integer (all zeta coefficients
  /// above index 0 vanish in the canonical representation).
  bool is_integer() const;

  bool operator==(const CycInt&) const = default;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
  friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
  friend CycInt operator*(const CycInt& lhs, const CycInt& rhs);

 private:
  std::int64_t p_;
  std::vector<mpz_class> c_;
};

/// Image of x under zeta -> zeta^a; requires gcd(a, p) = 1.
CycInt galois_apply(std::int64_t a, const CycInt& x);

/// Complex conjugate, i.e. galois_apply(p-1, .).
CycInt conjugate(const CycInt& x);

/// Product of all p-1 conjugates. Always a rational integer; throws
/// std::logic_error if the reduced product is not (broken reduction).
mpz_class norm(const CycInt& x);

/// Image of x in Z[zeta]/pi = F_p (zeta -> 1), in [0, p-1].
std::int64_t residue_mod_pi(const CycInt& x);

/// Exact valuation result: the lambda-adic valuation when it could be
/// resolved below the cap, `at_least_cap` when x != 0 but v >= cap, and
/// `infinite` exactly for x = 0.
struct Valuation {
  enum class Kind { exact, at_least_cap, infinite };

  Kind kind;
  std::int64_t value;  // the valuation if exact, the cap if at_least_cap

  static Valuation exact(std::int64_t v) { return {Kind::exact, v}; }
  static Valuation at_least(std::int64_t cap) { return {Kind::at_least_cap, cap}; }
  static Valuation infinite() { return {Kind::infinite, 0}; }

  bool is_exact() const { return kind == Kind::exact; }
  /// v_pi(x) >= bound, whichever branch holds.
  bool at_least_bound(std::int64_t bound) const {
    return kind == Kind::infinite || value >= bound;
  }
  bool operator==(const Valuation&) const = default;
};

/// Default cap is 2p+2: enough to settle every classifier threshold
/// (primary needs p, hyper-primary p+1) with margin.
std::int64_t default_valuation_cap(std::int64_t p);

Valuation pi_valuation(const CycInt& x, std::int64_t cap);
Valuation pi_valuation(const CycInt& x);

/// lambda-adic digit vector: x == sum digits[i] * lambda^i (mod pi^k),
/// digits in [0, p-1], least significant first. The digits are unique.
struct PiExpansion {
  std::int64_t p;
  std::vector<std::int64_t> digits;

  std::int64_t precision() const { return static_cast<std::int64_t>(digits.size()); }
};

PiExpansion pi_expansion(const CycInt& x, std::int64_t k);

/// y with lambda * y == x exactly; throws std::domain_error when
/// v_pi(x) == 0 (x not divisible by lambda).
CycInt div_lambda_exact(const CycInt& x);

}  // namespace kummer
