#include "kummer/cyclotomic.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "kummer/fp.hpp"

namespace kummer {

namespace {

// Canonical reduction of a length-p coefficient vector (indices for
// zeta^0..zeta^{p-1}): zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
std::vector<mpz_class> reduce_wrapped(std::int64_t p, std::vector<mpz_class> w) {
  assert(static_cast<std::int64_t>(w.size()) == p);
  std::vector<mpz_class> out(p - 1);
  for (std::int64_t i = 0; i + 1 < p; ++i) out[i] = w[i] - w[p - 1];
  return out;
}

void require_same_field(const CycInt& x, const CycInt& y) {
  if (x.p() != y.p()) {
    throw std::invalid_argument("CycInt: mismatched p (" + std::to_string(x.p()) +
                                " vs " + std::to_string(y.p()) + ")");
  }
}

}  // namespace

CycInt::CycInt(std::int64_t p) : p_(p), c_(static_cast<std::size_t>(p - 1)) {
  require_prime(p);
}

CycInt::CycInt(std::int64_t p, std::vector<mpz_class> coeffs) : p_(p), c_(std::move(coeffs)) {
  require_prime(p);
  if (static_cast<std::int64_t>(c_.size()) != p - 1) {
    throw std::invalid_argument("CycInt: expected " + std::to_string(p - 1) +
                                " coefficients, got " + std::to_string(c_.size()));
  }
}

CycInt CycInt::integer(std::int64_t p, const mpz_class& m) {
  CycInt x(p);
  x.c_[0] = m;
  return x;
}

CycInt CycInt::zeta_power(std::int64_t p, std::int64_t k) {
  require_prime(p);
  std::int64_t r = k % p;
  if (r < 0) r += p;
  CycInt x(p);
  if (r < p - 1) {
    x.c_[static_cast<std::size_t>(r)] = 1;
  } else {
    for (auto& c : x.c_) c = -1;
  }
  return x;
}

CycInt CycInt::lambda(std::int64_t p) {
  CycInt x(p);
  x.c_[0] = -1;
  x.c_[1] = 1;
  return x;
}

bool CycInt::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

CycInt CycInt::operator-() const {
  CycInt out(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  require_same_field(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  require_same_field(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycInt operator*(const CycInt& lhs, const CycInt& rhs) {
  require_same_field(lhs, rhs);
  const std::int64_t p = lhs.p();
  // Schoolbook product, exponents folded mod p on the fly (zeta^p = 1).
  std::vector<mpz_class> w(static_cast<std::size_t>(p));
  mpz_class term;
  for (std::int64_t i = 0; i + 1 < p; ++i) {
    const mpz_class& a = lhs.coeffs()[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (std::int64_t j = 0; j + 1 < p; ++j) {
      const mpz_class& b = rhs.coeffs()[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      term = a * b;
      w[static_cast<std::size_t>((i + j) % p)] += term;
    }
  }
  return CycInt(p, reduce_wrapped(p, std::move(w)));
}

CycInt galois_apply(std::int64_t a, const CycInt& x) {
  const std::int64_t p = x.p();
  std::int64_t r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw std::invalid_argument("galois_apply: exponent divisible by p");
  std::vector<mpz_class> w(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i + 1 < p; ++i) {
    w[static_cast<std::size_t>(r * i % p)] = x.coeffs()[static_cast<std::size_t>(i)];
  }
  return CycInt(p, reduce_wrapped(p, std::move(w)));
}

CycInt conjugate(const CycInt& x) { return galois_apply(x.p() - 1, x); }

mpz_class norm(const CycInt& x) {
  CycInt acc = x;
  for (std::int64_t a = 2; a < x.p(); ++a) acc = acc * galois_apply(a, x);
  if (!acc.is_integer()) {
    throw std::logic_error("norm: product of conjugates is not a rational integer");
  }
  return acc.coeffs()[0];
}

std::int64_t residue_mod_pi(const CycInt& x) {
  mpz_class sum = 0;
  for (const auto& c : x.coeffs()) sum += c;
  return static_cast<std::int64_t>(
      mpz_fdiv_ui(sum.get_mpz_t(), static_cast<unsigned long>(x.p())));
}

std::int64_t default_valuation_cap(std::int64_t p) { return 2 * p + 2; }

Valuation pi_valuation(const CycInt& x, std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("pi_valuation: cap must be >= 1");
  if (x.is_zero()) return Valuation::infinite();
  CycInt cur = x;
  for (std::int64_t t = 0; t < cap; ++t) {
    if (residue_mod_pi(cur) != 0) return Valuation::exact(t);
    cur = div_lambda_exact(cur);
  }
  return Valuation::at_least(cap);
}

Valuation pi_valuation(const CycInt& x) {
  return pi_valuation(x, default_valuation_cap(x.p()));
}

PiExpansion pi_expansion(const CycInt& x, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("pi_expansion: precision must be >= 1");
  const std::int64_t p = x.p();
  PiExpansion out{p, {}};
  out.digits.reserve(static_cast<std::size_t>(k));
  CycInt cur = x;
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t digit = residue_mod_pi(cur);
    out.digits.push_back(digit);
    cur -= CycInt::integer(p, digit);
    cur = div_lambda_exact(cur);
  }
  return out;
}

CycInt div_lambda_exact(const CycInt& x) {
  const std::int64_t p = x.p();
  const auto& c = x.coeffs();

  mpz_class total = 0;
  for (const auto& ci : c) total += ci;
  if (mpz_fdiv_ui(total.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    throw std::domain_error("div_lambda_exact: element not divisible by lambda");
  }

  // Solve (x - 1) g(x) = f(x) + s Phi_p(x) over Z[x] with s = -f(1)/p.
  // Matching coefficients from the top: g_{p-2} = s, g_{j-1} = g_j + c_j + s,
  // and the x^0 row closes exactly because s was chosen that way.
  mpz_class s = -total / p;
  std::vector<mpz_class> g(static_cast<std::size_t>(p - 1));
  g[static_cast<std::size_t>(p - 2)] = s;
  for (std::int64_t j = p - 2; j >= 1; --j) {
    g[static_cast<std::size_t>(j - 1)] =
        g[static_cast<std::size_t>(j)] + c[static_cast<std::size_t>(j)] + s;
  }
  assert(-g[0] == c[0] + s);
  return CycInt(p, std::move(g));
}

}  // namespace kummer
