#include "kummer/fp.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kummer {

namespace {

std::int64_t normalize(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  if (m % 3 == 0) return m == 3;
  for (std::int64_t d = 5; d * d <= m; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("p must be a prime >= 5, got " + std::to_string(p));
  }
}

FpScalar make_fp(std::int64_t p, std::int64_t x) {
  require_prime(p);
  return FpScalar{normalize(x, p), p};
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
  if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
  unsigned __int128 acc = 1;
  unsigned __int128 b = static_cast<unsigned __int128>(normalize(base, m));
  while (exp > 0) {
    if (exp & 1) acc = acc * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t p) {
  std::int64_t r = normalize(x, p);
  if (r == 0) throw std::invalid_argument("mod_inverse: x == 0 mod p");
  return mod_pow(r, p - 2, p);
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("prime_factors: m must be >= 2");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_primitive_root(std::int64_t p, std::int64_t v) {
  return mult_order(p, v) == p - 1;
}

std::int64_t smallest_primitive_root(std::int64_t p) {
  require_prime(p);
  for (std::int64_t v = 2; v < p; ++v) {
    if (is_primitive_root(p, v)) return v;
  }
  throw std::logic_error("smallest_primitive_root: no generator found");
}

std::int64_t mult_order(std::int64_t p, std::int64_t x) {
  require_prime(p);
  std::int64_t r = normalize(x, p);
  if (r == 0) throw std::invalid_argument("mult_order: x == 0 mod p");
  std::int64_t t = p - 1;
  for (std::int64_t q : prime_factors(p - 1)) {
    while (t % q == 0 && mod_pow(r, t / q, p) == 1) t /= q;
  }
  return t;
}

std::int64_t discrete_log(std::int64_t p, std::int64_t v, std::int64_t y) {
  require_prime(p);
  std::int64_t g = normalize(v, p);
  std::int64_t target = normalize(y, p);
  if (target == 0) throw std::invalid_argument("discrete_log: y == 0 mod p");
  if (!is_primitive_root(p, g)) {
    throw std::invalid_argument("discrete_log: v is not a primitive root mod p");
  }
  std::int64_t acc = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    if (acc == target) return e;
    acc = static_cast<std::int64_t>(
        static_cast<unsigned __int128>(acc) * g % p);
  }
  throw std::logic_error("discrete_log: scan exhausted");
}

}  // namespace kummer
