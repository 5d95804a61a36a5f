#include "kummer/bernoulli.hpp"

#include <stdexcept>

#include "kummer/fp.hpp"

namespace kummer {

std::map<std::int64_t, std::int64_t> bernoulli_mod_p(std::int64_t p) {
  require_prime(p);
  const std::int64_t top = p - 3;

  // B[m] mod p for 0 <= m <= p-3. Every such B_m is p-integral and every
  // inverse taken below is of m+1 <= p-2, so the recurrence stays in F_p.
  std::vector<std::int64_t> bern(top + 1, 0);
  bern[0] = 1;

  // row[j] = C(M, j) mod p, maintained by Pascal updates; starts at M = 1.
  std::vector<std::int64_t> row(top + 2, 0);
  row[0] = 1;
  row[1] = 1;

  for (std::int64_t m = 1; m <= top; ++m) {
    for (std::int64_t j = m + 1; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % p;
    // row is now C(m+1, .)
    std::int64_t s = 0;
    for (std::int64_t j = 0; j < m; ++j) s = (s + row[j] * bern[j]) % p;
    bern[m] = (p - s) % p * mod_inverse(m + 1, p) % p;
  }

  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t k = 2; k <= top; k += 2) out[k] = bern[k];
  return out;
}

IrregularityReport irregular_pairs(std::int64_t p) {
  return irregular_pairs(p, smallest_primitive_root(p));
}

IrregularityReport irregular_pairs(std::int64_t p, std::int64_t v) {
  require_prime(p);
  if (!is_primitive_root(p, v)) {
    throw std::invalid_argument("irregular_pairs: v is not a primitive root mod p");
  }
  IrregularityReport report{p, v, {}};
  for (const auto& [k, bk] : bernoulli_mod_p(p)) {
    if (bk != 0) continue;
    std::int64_t n = ((1 - k) % (p - 1) + (p - 1)) % (p - 1);
    // k even in [2, p-3] forces n into [2, p-2] already.
    report.pairs.push_back(IrregularPair{k, n, mod_pow(v, n, p)});
  }
  return report;
}

}  // namespace kummer
