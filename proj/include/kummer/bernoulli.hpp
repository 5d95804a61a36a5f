#pragma once

#include <cstdint>
#include <map>
#include <vector>

// Bernoulli numbers mod p and irregular-pair detection. An irregular pair
// (p, k) has B_k == 0 mod p for even k in [2, p-3]; each pair is mapped to
// the eigenvalue exponent n with mu = v^n, the parameter the decomposition
// engine consumes.

namespace kummer {

struct IrregularPair {
  std::int64_t k;   // even index with B_k == 0 mod p
  std::int64_t n;   // exponent in [2, p-2], n == 1-k mod p-1
  std::int64_t mu;  // v^n mod p
};

struct IrregularityReport {
  std::int64_t p;
  std::int64_t v;  // primitive root used to express mu = v^n
  std::vector<IrregularPair> pairs;

  /// The index r: number of irregular pairs; r >= 1 iff p is irregular.
  std::int64_t index() const { return static_cast<std::int64_t>(pairs.size()); }
};

/// B_k mod p for every even k with 2 <= k <= p-3. Such k are never divisible
/// by p-1, so the von Staudt-Clausen denominators are prime to p and the
/// residues are well defined. Computed by the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 carried out mod p.
std::map<std::int64_t, std::int64_t> bernoulli_mod_p(std::int64_t p);

/// Irregular pairs of p, with n derived from k by n == 1-k (mod p-1),
/// normalized into [2, p-2]. The k -> n orientation is a convention of this
/// library (see README); the decomposition engine also accepts n directly.
IrregularityReport irregular_pairs(std::int64_t p);
IrregularityReport irregular_pairs(std::int64_t p, std::int64_t v);

}  // namespace kummer
