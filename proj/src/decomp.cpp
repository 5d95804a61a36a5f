#include "kummer/decomp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kummer/fp.hpp"

namespace kummer {

std::string_view to_string(Extension ext) {
  switch (ext) {
    case Extension::K_over_Q: return "K/Q";
    case Extension::S_over_K: return "S/K";
    case Extension::S_over_Q: return "S/Q";
    case Extension::M_over_Q: return "M/Q";
    case Extension::N_over_M: return "N/M";
  }
  throw std::logic_error("to_string: bad Extension");
}

Extension parse_extension(std::string_view s) {
  if (s == "K-Q" || s == "K/Q" || s == "K") return Extension::K_over_Q;
  if (s == "S-K" || s == "S/K") return Extension::S_over_K;
  if (s == "S-Q" || s == "S/Q" || s == "S") return Extension::S_over_Q;
  if (s == "M" || s == "M-Q" || s == "M/Q") return Extension::M_over_Q;
  if (s == "N-M" || s == "N/M") return Extension::N_over_M;
  throw std::invalid_argument("unknown extension '" + std::string(s) +
                              "' (expected one of M, S-K, S-Q, K-Q, N-M)");
}

DecompShape make_shape(Extension ext, std::int64_t degree, std::vector<PrimeBlock> primes) {
  std::int64_t total = 0;
  for (const auto& b : primes) {
    if (b.e < 1 || b.f < 1 || b.count < 1) {
      throw std::invalid_argument("DecompShape: e, f, count must all be >= 1");
    }
    total += b.e * b.f * b.count;
  }
  if (total != degree) {
    throw std::invalid_argument("DecompShape: sum e*f*count = " + std::to_string(total) +
                                " != degree " + std::to_string(degree));
  }
  std::sort(primes.begin(), primes.end(), [](const PrimeBlock& a, const PrimeBlock& b) {
    return std::pair(a.e, a.f) < std::pair(b.e, b.f);
  });
  return DecompShape{ext, degree, std::move(primes)};
}

void validate_case_params(const CaseParams& params) {
  require_prime(params.p);
  if (!is_primitive_root(params.p, params.v)) {
    throw std::invalid_argument("v = " + std::to_string(params.v) +
                                " is not a primitive root mod " + std::to_string(params.p));
  }
  if (params.n < 2 || params.n > params.p - 2) {
    throw std::invalid_argument("n = " + std::to_string(params.n) +
                                " outside [2, p-2] for p = " + std::to_string(params.p));
  }
}

std::int64_t compute_d(const CaseParams& params) {
  validate_case_params(params);
  const std::int64_t p = params.p;
  // w = v * mu^{-1} = v^{1-n}
  std::int64_t exp = ((1 - params.n) % (p - 1) + (p - 1)) % (p - 1);
  std::int64_t d = mult_order(p, mod_pow(params.v, exp, p));
  assert(d == (p - 1) / std::gcd(p - 1, params.n - 1));
  assert(d > 1);
  return d;
}

DecompShape decompose_K_over_Q(std::int64_t p) {
  require_prime(p);
  return make_shape(Extension::K_over_Q, p - 1, {{p - 1, 1, 1}});
}

DecompShape decompose_S_over_K(const CaseParams& params) {
  validate_case_params(params);
  const std::int64_t p = params.p;
  if (params.primary) return make_shape(Extension::S_over_K, p, {{1, 1, p}});
  return make_shape(Extension::S_over_K, p, {{p, 1, 1}});
}

DecompShape decompose_S_over_Q(const CaseParams& params) {
  validate_case_params(params);
  const std::int64_t p = params.p;
  if (params.primary) return make_shape(Extension::S_over_Q, p * (p - 1), {{p - 1, 1, p}});
  return make_shape(Extension::S_over_Q, p * (p - 1), {{p * (p - 1), 1, 1}});
}

DecompShape decompose_M_over_Q(const CaseParams& params) {
  validate_case_params(params);
  const std::int64_t p = params.p;
  if (!params.primary) return make_shape(Extension::M_over_Q, p, {{p, 1, 1}});
  const std::int64_t d = compute_d(params);
  return make_shape(Extension::M_over_Q, p, {{1, 1, 1}, {d, 1, (p - 1) / d}});
}

DecompShape decompose_N_over_M(const CaseParams& params) {
  validate_case_params(params);
  if (!params.primary) {
    throw std::invalid_argument("decompose_N_over_M: defined for the primary case only");
  }
  const std::int64_t rel = (params.p - 1) / compute_d(params);
  return make_shape(Extension::N_over_M, rel, {{rel, 1, 1}});
}

DecompShape decompose(const CaseParams& params, Extension ext) {
  switch (ext) {
    case Extension::K_over_Q: {
      validate_case_params(params);
      return decompose_K_over_Q(params.p);
    }
    case Extension::S_over_K: return decompose_S_over_K(params);
    case Extension::S_over_Q: return decompose_S_over_Q(params);
    case Extension::M_over_Q: return decompose_M_over_Q(params);
    case Extension::N_over_M: return decompose_N_over_M(params);
  }
  throw std::logic_error("decompose: bad Extension");
}

}  // namespace kummer
