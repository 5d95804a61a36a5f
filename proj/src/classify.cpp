#include "kummer/classify.hpp"

#include <stdexcept>

#include "kummer/fp.hpp"

namespace kummer {

namespace {

void require_unit_at_pi(const CycInt& A, const char* who) {
  if (A.is_zero() || residue_mod_pi(A) == 0) {
    throw std::invalid_argument(std::string(who) + ": requires v_pi(A) = 0");
  }
}

}  // namespace

std::string_view to_string(PrimarityClass cls) {
  switch (cls) {
    case PrimarityClass::not_semi_primary: return "not_semi_primary";
    case PrimarityClass::non_primary: return "non_primary";
    case PrimarityClass::primary: return "primary";
    case PrimarityClass::hyper_primary: return "hyper_primary";
  }
  throw std::logic_error("to_string: bad PrimarityClass");
}

std::pair<bool, std::int64_t> is_semi_primary(const CycInt& A) {
  require_unit_at_pi(A, "is_semi_primary");
  PiExpansion e = pi_expansion(A, 2);
  return {e.digits[1] == 0, e.digits[0]};
}

std::pair<std::int64_t, CycInt> normalize_semi_primary(const CycInt& A) {
  require_unit_at_pi(A, "normalize_semi_primary");
  const std::int64_t p = A.p();
  PiExpansion e = pi_expansion(A, 2);
  const std::int64_t a0 = e.digits[0];
  const std::int64_t a1 = e.digits[1];
  if (a1 == 0) return {0, A};
  std::int64_t j = (p - a1) * mod_inverse(a0, p) % p;
  return {j, CycInt::zeta_power(p, j) * A};
}

PrimarityReport classify_primarity(const CycInt& A) {
  require_unit_at_pi(A, "classify_primarity");
  const std::int64_t p = A.p();

  PiExpansion e = pi_expansion(A, 2);
  const std::int64_t a0 = e.digits[0];
  const bool semi = e.digits[1] == 0;

  // Distinguishing t = p from t >= p+1 needs cap p+2 and no more.
  mpz_class a0_pow;
  mpz_pow_ui(a0_pow.get_mpz_t(), mpz_class(a0).get_mpz_t(), static_cast<unsigned long>(p));
  Valuation t = pi_valuation(A - CycInt::integer(p, a0_pow), p + 2);

  PrimarityClass cls;
  if (!semi) {
    cls = PrimarityClass::not_semi_primary;
  } else if (t.at_least_bound(p + 1)) {
    cls = PrimarityClass::hyper_primary;
  } else if (t.value == p) {
    cls = PrimarityClass::primary;
  } else {
    cls = PrimarityClass::non_primary;
  }

  std::optional<std::int64_t> m;
  if (cls == PrimarityClass::non_primary && t.is_exact() && t.value % 2 == 0) {
    m = t.value / 2;
  }

  bool ok = cls == PrimarityClass::primary || cls == PrimarityClass::hyper_primary ||
            (t.is_exact() && t.value % 2 == 0);

  return PrimarityReport{p, a0, semi, t, cls, m, ok};
}

bool check_hyper_primary_unit_form(const CycInt& A) {
  require_unit_at_pi(A, "check_hyper_primary_unit_form");
  const std::int64_t p = A.p();
  Valuation v = pi_valuation(A - CycInt::integer(p, 1), p + 3);
  return v.is_exact() && v.value == p + 1;
}

}  // namespace kummer
