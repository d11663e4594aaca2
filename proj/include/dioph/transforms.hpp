#pragma once

#include <gmpxx.h>

#include <utility>

namespace dioph::transforms {

/// Quadratic form u^2 - D*v^2 = N obtained from y^2 - kyz + z^2 = k^3 - 5
/// by completing the square.
struct PellForm {
  mpz_class D;
  mpz_class N;

  bool operator==(const PellForm&) const = default;
};

/// For even k = 2d: u^2 - (d^2 - 1) z^2 = 8d^3 - 5, with u = y - dz.
/// Throws std::domain_error for odd k.
PellForm pell_even(const mpz_class& k);

/// For odd k: u^2 - (k^2 - 4) v^2 = k^3 - 5, with z = 2v and u = y - vk.
/// Throws std::domain_error for even k.
PellForm pell_odd(const mpz_class& k);

/// The substitution (y, z) -> (u, v) = (y - (z/2)k, z/2) for even z.
/// The identity u^2 - (k^2-4)v^2 = y^2 - kyz + z^2 holds for every input,
/// solution or not. Throws std::domain_error for odd z.
std::pair<mpz_class, mpz_class> eq1_to_eq3(const mpz_class& k, const mpz_class& y,
                                           const mpz_class& z);

/// Inverse substitution (u, v) -> (y, z) = (u + vk, 2v); a two-sided
/// inverse of eq1_to_eq3 on its domain.
std::pair<mpz_class, mpz_class> eq3_to_eq1(const mpz_class& k, const mpz_class& u,
                                           const mpz_class& v);

/// The k = 12r + 5 branch after dividing out u = 3w:
/// 3w^2 - (4r+1)(12r+7) v^2 = rhs, where 3*rhs = k^3 - 5 exactly.
struct Eq4Form {
  mpz_class r;
  mpz_class quad;  // (4r+1)(12r+7)
  mpz_class rhs;   // ((12r+5)^3 - 5) / 3 = 576r^3 + 720r^2 + 300r + 40

  bool operator==(const Eq4Form&) const = default;
};

Eq4Form eq4_form(const mpz_class& r);

}  // namespace dioph::transforms
