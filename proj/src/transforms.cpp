#include "dioph/transforms.hpp"

#include <cassert>
#include <stdexcept>

namespace dioph::transforms {

PellForm pell_even(const mpz_class& k) {
  if (mpz_odd_p(k.get_mpz_t())) throw std::domain_error("pell_even: k must be even");
  mpz_class d = k / 2;
  return {d * d - 1, 8 * d * d * d - 5};
}

PellForm pell_odd(const mpz_class& k) {
  if (mpz_even_p(k.get_mpz_t())) throw std::domain_error("pell_odd: k must be odd");
  return {k * k - 4, k * k * k - 5};
}

std::pair<mpz_class, mpz_class> eq1_to_eq3(const mpz_class& k, const mpz_class& y,
                                           const mpz_class& z) {
  if (mpz_odd_p(z.get_mpz_t())) throw std::domain_error("eq1_to_eq3: z must be even");
  mpz_class v = z / 2;
  return {y - v * k, v};
}

std::pair<mpz_class, mpz_class> eq3_to_eq1(const mpz_class& k, const mpz_class& u,
                                           const mpz_class& v) {
  return {u + v * k, 2 * v};
}

Eq4Form eq4_form(const mpz_class& r) {
  mpz_class k = 12 * r + 5;
  mpz_class cube = k * k * k - 5;
  assert(cube % 3 == 0);
  mpz_class rhs = cube / 3;
  // same value in expanded form; keeps the coefficients honest
  assert(rhs == 576 * r * r * r + 720 * r * r + 300 * r + 40);
  return {r, (4 * r + 1) * (12 * r + 7), rhs};
}

}  // namespace dioph::transforms
