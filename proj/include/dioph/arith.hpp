#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace dioph::arith {

/// Least non-negative residue of a modulo m, i.e. the unique value in
/// [0, m) congruent to a. Requires m >= 1 (std::domain_error otherwise).
mpz_class mod_canon(const mpz_class& a, const mpz_class& m);

/// Jacobi symbol (a|n) for odd n >= 1, computed with the reciprocity
/// recursion (factor out twos, flip sign when both arguments are
/// 3 mod 4, swap, reduce). Throws std::domain_error for even or
/// non-positive n.
int jacobi(const mpz_class& a, const mpz_class& n);

/// Legendre symbol (a|p) for an odd prime p: 0 if p | a, +1 if a is a
/// nonzero square mod p, -1 otherwise. Delegates to the Jacobi recursion,
/// never to exponentiation. Throws std::domain_error unless p is an odd
/// prime (verified with is_prime).
int legendre(const mpz_class& a, const mpz_class& p);

/// Seed for the randomized witness rounds used on inputs wider than 64 bits.
inline constexpr unsigned long kPrimalitySeed = 0x193a6f55ul;

/// Primality of |n| (sign ignored; 0 and 1 are not prime). Deterministic
/// for |n| < 2^64 via the 12 fixed strong-probable-prime bases 2..37;
/// wider inputs get 32 Miller-Rabin rounds from a generator seeded per
/// call, so results are reproducible.
bool is_prime(const mpz_class& n, unsigned long seed = kPrimalitySeed);

struct Factorization {
  int sign = 1;                                          // +1 or -1
  std::vector<std::pair<mpz_class, unsigned>> factors;   // strictly increasing primes

  /// sign * prod p_i^e_i
  mpz_class value() const;
};

/// Exact factorization of n != 0 (std::domain_error for 0). Trial division
/// by 2, 3 and the 6k+-1 wheel up to 10^6, then Pollard-Brent splitting
/// with every emitted factor certified by is_prime.
Factorization factorize(const mpz_class& n);

/// { t^2 mod m : t in [0, m) }, sorted ascending. Requires m >= 2.
std::vector<mpz_class> squares_mod(const mpz_class& m);

/// Floor square root of n >= 0 by Newton iteration seeded from the bit
/// length. Exact integer arithmetic throughout.
mpz_class isqrt(const mpz_class& n);

/// True iff n is a perfect square; stores the non-negative root if
/// requested.
bool is_perfect_square(const mpz_class& n, mpz_class* root = nullptr);

}  // namespace dioph::arith
