#include "dioph/arith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dioph::arith {

namespace {

constexpr uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                     29, 31, 37, 41, 43, 47, 53, 59, 61,
                                     67, 71, 73, 79, 83, 89, 97};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable prime test to base a; n odd, n > 2, a not divisible by n.
bool sprp_u64(uint64_t n, uint64_t a) {
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 97ull * 97ull) return true;
  // Deterministic for n < 2^64 with the first twelve prime bases.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (!sprp_u64(n, a)) return false;
  }
  return true;
}

// n odd, > 2, wider than 64 bits. 32 randomized strong tests.
bool miller_rabin_mpz(const mpz_class& n, unsigned long seed) {
  mpz_class d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  mpz_class nm1 = n - 1;
  for (int round = 0; round < 32; ++round) {
    mpz_class a = rng.get_z_range(n - 3) + 2;  // uniform in [2, n-2]
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

constexpr unsigned long kTrialBound = 1000000ul;

// Pollard-Brent with batched gcds. n odd composite, no factor <= 10^6.
mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  while (true) {
    mpz_class y = rng.get_z_range(n - 1) + 1;
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long limit = std::min(batch, r - k);
        for (unsigned long i = 0; i < limit; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
      }
      r <<= 1;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into_primes(const mpz_class& n, std::map<mpz_class, unsigned>& acc,
                       unsigned multiplicity) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n] += multiplicity;
    return;
  }
  // Prime powers defeat the rho cycle argument, so peel them off first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
        split_into_primes(root, acc, multiplicity * static_cast<unsigned>(k));
        return;
      }
    }
  }
  mpz_class d = pollard_brent(n, kPrimalitySeed);
  split_into_primes(d, acc, multiplicity);
  split_into_primes(n / d, acc, multiplicity);
}

}  // namespace

mpz_class mod_canon(const mpz_class& a, const mpz_class& m) {
  if (m < 1) throw std::domain_error("mod_canon: modulus must be >= 1");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int jacobi(const mpz_class& a_in, const mpz_class& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
    throw std::domain_error("jacobi: modulus must be odd and positive");
  mpz_class a = mod_canon(a_in, n_in);
  mpz_class n = n_in;
  int result = 1;
  while (a != 0) {
    unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
    if (twos > 0) {
      a >>= twos;
      // (2|n) = -1 exactly when n = 3 or 5 (mod 8)
      if (twos & 1) {
        unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
        if (n8 == 3 || n8 == 5) result = -result;
      }
    }
    // reciprocity: sign flips when both are 3 (mod 4)
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      result = -result;
    std::swap(a, n);
    a = mod_canon(a, n);
  }
  return n == 1 ? result : 0;
}

int legendre(const mpz_class& a, const mpz_class& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
    throw std::domain_error("legendre: p must be an odd prime");
  return jacobi(a, p);
}

bool is_prime(const mpz_class& n, unsigned long seed) {
  mpz_class a = abs(n);
  if (a.fits_ulong_p()) return is_prime_u64(a.get_ui());
  for (uint64_t p : kSmallPrimes) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p)) return false;
  }
  return miller_rabin_mpz(a, seed);
}

mpz_class Factorization::value() const {
  mpz_class v = sign;
  for (const auto& [p, e] : factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Factorization factorize(const mpz_class& n) {
  if (n == 0) throw std::domain_error("factorize: 0 has no factorization");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  mpz_class a = abs(n);

  std::map<mpz_class, unsigned> acc;
  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(a.get_mpz_t(), d)) {
      mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) acc[mpz_class(d)] += e;
  };

  strip(2);
  strip(3);
  for (unsigned long d = 5; d <= kTrialBound; d += 6) {
    if (mpz_class(d) * d > a) break;
    strip(d);
    strip(d + 2);
  }
  if (a > 1) {
    if (mpz_class(kTrialBound) * kTrialBound > a) {
      acc[a] += 1;  // cofactor below the trial bound squared is prime
    } else {
      split_into_primes(a, acc, 1);
    }
  }

  f.factors.assign(acc.begin(), acc.end());
  return f;
}

std::vector<mpz_class> squares_mod(const mpz_class& m) {
  if (m < 2) throw std::domain_error("squares_mod: modulus must be >= 2");
  std::vector<mpz_class> out;
  if (m.fits_ulong_p() && m.get_ui() <= 100000000ul) {
    uint64_t mm = m.get_ui();
    std::vector<uint8_t> seen(mm, 0);
    for (uint64_t t = 0; t < mm; ++t) seen[mulmod_u64(t, t, mm)] = 1;
    for (uint64_t v = 0; v < mm; ++v)
      if (seen[v]) out.emplace_back(static_cast<unsigned long>(v));
  } else {
    std::set<mpz_class> seen;
    for (mpz_class t = 0; t < m; ++t) seen.insert(t * t % m);
    out.assign(seen.begin(), seen.end());
  }
  return out;
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  if (n == 0) return 0;
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  mpz_class x = mpz_class(1) << ((bits + 1) / 2);  // upper bound on sqrt(n)
  while (true) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  return x;
}

bool is_perfect_square(const mpz_class& n, mpz_class* root) {
  if (n < 0) return false;
  // squares mod 64 are sparse; cheap rejection before the Newton route
  static constexpr uint64_t kSquareMask64 =
      (1ull << 0) | (1ull << 1) | (1ull << 4) | (1ull << 9) | (1ull << 16) |
      (1ull << 17) | (1ull << 25) | (1ull << 33) | (1ull << 36) |
      (1ull << 41) | (1ull << 49) | (1ull << 57);
  if (!(kSquareMask64 >> mpz_fdiv_ui(n.get_mpz_t(), 64) & 1)) return false;
  mpz_class r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

}  // namespace dioph::arith
