#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace dioph::search {

/// Inclusive integer interval.
struct Interval {
  mpz_class lo, hi;

  bool contains(const mpz_class& v) const { return lo <= v && v <= hi; }
  mpz_class length() const { return hi - lo + 1; }
};

struct SearchBox {
  Interval x, y, z;
};

/// Exhaustive searches refuse boxes with more than this many points.
inline const mpz_class kVolumeGuard("1000000000");

/// A triple satisfying y^2 - xyz + z^2 = x^3 + c; re-verified on
/// construction (std::logic_error otherwise).
struct Solution {
  mpz_class x, y, z;

  Solution(mpz_class x_, mpz_class y_, mpz_class z_, const mpz_class& c);
};

enum class Strategy {
  Auto,          // pick per the y-range/discriminant rule below
  ScanY,         // plain triple loop
  QuadraticInY,  // enumerate (x, z), solve the quadratic in y exactly
};

/// All (x, y, z) in the box with y^2 - xyz + z^2 = x^3 + c, in lexicographic
/// order. Auto uses the quadratic path when the y-range is longer than twice
/// the square root of the largest discriminant the box can produce, i.e.
/// when scanning y would mostly visit values no root can reach.
std::vector<Solution> search_general(const mpz_class& c, const SearchBox& box,
                                     Strategy strategy = Strategy::Auto);

/// All (y, z) in the ranges with y^2 - kyz + z^2 = k^3 - 5 for the fixed k.
std::vector<std::pair<mpz_class, mpz_class>> search_eq1(const mpz_class& k,
                                                        const Interval& y_range,
                                                        const Interval& z_range);

namespace detail {

/// Test hook: the same search with the right-hand side replaced.
std::vector<std::pair<mpz_class, mpz_class>> search_eq1_rhs(const mpz_class& k,
                                                            const Interval& y_range,
                                                            const Interval& z_range,
                                                            const mpz_class& rhs);

}  // namespace detail

}  // namespace dioph::search
