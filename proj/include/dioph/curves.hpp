#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace dioph::curves {

/// Exact rational affine point; mpq_class keeps coordinates reduced with
/// positive denominators.
struct RationalPoint {
  mpq_class x, y;

  bool operator==(const RationalPoint&) const = default;
};

/// Exact membership test for E_k: Y^2 - kXY = X^3 - (k^2 + 5).
bool is_on_Ek(const mpz_class& k, const RationalPoint& point);

/// All integral points of E_k with |X| <= x_bound, sorted by (X, Y).
/// For each X the quadratic in Y is solved exactly: accept X iff the
/// discriminant k^2 X^2 + 4(X^3 - k^2 - 5) is a perfect square of the
/// right parity. Requires x_bound >= 0.
std::vector<std::pair<mpz_class, mpz_class>> integral_points_Ek(const mpz_class& k,
                                                                const mpz_class& x_bound);

/// (x, y) -> (x, -y), the isomorphism between E_k and E_{-k}.
RationalPoint negate_iso(const RationalPoint& point);

/// The k = 5 change of variables (x, y) -> (x + 2, 2x - y - 1); it carries
/// Y^2 - 5XY = X^3 - 30 to the minimal model y^2 + xy = x^3 - 13x - 13.
RationalPoint e5_to_minimal(const RationalPoint& point);

/// Exact inverse of e5_to_minimal: (x, y) -> (x - 2, 2x - y - 5).
RationalPoint minimal_to_e5(const RationalPoint& point);

/// Exact membership test for y^2 + xy = x^3 - 13x - 13.
bool is_on_e5_minimal(const RationalPoint& point);

namespace detail {

/// Test hook: integral points of Y^2 - kXY = X^3 + c with |X| <= x_bound.
std::vector<std::pair<mpz_class, mpz_class>> integral_points_cubic(const mpz_class& k,
                                                                   const mpz_class& c,
                                                                   const mpz_class& x_bound);

}  // namespace detail

}  // namespace dioph::curves
