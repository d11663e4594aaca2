#include "dioph/curves.hpp"

#include <stdexcept>

#include "dioph/arith.hpp"

namespace dioph::curves {

bool is_on_Ek(const mpz_class& k, const RationalPoint& point) {
  mpq_class kq(k);
  mpq_class lhs = point.y * point.y - kq * point.x * point.y;
  mpq_class rhs = point.x * point.x * point.x - mpq_class(k * k + 5);
  return lhs == rhs;
}

std::vector<std::pair<mpz_class, mpz_class>> integral_points_Ek(const mpz_class& k,
                                                                const mpz_class& x_bound) {
  return detail::integral_points_cubic(k, -(k * k + 5), x_bound);
}

RationalPoint negate_iso(const RationalPoint& point) { return {point.x, -point.y}; }

RationalPoint e5_to_minimal(const RationalPoint& point) {
  return {point.x + 2, 2 * point.x - point.y - 1};
}

RationalPoint minimal_to_e5(const RationalPoint& point) {
  return {point.x - 2, 2 * point.x - point.y - 5};
}

bool is_on_e5_minimal(const RationalPoint& point) {
  mpq_class lhs = point.y * point.y + point.x * point.y;
  mpq_class rhs = point.x * point.x * point.x - 13 * point.x - 13;
  return lhs == rhs;
}

namespace detail {

std::vector<std::pair<mpz_class, mpz_class>> integral_points_cubic(const mpz_class& k,
                                                                   const mpz_class& c,
                                                                   const mpz_class& x_bound) {
  if (x_bound < 0) throw std::domain_error("integral point search: x_bound must be >= 0");
  std::vector<std::pair<mpz_class, mpz_class>> out;
  for (mpz_class x = -x_bound; x <= x_bound; ++x) {
    // Y^2 - kXY - (X^3 + c) = 0, so 2Y = kX +- sqrt(k^2 X^2 + 4(X^3 + c))
    mpz_class kx = k * x;
    mpz_class disc = kx * kx + 4 * (x * x * x + c);
    if (disc < 0) continue;
    mpz_class root;
    if (!arith::is_perfect_square(disc, &root)) continue;
    if (mpz_odd_p(mpz_class(kx + root).get_mpz_t())) continue;
    if (root != 0) out.emplace_back(x, (kx - root) / 2);
    out.emplace_back(x, (kx + root) / 2);
  }
  return out;  // (x ascending, then y ascending) by construction
}

}  // namespace detail

}  // namespace dioph::curves
