#include "dioph/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "dioph/arith.hpp"

namespace dioph::search {

namespace {

void validate_box(const SearchBox& box) {
  for (const Interval* range : {&box.x, &box.y, &box.z}) {
    if (range->lo > range->hi) throw std::domain_error("search box interval is empty");
  }
  if (box.x.length() * box.y.length() * box.z.length() > kVolumeGuard)
    throw std::domain_error("search box volume exceeds the 10^9 guard");
}

mpz_class largest_abs(const Interval& range) {
  return std::max(abs(range.lo), abs(range.hi));
}

bool solves(const mpz_class& c, const mpz_class& x, const mpz_class& y, const mpz_class& z) {
  return y * y - x * y * z + z * z == x * x * x + c;
}

}  // namespace

Solution::Solution(mpz_class x_, mpz_class y_, mpz_class z_, const mpz_class& c)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
  if (!solves(c, x, y, z))
    throw std::logic_error("Solution does not satisfy y^2 - xyz + z^2 = x^3 + c");
}

std::vector<Solution> search_general(const mpz_class& c, const SearchBox& box,
                                     Strategy strategy) {
  validate_box(box);

  if (strategy == Strategy::Auto) {
    // largest discriminant (xz)^2 - 4(z^2 - x^3 - c) the box can produce
    mpz_class mx = largest_abs(box.x), mz = largest_abs(box.z);
    mpz_class disc_bound = mx * mx * mz * mz + 4 * (mz * mz + mx * mx * mx + abs(c));
    strategy = box.y.length() > 2 * arith::isqrt(disc_bound) + 1 ? Strategy::QuadraticInY
                                                                 : Strategy::ScanY;
  }

  std::vector<Solution> out;
  if (strategy == Strategy::ScanY) {
    for (mpz_class x = box.x.lo; x <= box.x.hi; ++x) {
      mpz_class rhs = x * x * x + c;
      for (mpz_class z = box.z.lo; z <= box.z.hi; ++z) {
        mpz_class xz = x * z, zz = z * z;
        for (mpz_class y = box.y.lo; y <= box.y.hi; ++y) {
          if (y * y - xz * y + zz == rhs) out.emplace_back(x, y, z, c);
        }
      }
    }
  } else {
    for (mpz_class x = box.x.lo; x <= box.x.hi; ++x) {
      mpz_class rhs = x * x * x + c;
      for (mpz_class z = box.z.lo; z <= box.z.hi; ++z) {
        mpz_class xz = x * z;
        mpz_class disc = xz * xz - 4 * (z * z - rhs);
        if (disc < 0) continue;
        mpz_class root;
        if (!arith::is_perfect_square(disc, &root)) continue;
        if (mpz_odd_p(mpz_class(xz + root).get_mpz_t())) continue;
        mpz_class y_hi = (xz + root) / 2;
        if (box.y.contains(y_hi)) out.emplace_back(x, y_hi, z, c);
        if (root != 0) {
          mpz_class y_lo = (xz - root) / 2;
          if (box.y.contains(y_lo)) out.emplace_back(x, y_lo, z, c);
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  return out;
}

std::vector<std::pair<mpz_class, mpz_class>> search_eq1(const mpz_class& k,
                                                        const Interval& y_range,
                                                        const Interval& z_range) {
  return detail::search_eq1_rhs(k, y_range, z_range, k * k * k - 5);
}

namespace detail {

std::vector<std::pair<mpz_class, mpz_class>> search_eq1_rhs(const mpz_class& k,
                                                            const Interval& y_range,
                                                            const Interval& z_range,
                                                            const mpz_class& rhs) {
  // with x pinned to k, the target y^2 - kyz + z^2 = rhs is the general
  // search at constant c = rhs - k^3
  SearchBox box{{k, k}, y_range, z_range};
  std::vector<std::pair<mpz_class, mpz_class>> out;
  for (const Solution& s : search_general(rhs - k * k * k, box)) out.emplace_back(s.y, s.z);
  return out;
}

}  // namespace detail

}  // namespace dioph::search
