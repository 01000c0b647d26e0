#include "quadwalk/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "quadwalk/enumeration.hpp"

namespace quadwalk {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_r(double r) {
  if (!(r > 1.0)) throw std::domain_error("asymptotic formulas require r > 1");
}

}  // namespace

double gaussian_disk_count_asymptotic(double r) {
  require_r(r);
  return 2.0 * r * r / std::log(r);
}

double gaussian_density_asymptotic(double r) {
  require_r(r);
  return 2.0 / (kPi * std::log(r));
}

double family_count_asymptotic(double r) {
  require_r(r);
  return r * r / (2.0 * std::log(r));
}

double family_density_asymptotic(double r, double b) {
  require_r(r);
  if (!(b > 0.0)) throw std::domain_error("family density requires b > 0");
  return 1.0 / (2.0 * b * std::sqrt(2.0 * std::log(r)));
}

BernaysEstimate estimate_bernays_constant(std::uint64_t n) {
  if (n < 2) throw std::domain_error("bernays estimate requires n >= 2");
  std::uint64_t count = representable_count(n);
  double dn = static_cast<double>(n);
  return BernaysEstimate{n, static_cast<double>(count) * std::sqrt(std::log(dn)) / dn};
}

MoatBoundReport moat_bound_report(double r, double k, double x) {
  if (!(r > 0.0) || !(k > 0.0) || !(x > 0.0))
    throw std::domain_error("moat bound requires r, k, x > 0");
  double y = x / std::sqrt(2.0);
  double h = y - r * std::sqrt(2.0) / std::sqrt(3.0);
  double c_max = 2.0 * std::sqrt(3.0) * r * x;
  if (!(c_max > 1.0)) throw std::domain_error("moat bound requires c_max > 1");
  double d_cc = std::hypot(2.0 * x + 4.0 * h, 2.0 * x + 2.0 * h);
  if (!(d_cc > r)) throw std::domain_error("moat bound requires d_cc > r");
  double pd = std::sqrt(d_cc * d_cc - r * r);
  double steps_lower = pd / k;
  double families_upper = 2.0 * c_max / (2.0 * std::log(std::sqrt(c_max)));
  return MoatBoundReport{r, k, x, c_max, d_cc, pd,
                         steps_lower, families_upper, steps_lower / families_upper};
}

std::vector<DiskCountRow> compare_disk_counts(std::int64_t n_min, std::int64_t n_max) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("compare_disk_counts requires 1 <= n_min <= n_max");
  std::vector<DiskCountRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    double r = static_cast<double>(n);
    rows.push_back(DiskCountRow{n, count_primes_in_disk(RingId::gauss(), r),
                                count_primes_in_disk(RingId::zsqrt2(), r)});
  }
  return rows;
}

}  // namespace quadwalk
