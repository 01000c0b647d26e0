#pragma once

#include <cstdint>
#include <vector>

#include "quadwalk/ring.hpp"

namespace quadwalk {

// Closed forms; all require r > 1 (log r > 0) and throw std::domain_error
// outside their domain.
double gaussian_disk_count_asymptotic(double r);        // 2r^2 / log r
double gaussian_density_asymptotic(double r);           // 2 / (pi log r)
double family_count_asymptotic(double r);               // r^2 / (2 log r)
double family_density_asymptotic(double r, double b);   // 1 / (2b sqrt(2 log r))

struct BernaysEstimate {
  std::uint64_t n;
  double b_estimate;  // representable_count(n) * sqrt(log n) / n
};

BernaysEstimate estimate_bernays_constant(std::uint64_t n);

// Geometric quantities comparing the walk-step lower bound against the
// prime-family upper bound for a strip of half-width r, step length k and
// asymptote coordinate x (the probe point sits at (x, x/sqrt(2))).
struct MoatBoundReport {
  double r, k, x;
  double c_max;           // 2 sqrt(3) r x
  double d_cc;            // distance between the two bounding curves
  double pd;              // sqrt(d_cc^2 - r^2)
  double steps_lower;     // pd / k
  double families_upper;  // 2 c_max / (2 log sqrt(c_max))
  double ratio;           // steps_lower / families_upper
};

// Throws std::domain_error if inputs are non-positive or x is too small
// relative to r (d_cc <= r makes pd undefined).
MoatBoundReport moat_bound_report(double r, double k, double x);

struct DiskCountRow {
  std::int64_t n;
  std::uint64_t count_zi;
  std::uint64_t count_zsqrt2;
};

// Exact prime counts in origin-centered disks of integer radius n for both
// rings, one row per n in [n_min, n_max].
std::vector<DiskCountRow> compare_disk_counts(std::int64_t n_min, std::int64_t n_max);

}  // namespace quadwalk
