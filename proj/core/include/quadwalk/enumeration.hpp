#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "quadwalk/primality.hpp"
#include "quadwalk/ring.hpp"

namespace quadwalk {

// Origin-centered disk; membership is exact: a^2 + b^2 <= floor(radius^2).
struct Disk {
  double radius;
};

// Closed coordinate rectangle [x0, x1] x [y0, y1].
struct Rect {
  std::int64_t x0, x1, y0, y1;
};

// {(x,y) : |x^2 - 2y^2| <= r2}. Unbounded; enumeration rejects it.
struct NormRegion {
  std::int64_t r2;
};

// {(x,y) : 0 <= x <= xmax, perpendicular distance to y = x/sqrt(2) at most
// r}. Membership uses extended precision; points within ~1e-15 relative
// distance of the exact boundary may fall either way.
struct AsymptoteStrip {
  double r;
  std::int64_t xmax;
};

using Region = std::variant<Disk, Rect, NormRegion, AsymptoteStrip>;

bool region_contains(const Region& region, std::int64_t a, std::int64_t b);

// Bare coordinate pair; bulk storage for large point sets.
struct Coord {
  std::int64_t a;
  std::int64_t b;

  friend bool operator==(Coord lhs, Coord rhs) { return lhs.a == rhs.a && lhs.b == rhs.b; }
  friend bool operator<(Coord lhs, Coord rhs) {
    return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.b < rhs.b;
  }
};

// All lattice points in the region whose element classifies Prime, sorted
// by (a, b). Region scans are partitioned by a-ranges and merged in order,
// so results do not depend on the thread count. Throws std::domain_error
// for NormRegion (infinitely many primes).
std::vector<Coord> prime_points_in_region(RingId ring, const Region& region);
std::vector<QuadInt> primes_in_region(RingId ring, const Region& region);

std::uint64_t count_primes_in_disk(RingId ring, double radius);
std::uint64_t lattice_points_in_disk(double radius);

// True iff the curve x^2 - 2y^2 = k carries primes: |k| = 2, |k| a rational
// prime = 1,7 (mod 8), or |k| = p^2 for a rational prime p = 3,5 (mod 8).
bool family_contains_primes(std::int64_t k);

// All k with 0 < |k| <= r2 and family_contains_primes(k), ascending.
std::vector<std::int64_t> families_with_primes(std::int64_t r2);

// Number of k in [1, n] representable as x^2 - 2y^2. Sieve over the
// criterion: representable iff every prime q = 3,5 (mod 8) divides k to an
// even power.
std::uint64_t representable_count(std::uint64_t n);

// All curve points (a, b) with a^2 - 2b^2 = k and |b| <= b_limit, sorted.
std::vector<Coord> norm_curve_points(std::int64_t k, std::int64_t b_limit);

// Number of primes on the first-quadrant arc of the norm curve through P
// with Euclidean length strictly between |P| and |P * (3 + 2*sqrt(2))|.
// P must be a prime with a >= 0, b >= 0 in Z[sqrt(2)]. Always 0 or 1.
int primes_between_on_branch(const QuadInt& P);

}  // namespace quadwalk
