#include "quadwalk/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <stdexcept>

#include "quadwalk/threading.hpp"

namespace quadwalk {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::uint64_t kSieveCap = 300'000'000;  // dense-sieve limit; MR beyond
constexpr std::int64_t kRowsPerChunk = 512;       // fixed, so threads never change output

std::int64_t isqrt_i64(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint64_t abs_i64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

// Packed odd-only Eratosthenes sieve for bulk lookups.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit) : limit_(limit), bits_((limit / 2 + 64) / 64, ~0ull) {
    set_composite(0);  // the number 1
    for (std::uint64_t p = 3; p * p <= limit; p += 2) {
      if (!get(p / 2)) continue;
      for (std::uint64_t m = p * p; m <= limit; m += 2 * p) set_composite(m / 2);
    }
  }

  bool is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    return get(n / 2);
  }

  std::uint64_t limit() const { return limit_; }

 private:
  bool get(std::uint64_t idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1; }
  void set_composite(std::uint64_t idx) { bits_[idx >> 6] &= ~(1ull << (idx & 63)); }

  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
};

// Bitmask of quadratic residues mod 64; filters perfect-square tests.
constexpr std::uint64_t square_residue_mask() {
  std::uint64_t mask = 0;
  for (unsigned i = 0; i < 64; ++i) mask |= 1ull << ((i * i) & 63);
  return mask;
}
constexpr std::uint64_t kSquareMask = square_residue_mask();

struct RowRange {
  std::int64_t b_lo, b_hi;  // candidate range; exact membership still applies
  bool empty() const { return b_lo > b_hi; }
};

struct ScanPlan {
  std::int64_t a_lo = 0, a_hi = -1;
  std::uint64_t norm_bound = 0;  // max |norm| over the region
};

std::int64_t disk_limit(double radius) {
  if (!(radius >= 0.0)) return -1;
  long double r2 = static_cast<long double>(radius) * static_cast<long double>(radius);
  if (r2 >= 9.2e18L) throw std::overflow_error("disk radius too large");
  return static_cast<std::int64_t>(std::floor(r2));
}

ScanPlan make_plan(RingId ring, const Region& region) {
  ScanPlan plan;
  i128 bound = 0;
  auto norm_cap = [&](std::int64_t max_abs_a, std::int64_t max_abs_b) -> i128 {
    i128 a2 = static_cast<i128>(max_abs_a) * max_abs_a;
    i128 b2 = static_cast<i128>(max_abs_b) * max_abs_b;
    return ring.d() == -1 ? a2 + b2 : std::max(a2, 2 * b2);
  };
  if (const auto* disk = std::get_if<Disk>(&region)) {
    std::int64_t t = disk_limit(disk->radius);
    if (t >= 0) {
      std::int64_t amax = isqrt_i64(t);
      plan.a_lo = -amax;
      plan.a_hi = amax;
      bound = norm_cap(amax, amax);
    }
  } else if (const auto* rect = std::get_if<Rect>(&region)) {
    if (rect->x0 <= rect->x1 && rect->y0 <= rect->y1) {
      plan.a_lo = rect->x0;
      plan.a_hi = rect->x1;
      bound = norm_cap(std::max(abs_i64(rect->x0), abs_i64(rect->x1)),
                       std::max(abs_i64(rect->y0), abs_i64(rect->y1)));
    }
  } else if (const auto* strip = std::get_if<AsymptoteStrip>(&region)) {
    if (!(strip->r >= 0.0)) throw std::domain_error("strip half-width must be non-negative");
    if (strip->xmax >= 0) {
      plan.a_lo = 0;
      plan.a_hi = strip->xmax;
      long double ymax = (static_cast<long double>(strip->xmax) +
                          static_cast<long double>(strip->r) * std::sqrt(3.0L)) / std::sqrt(2.0L);
      bound = norm_cap(strip->xmax, static_cast<std::int64_t>(ymax) + 2);
    }
  } else {
    throw std::domain_error("norm region is unbounded; enumeration requires a finite region");
  }
  if (bound > static_cast<i128>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("region norms exceed the 64-bit range");
  plan.norm_bound = static_cast<std::uint64_t>(bound);
  return plan;
}

RowRange row_range(const Region& region, std::int64_t a) {
  if (const auto* disk = std::get_if<Disk>(&region)) {
    std::int64_t t = disk_limit(disk->radius);
    std::int64_t rem = t - a * a;
    std::int64_t bmax = isqrt_i64(rem);
    return RowRange{-bmax, bmax};
  }
  if (const auto* rect = std::get_if<Rect>(&region)) return RowRange{rect->y0, rect->y1};
  const auto& strip = std::get<AsymptoteStrip>(region);
  long double s2 = std::sqrt(2.0L), s3 = std::sqrt(3.0L);
  long double lo = (static_cast<long double>(a) - strip.r * s3) / s2;
  long double hi = (static_cast<long double>(a) + strip.r * s3) / s2;
  return RowRange{static_cast<std::int64_t>(std::floor(lo)) - 1,
                  static_cast<std::int64_t>(std::ceil(hi)) + 1};
}

}  // namespace

bool region_contains(const Region& region, std::int64_t a, std::int64_t b) {
  if (const auto* disk = std::get_if<Disk>(&region)) {
    std::int64_t t = disk_limit(disk->radius);
    if (t < 0) return false;
    return static_cast<i128>(a) * a + static_cast<i128>(b) * b <= static_cast<i128>(t);
  }
  if (const auto* rect = std::get_if<Rect>(&region))
    return a >= rect->x0 && a <= rect->x1 && b >= rect->y0 && b <= rect->y1;
  if (const auto* nr = std::get_if<NormRegion>(&region)) {
    i128 n = static_cast<i128>(a) * a - 2 * static_cast<i128>(b) * b;
    if (n < 0) n = -n;
    return n <= static_cast<i128>(nr->r2);
  }
  const auto& strip = std::get<AsymptoteStrip>(region);
  if (a < 0 || a > strip.xmax) return false;
  long double perp = std::abs(static_cast<long double>(a) - std::sqrt(2.0L) * b) / std::sqrt(3.0L);
  return perp <= static_cast<long double>(strip.r);
}

std::vector<Coord> prime_points_in_region(RingId ring, const Region& region) {
  ScanPlan plan = make_plan(ring, region);
  std::vector<Coord> out;
  if (plan.a_lo > plan.a_hi) return out;

  std::unique_ptr<PrimeSieve> sieve;
  if (plan.norm_bound <= kSieveCap) sieve = std::make_unique<PrimeSieve>(std::max<std::uint64_t>(plan.norm_bound, 4));
  auto is_prime = [&](std::uint64_t v) {
    return sieve && v <= sieve->limit() ? sieve->is_prime(v) : is_rational_prime(v);
  };

  const int d = ring.d();
  auto point_is_prime = [&](std::int64_t a, std::int64_t b) {
    i128 n = static_cast<i128>(a) * a - static_cast<i128>(d) * b * b;
    std::uint64_t absn = static_cast<std::uint64_t>(n < 0 ? -n : n);
    if (absn == 2) return true;
    if (absn < 2) return false;
    if (absn % 2 != 0 && is_prime(absn)) return true;
    if (!((kSquareMask >> (absn & 63)) & 1)) return false;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(absn)));
    while (r * r > absn) --r;
    while ((r + 1) * (r + 1) <= absn) ++r;
    if (r * r != absn) return false;
    bool inert = d == 2 ? (r % 8 == 3 || r % 8 == 5) : (r % 4 == 3);
    return inert && is_prime(r);
  };

  std::uint64_t rows = static_cast<std::uint64_t>(plan.a_hi - plan.a_lo + 1);
  std::uint64_t chunks = (rows + kRowsPerChunk - 1) / kRowsPerChunk;
  std::vector<std::vector<Coord>> parts(chunks);
  parallel_chunks(chunks, [&](std::uint64_t c) {
    std::int64_t a0 = plan.a_lo + static_cast<std::int64_t>(c) * kRowsPerChunk;
    std::int64_t a1 = std::min(plan.a_hi, a0 + kRowsPerChunk - 1);
    auto& local = parts[c];
    for (std::int64_t a = a0; a <= a1; ++a) {
      RowRange range = row_range(region, a);
      for (std::int64_t b = range.b_lo; b <= range.b_hi; ++b) {
        if (!region_contains(region, a, b)) continue;
        if (point_is_prime(a, b)) local.push_back(Coord{a, b});
      }
    }
  });

  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  out.reserve(total);
  for (auto& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
    part.clear();
    part.shrink_to_fit();
  }
  return out;
}

std::vector<QuadInt> primes_in_region(RingId ring, const Region& region) {
  std::vector<Coord> pts = prime_points_in_region(ring, region);
  std::vector<QuadInt> out;
  out.reserve(pts.size());
  for (Coord p : pts) out.push_back(QuadInt{p.a, p.b, ring});
  return out;
}

std::uint64_t count_primes_in_disk(RingId ring, double radius) {
  return prime_points_in_region(ring, Region{Disk{radius}}).size();
}

std::uint64_t lattice_points_in_disk(double radius) {
  std::int64_t t = disk_limit(radius);
  if (t < 0) return 0;
  std::int64_t amax = isqrt_i64(t);
  std::uint64_t count = 0;
  for (std::int64_t a = -amax; a <= amax; ++a)
    count += 2 * static_cast<std::uint64_t>(isqrt_i64(t - a * a)) + 1;
  return count;
}

bool family_contains_primes(std::int64_t k) {
  std::uint64_t absk = abs_i64(k);
  if (absk < 2) return false;
  if (absk == 2) return true;
  if (absk % 2 != 0 && is_rational_prime(absk)) return absk % 8 == 1 || absk % 8 == 7;
  if (!((kSquareMask >> (absk & 63)) & 1)) return false;
  std::int64_t r = isqrt_i64(static_cast<std::int64_t>(absk));
  if (static_cast<std::uint64_t>(r) * r != absk) return false;
  return (r % 8 == 3 || r % 8 == 5) && is_rational_prime(static_cast<std::uint64_t>(r));
}

std::vector<std::int64_t> families_with_primes(std::int64_t r2) {
  if (r2 < 0) throw std::invalid_argument("families_with_primes: bound must be non-negative");
  std::vector<std::int64_t> positive;
  if (r2 >= 2) {
    std::unique_ptr<PrimeSieve> sieve;
    if (static_cast<std::uint64_t>(r2) <= kSieveCap) sieve = std::make_unique<PrimeSieve>(static_cast<std::uint64_t>(r2));
    auto is_prime = [&](std::uint64_t v) { return sieve ? sieve->is_prime(v) : is_rational_prime(v); };
    for (std::int64_t k = 2; k <= r2; ++k) {
      std::uint64_t u = static_cast<std::uint64_t>(k);
      bool ok = false;
      if (u == 2) {
        ok = true;
      } else if (u % 2 != 0 && (u % 8 == 1 || u % 8 == 7) && is_prime(u)) {
        ok = true;
      } else if ((kSquareMask >> (u & 63)) & 1) {
        std::int64_t r = isqrt_i64(k);
        ok = r * r == k && (r % 8 == 3 || r % 8 == 5) && is_prime(static_cast<std::uint64_t>(r));
      }
      if (ok) positive.push_back(k);
    }
  }
  std::vector<std::int64_t> out;
  out.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

std::uint64_t representable_count(std::uint64_t n) {
  if (n == 0) return 0;
  if (n > 200'000'000) throw std::invalid_argument("representable_count: bound above 2e8 not supported");
  PrimeSieve sieve(std::max<std::uint64_t>(n, 4));
  std::vector<std::uint8_t> blocked(n + 1, 0);
  for (std::uint64_t q = 3; q <= n; q += 2) {
    if (q % 8 != 3 && q % 8 != 5) continue;
    if (!sieve.is_prime(q)) continue;
    for (std::uint64_t m = q; m <= n; m += q) {
      std::uint64_t v = m;
      int exp = 0;
      while (v % q == 0) {
        v /= q;
        ++exp;
      }
      if (exp % 2 != 0) blocked[m] = 1;
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (!blocked[k]) ++count;
  return count;
}

std::vector<Coord> norm_curve_points(std::int64_t k, std::int64_t b_limit) {
  if (b_limit < 0) throw std::invalid_argument("norm_curve_points: negative bound");
  std::vector<Coord> out;
  for (std::int64_t b = -b_limit; b <= b_limit; ++b) {
    i128 a2 = static_cast<i128>(k) + 2 * static_cast<i128>(b) * b;
    if (a2 < 0) continue;
    if (a2 > static_cast<i128>(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("norm_curve_points: coordinate overflow");
    std::int64_t a = isqrt_i64(static_cast<std::int64_t>(a2));
    if (static_cast<i128>(a) * a != a2) continue;
    out.push_back(Coord{a, b});
    if (a != 0) out.push_back(Coord{-a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int primes_between_on_branch(const QuadInt& P) {
  if (P.ring.d() != 2) throw std::domain_error("primes_between_on_branch: requires Z[sqrt(2)]");
  if (P.a < 0 || P.b < 0 || (P.a == 0 && P.b == 0))
    throw std::domain_error("primes_between_on_branch: P must lie in the first quadrant");
  if (!classify(P).is_prime()) throw std::domain_error("primes_between_on_branch: P is not prime");

  const QuadInt up{3, 2, P.ring}, down{3, -2, P.ring};
  QuadInt next = mul(P, up);
  i128 len_lo = static_cast<i128>(P.a) * P.a + static_cast<i128>(P.b) * P.b;
  i128 len_hi = static_cast<i128>(next.a) * next.a + static_cast<i128>(next.b) * next.b;
  std::int64_t guard = 10 * (std::abs(next.a) + std::abs(next.b) + 10);

  std::set<Coord> found;
  for (int seed_conj = 0; seed_conj < 2; ++seed_conj) {
    QuadInt seed = seed_conj == 0 ? P : conjugate(P);
    for (int sign = 0; sign < 2; ++sign) {
      QuadInt base = sign == 0 ? seed : QuadInt{-seed.a, -seed.b, seed.ring};
      for (const QuadInt& step : {up, down}) {
        QuadInt w = base;
        for (int iter = 0; iter < 200; ++iter) {
          if (std::max(std::abs(w.a), std::abs(w.b)) > guard) break;
          if (w.a >= 0 && w.b >= 0) {
            i128 len = static_cast<i128>(w.a) * w.a + static_cast<i128>(w.b) * w.b;
            if (len > len_lo && len < len_hi) found.insert(Coord{w.a, w.b});
          }
          try {
            w = mul(w, step);
          } catch (const std::overflow_error&) {
            break;
          }
        }
      }
    }
  }
  return static_cast<int>(found.size());
}

}  // namespace quadwalk
