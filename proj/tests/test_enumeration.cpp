#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "quadwalk/enumeration.hpp"
#include "quadwalk/primality.hpp"
#include "quadwalk/ring.hpp"
#include "quadwalk/threading.hpp"

using namespace quadwalk;

namespace {

QuadInt z2(std::int64_t a, std::int64_t b) { return QuadInt{a, b, RingId::zsqrt2()}; }

std::vector<Coord> brute_region_primes(RingId ring, const Region& region, std::int64_t lo_a,
                                       std::int64_t hi_a, std::int64_t lo_b, std::int64_t hi_b) {
  std::vector<Coord> out;
  for (std::int64_t a = lo_a; a <= hi_a; ++a) {
    for (std::int64_t b = lo_b; b <= hi_b; ++b) {
      if (!region_contains(region, a, b)) continue;
      if (classify(QuadInt{a, b, ring}).is_prime()) out.push_back(Coord{a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("region_contains") {
  Region disk = Disk{1.5};
  CHECK(region_contains(disk, 1, 1));
  CHECK_FALSE(region_contains(disk, 1, 2));
  CHECK(region_contains(disk, 0, -1));

  Region rect = Rect{0, 2, -1, 1};
  CHECK(region_contains(rect, 0, -1));
  CHECK(region_contains(rect, 2, 1));
  CHECK_FALSE(region_contains(rect, 3, 0));
  CHECK_FALSE(region_contains(rect, -1, 0));

  Region nr = NormRegion{9};
  CHECK(region_contains(nr, 3, 1));    // norm 7
  CHECK(region_contains(nr, 10, 7));   // norm 2
  CHECK_FALSE(region_contains(nr, 4, 1));  // norm 14

  Region strip = AsymptoteStrip{2.0, 100};
  CHECK(region_contains(strip, 10, 7));
  CHECK_FALSE(region_contains(strip, 10, 0));
  CHECK_FALSE(region_contains(strip, -5, -3));  // x out of range
  CHECK_FALSE(region_contains(strip, 101, 71));
}

TEST_CASE("primes_in_region spot checks") {
  SUBCASE("zsqrt2 small rect") {
    auto pts = primes_in_region(RingId::zsqrt2(), Rect{0, 2, 0, 2});
    auto has = [&](std::int64_t a, std::int64_t b) {
      return std::find(pts.begin(), pts.end(), z2(a, b)) != pts.end();
    };
    CHECK(has(0, 1));
    CHECK(has(1, 2));
    CHECK_FALSE(has(1, 1));
  }
  SUBCASE("gauss tiny disk") {
    auto pts = prime_points_in_region(RingId::gauss(), Disk{1.5});
    std::vector<Coord> want = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    CHECK(pts == want);
  }
  SUBCASE("single-point rect") {
    auto prime_pt = prime_points_in_region(RingId::zsqrt2(), Rect{5, 5, 5, 5});
    CHECK(prime_pt == std::vector<Coord>{{5, 5}});
    CHECK(primes_in_region(RingId::zsqrt2(), Rect{4, 4, 4, 4}).empty());
  }
  SUBCASE("inverted rect is empty") {
    CHECK(primes_in_region(RingId::zsqrt2(), Rect{5, 4, 0, 1}).empty());
  }
  SUBCASE("norm region is not enumerable") {
    CHECK_THROWS_AS(primes_in_region(RingId::zsqrt2(), NormRegion{100}), std::domain_error);
  }
}

TEST_CASE("primes_in_region matches pointwise classification") {
  SUBCASE("zsqrt2 rect") {
    Region region = Rect{-40, 40, -40, 40};
    auto got = prime_points_in_region(RingId::zsqrt2(), region);
    auto want = brute_region_primes(RingId::zsqrt2(), region, -40, 40, -40, 40);
    CHECK(got == want);
  }
  SUBCASE("gauss disk") {
    Region region = Disk{30.0};
    auto got = prime_points_in_region(RingId::gauss(), region);
    auto want = brute_region_primes(RingId::gauss(), region, -30, 30, -30, 30);
    CHECK(got == want);
  }
  SUBCASE("zsqrt2 strip") {
    Region region = AsymptoteStrip{10.0, 200};
    auto got = prime_points_in_region(RingId::zsqrt2(), region);
    auto want = brute_region_primes(RingId::zsqrt2(), region, 0, 200, -20, 160);
    CHECK(got == want);
  }
}

TEST_CASE("enumeration output is sorted and thread independent") {
  Region region = Rect{-600, 600, -500, 500};
  set_max_threads(1);
  auto serial = prime_points_in_region(RingId::zsqrt2(), region);
  set_max_threads(3);
  auto threaded = prime_points_in_region(RingId::zsqrt2(), region);
  set_max_threads(0);
  CHECK(serial == threaded);
  CHECK(std::is_sorted(serial.begin(), serial.end()));
  CHECK(std::adjacent_find(serial.begin(), serial.end()) == serial.end());
}

TEST_CASE("count_primes_in_disk") {
  CHECK(count_primes_in_disk(RingId::gauss(), 1.5) == 4);
  CHECK(count_primes_in_disk(RingId::zsqrt2(), 1.01) == 2);
  CHECK(count_primes_in_disk(RingId::gauss(), 0.5) == 0);
  CHECK(count_primes_in_disk(RingId::gauss(), 100.0) == 4928);
  CHECK(count_primes_in_disk(RingId::gauss(), 60.0) == 2016);
  CHECK(count_primes_in_disk(RingId::zsqrt2(), 60.0) == 2674);
  CHECK(count_primes_in_disk(RingId::zsqrt2(), 1.0) == 2);
}

TEST_CASE("lattice_points_in_disk") {
  CHECK(lattice_points_in_disk(0.5) == 1);
  CHECK(lattice_points_in_disk(1.5) == 9);
  CHECK(lattice_points_in_disk(2.0) == 13);
  std::uint64_t n = lattice_points_in_disk(100.0);
  CHECK(n > 31000);
  CHECK(n < 31800);
}

TEST_CASE("family_contains_primes") {
  CHECK(family_contains_primes(-2));
  CHECK(family_contains_primes(2));
  CHECK(family_contains_primes(7));
  CHECK_FALSE(family_contains_primes(3));
  CHECK(family_contains_primes(9));
  CHECK(family_contains_primes(25));
  CHECK_FALSE(family_contains_primes(49));
  CHECK_FALSE(family_contains_primes(0));
  CHECK_FALSE(family_contains_primes(1));
  CHECK_FALSE(family_contains_primes(-1));
  CHECK(family_contains_primes(-7));
  CHECK(family_contains_primes(17));
  CHECK_FALSE(family_contains_primes(15));
}

TEST_CASE("families_with_primes") {
  CHECK(families_with_primes(4) == std::vector<std::int64_t>{-2, 2});
  CHECK(families_with_primes(9) == std::vector<std::int64_t>{-9, -7, -2, 2, 7, 9});
  CHECK(families_with_primes(1).empty());
  CHECK(families_with_primes(0).empty());
  CHECK_THROWS_AS(families_with_primes(-1), std::invalid_argument);

  auto fams = families_with_primes(10000);
  CHECK(fams.size() == 1234);
  CHECK(std::is_sorted(fams.begin(), fams.end()));
  for (std::int64_t k : fams) CHECK(family_contains_primes(k));

  // the sign map (a,b) -> (a+2b, a+b) pairs curves k and -k
  for (std::int64_t k = 1; k <= 100; ++k)
    CHECK(family_contains_primes(k) == family_contains_primes(-k));
}

TEST_CASE("representable_count") {
  CHECK(representable_count(2) == 2);
  CHECK(representable_count(20) == 10);
  CHECK(representable_count(1) == 1);
  CHECK(representable_count(0) == 0);
  CHECK(representable_count(2000) == 549);
  CHECK(representable_count(10000) == 2446);
  CHECK_THROWS_AS(representable_count(300'000'000), std::invalid_argument);

  SUBCASE("matches the n=20 roster") {
    std::set<std::uint64_t> want = {1, 2, 4, 7, 8, 9, 14, 16, 17, 18};
    for (std::uint64_t k = 1; k <= 20; ++k) {
      bool rep = representable_count(k) > representable_count(k - 1);
      CHECK(rep == (want.count(k) > 0));
    }
  }
  SUBCASE("matches a direct sweep") {
    const std::int64_t n = 500;
    std::set<std::int64_t> seen;
    for (std::int64_t x = 0; x <= 70; ++x)
      for (std::int64_t y = 0; y <= 50; ++y) {
        std::int64_t k = x * x - 2 * y * y;
        if (k >= 1 && k <= n) seen.insert(k);
      }
    CHECK(representable_count(n) == seen.size());
  }
}

TEST_CASE("norm_curve_points") {
  auto pts = norm_curve_points(7, 20);
  for (const Coord& p : pts) CHECK(p.a * p.a - 2 * p.b * p.b == 7);
  auto has = [&](std::int64_t a, std::int64_t b) {
    return std::find(pts.begin(), pts.end(), Coord{a, b}) != pts.end();
  };
  CHECK(has(3, 1));
  CHECK(has(5, 3));
  CHECK(has(13, 9));
  CHECK(has(-3, 1));
  CHECK(has(3, -1));
  CHECK(has(27, 19));
  CHECK_FALSE(has(31, 22));

  CHECK(norm_curve_points(3, 100).empty());

  SUBCASE("sign map lands on the mirror curve") {
    for (std::int64_t k = -30; k <= 30; ++k) {
      if (k == 0) continue;
      for (const Coord& p : norm_curve_points(k, 50)) {
        std::int64_t ia = p.a + 2 * p.b, ib = p.a + p.b;
        CHECK(ia * ia - 2 * ib * ib == -k);
      }
    }
  }
}

TEST_CASE("all points of a prime family classify prime") {
  for (std::int64_t k = -60; k <= 60; ++k) {
    if (!family_contains_primes(k)) continue;
    auto pts = norm_curve_points(k, 100);
    CHECK(!pts.empty());
    for (const Coord& p : pts)
      REQUIRE_MESSAGE(classify(z2(p.a, p.b)).is_prime(), "k=" << k << " a=" << p.a
                                                              << " b=" << p.b);
  }
}

TEST_CASE("primes_between_on_branch") {
  CHECK(primes_between_on_branch(z2(3, 1)) == 1);
  CHECK(primes_between_on_branch(z2(1, 2)) == 1);
  CHECK(primes_between_on_branch(z2(0, 1)) == 0);
  CHECK(primes_between_on_branch(z2(5, 2)) == 1);
  CHECK(primes_between_on_branch(z2(1, 3)) == 1);
  CHECK(primes_between_on_branch(z2(3, 0)) == 0);
  CHECK(primes_between_on_branch(z2(4, 3)) == 0);
  CHECK(primes_between_on_branch(z2(5, 1)) == 1);
  CHECK(primes_between_on_branch(z2(13, 15)) == 1);

  CHECK_THROWS_AS(primes_between_on_branch(z2(1, 1)), std::domain_error);   // unit
  CHECK_THROWS_AS(primes_between_on_branch(z2(-3, 1)), std::domain_error);  // quadrant
  CHECK_THROWS_AS(primes_between_on_branch(z2(7, 0)), std::domain_error);   // composite
  CHECK_THROWS_AS(primes_between_on_branch(QuadInt{2, 1, RingId::gauss()}), std::domain_error);

  SUBCASE("never exceeds one") {
    for (std::int64_t a = 0; a <= 40; ++a) {
      for (std::int64_t b = 0; b <= 40; ++b) {
        QuadInt q = z2(a, b);
        if (a == 0 && b == 0) continue;
        if (!classify(q).is_prime()) continue;
        REQUIRE_MESSAGE(primes_between_on_branch(q) <= 1, "a=" << a << " b=" << b);
      }
    }
  }
}
