#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "quadwalk/analytics.hpp"
#include "quadwalk/enumeration.hpp"

using namespace quadwalk;

TEST_CASE("closed forms") {
  const double e = std::exp(1.0);
  const double pi = std::acos(-1.0);

  CHECK(gaussian_disk_count_asymptotic(e) == doctest::Approx(2 * e * e).epsilon(1e-12));
  CHECK(gaussian_disk_count_asymptotic(100.0) ==
        doctest::Approx(2e4 / std::log(100.0)).epsilon(1e-12));
  CHECK(gaussian_density_asymptotic(e) == doctest::Approx(2 / pi).epsilon(1e-12));
  CHECK(gaussian_density_asymptotic(std::pow(e, 4)) == doctest::Approx(1 / (2 * pi)).epsilon(1e-12));
  CHECK(family_count_asymptotic(e) == doctest::Approx(e * e / 2).epsilon(1e-12));
  CHECK(family_count_asymptotic(1000.0) ==
        doctest::Approx(1e6 / (2 * std::log(1000.0))).epsilon(1e-12));
  CHECK(family_density_asymptotic(std::pow(e, 2), 1.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(family_density_asymptotic(std::sqrt(e), 0.5) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(gaussian_disk_count_asymptotic(1.0), std::domain_error);
  CHECK_THROWS_AS(gaussian_density_asymptotic(0.5), std::domain_error);
  CHECK_THROWS_AS(family_count_asymptotic(1.0), std::domain_error);
  CHECK_THROWS_AS(family_density_asymptotic(10.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(family_density_asymptotic(10.0, -1.0), std::domain_error);
}

TEST_CASE("asymptotics track exhaustive counts") {
  SUBCASE("gaussian disk count at r = 500") {
    double ratio = static_cast<double>(count_primes_in_disk(RingId::gauss(), 500.0)) /
                   gaussian_disk_count_asymptotic(500.0);
    CHECK(ratio > 0.7);
    CHECK(ratio < 1.3);
  }
  SUBCASE("gaussian density at r = 500") {
    double emp = static_cast<double>(count_primes_in_disk(RingId::gauss(), 500.0)) /
                 static_cast<double>(lattice_points_in_disk(500.0));
    double asym = gaussian_density_asymptotic(500.0);
    CHECK(std::abs(emp - asym) / asym < 0.3);
  }
  SUBCASE("family count at r = 1000") {
    double ratio = static_cast<double>(families_with_primes(1'000'000).size()) /
                   family_count_asymptotic(1000.0);
    CHECK(ratio > 0.7);
    CHECK(ratio < 1.3);
  }
  SUBCASE("family density at r = 1000") {
    double b = estimate_bernays_constant(1'000'000).b_estimate;
    double emp = static_cast<double>(families_with_primes(1'000'000).size()) /
                 (2.0 * static_cast<double>(representable_count(1'000'000)));
    double asym = family_density_asymptotic(1000.0, b);
    CHECK(std::abs(emp - asym) / asym < 0.25);
  }
}

TEST_CASE("estimate_bernays_constant") {
  BernaysEstimate e20 = estimate_bernays_constant(20);
  CHECK(e20.n == 20);
  CHECK(e20.b_estimate == doctest::Approx(10.0 * std::sqrt(std::log(20.0)) / 20.0).epsilon(1e-12));
  CHECK(e20.b_estimate == doctest::Approx(0.865409).epsilon(1e-5));
  CHECK(e20.b_estimate > 0);

  CHECK_THROWS_AS(estimate_bernays_constant(0), std::domain_error);
  CHECK_THROWS_AS(estimate_bernays_constant(1), std::domain_error);

  double e4 = estimate_bernays_constant(10'000).b_estimate;
  double e5 = estimate_bernays_constant(100'000).b_estimate;
  double e6 = estimate_bernays_constant(1'000'000).b_estimate;
  CHECK(e4 == doctest::Approx(0.74232535).epsilon(1e-6));
  CHECK(e5 == doctest::Approx(0.72859397).epsilon(1e-6));
  CHECK(e6 == doctest::Approx(0.72031722).epsilon(1e-6));
  CHECK(std::abs(e6 - e5) < std::abs(e5 - e4));
}

TEST_CASE("moat_bound_report") {
  MoatBoundReport rep = moat_bound_report(10.0, 5.0, 1000.0);
  CHECK(rep.r == 10.0);
  CHECK(rep.k == 5.0);
  CHECK(rep.x == 1000.0);
  CHECK(rep.c_max == doctest::Approx(34641.0161514).epsilon(1e-9));
  CHECK(rep.d_cc == doctest::Approx(5877.49919564).epsilon(1e-9));
  CHECK(rep.pd == doctest::Approx(5877.49068861).epsilon(1e-9));
  CHECK(rep.steps_lower == doctest::Approx(1175.49813772).epsilon(1e-9));
  CHECK(rep.families_upper == doctest::Approx(6628.08760145).epsilon(1e-9));
  CHECK(rep.ratio == doctest::Approx(0.177351026179).epsilon(1e-9));

  std::vector<double> ratios;
  for (double x : {1e3, 1e4, 1e5, 1e6}) ratios.push_back(moat_bound_report(10, 5, x).ratio);
  CHECK(ratios[0] == doctest::Approx(0.177351026179).epsilon(1e-9));
  CHECK(ratios[1] == doctest::Approx(0.217615027427).epsilon(1e-9));
  CHECK(ratios[2] == doctest::Approx(0.257039832643).epsilon(1e-9));
  CHECK(ratios[3] == doctest::Approx(0.296361299908).epsilon(1e-9));
  for (std::size_t i = 1; i < ratios.size(); ++i) CHECK(ratios[i] > ratios[i - 1]);

  CHECK_THROWS_AS(moat_bound_report(10, 5, 1e-3), std::domain_error);
  CHECK_THROWS_AS(moat_bound_report(0, 5, 1000), std::domain_error);
  CHECK_THROWS_AS(moat_bound_report(10, 0, 1000), std::domain_error);
  CHECK_THROWS_AS(moat_bound_report(10, 5, 0), std::domain_error);

  SUBCASE("crossover scan") {
    double prev = 0;
    int crossover = -1;
    for (int e = 1; e <= 30; ++e) {
      double ratio = moat_bound_report(10, 5, std::pow(10.0, e)).ratio;
      CHECK(ratio > prev);
      prev = ratio;
      if (crossover < 0 && ratio > 1.0) crossover = e;
    }
    CHECK(crossover == 24);
    CHECK(moat_bound_report(10, 5, 1e24).ratio == doctest::Approx(1.003900).epsilon(1e-5));
    CHECK(moat_bound_report(10, 5, 1e23).ratio < 1.0);
  }
}

TEST_CASE("compare_disk_counts") {
  auto one = compare_disk_counts(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].n == 1);
  CHECK(one[0].count_zi == 0);
  CHECK(one[0].count_zsqrt2 == 2);

  auto rows = compare_disk_counts(1, 60);
  REQUIRE(rows.size() == 60);
  CHECK(rows.back().count_zi == 2016);
  CHECK(rows.back().count_zsqrt2 == 2674);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].count_zi >= rows[i - 1].count_zi);
    CHECK(rows[i].count_zsqrt2 >= rows[i - 1].count_zsqrt2);
  }
  for (const auto& row : rows) {
    if (row.n >= 5) CHECK(row.count_zsqrt2 > row.count_zi);
  }

  CHECK_THROWS_AS(compare_disk_counts(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(compare_disk_counts(5, 4), std::invalid_argument);
}
