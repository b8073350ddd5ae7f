#include <doctest.h>

#include <array>
#include <cmath>

#include "discrep/discrepancy.hpp"
#include "discrep/reduce.hpp"

using namespace discrep;

TEST_CASE("eval_discrepancy hand values") {
  PointSet ps(2, {0.5, 0.5}, {"manual", "", 0});
  std::array<double, 2> x{0.75, 0.75};
  CHECK(eval_discrepancy(ps, x) == doctest::Approx(0.4375).epsilon(1e-15));

  std::array<double, 2> zero{0.0, 0.0};
  CHECK(eval_discrepancy(ps, zero) == 0.0);

  PointSet corner(2, {1.0, 1.0}, {"manual", "", 0});
  std::array<double, 2> y{0.5, 0.8};
  CHECK(eval_discrepancy(corner, y) == doctest::Approx(-0.4).epsilon(1e-15));

  // ties at p_j = x_j do not count (half-open box)
  std::array<double, 2> tie{0.5, 0.5};
  CHECK(eval_discrepancy(ps, tie) == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("count additivity over disjoint unions") {
  PointSet a(2, {0.1, 0.2, 0.3, 0.4}, {"a", "", 0});
  PointSet b(2, {0.5, 0.6, 0.7, 0.8}, {"b", "", 0});
  PointSet both(2, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}, {"ab", "", 0});
  for (double t : {0.25, 0.55, 0.75, 1.0}) {
    std::array<double, 2> x{t, t};
    CHECK(count_points(both, x) == count_points(a, x) + count_points(b, x));
  }
}

TEST_CASE("l2_norm_exact closed-form 1d cases") {
  PointSet half(1, {0.5}, {"manual", "", 0});
  CHECK(l2_norm_exact(half).value == doctest::Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-14));
  PointSet zero(1, {0.0}, {"manual", "", 0});
  CHECK(l2_norm_exact(zero).value == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK(l2_norm_exact(half).std_error == 0.0);
}

TEST_CASE("l2 exact agrees with the Monte-Carlo estimate") {
  PointSet ps = generate_van_der_corput(128);
  auto exact = l2_norm_exact(ps);
  auto mc = lp_norm_mc(ps, 2.0, 200000, 17);
  CHECK(std::abs(exact.value - mc.value) <= 3.0 * mc.std_error);

  PointSet rnd = generate_random(3, 200, 23);
  auto exact3 = l2_norm_exact(rnd);
  auto mc3 = lp_norm_mc(rnd, 2.0, 200000, 31);
  CHECK(std::abs(exact3.value - mc3.value) <= 3.0 * mc3.std_error);
}

TEST_CASE("lp estimates on a fixed sample set are monotone in p") {
  PointSet ps = generate_random(2, 64, 3);
  auto set = make_samples(2, 20000, 5);
  auto values = discrepancy_values(ps, set);
  double prev = 0.0;
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
    double v = lp_norm_from_values(values, p, 5).value;
    CHECK(v >= prev * (1.0 - 1e-12));
    prev = v;
  }
}

TEST_CASE("lp_norm_mc 1d sanity against the closed form") {
  PointSet half(1, {0.5}, {"manual", "", 0});
  auto mc = lp_norm_mc(half, 2.0, 1000000, 7);
  CHECK(std::abs(mc.value - std::sqrt(1.0 / 12.0)) <= 3.0 * mc.std_error);

  PointSet ones(2, {1.0, 1.0}, {"manual", "", 0});
  auto l1 = lp_norm_mc(ones, 1.0, 1000000, 9);
  CHECK(std::abs(l1.value - 0.25) <= 3.0 * l1.std_error);  // int x1 x2 = 1/4
}

TEST_CASE("orlicz norms") {
  PointSet ps = generate_random(2, 32, 13);
  auto set = make_samples(2, 20000, 19);
  auto values = discrepancy_values(ps, set);

  SUBCASE("LlogL(0) is the L1 norm") {
    double l1 = lp_norm_from_values(values, 1.0, 19).value;
    double orlicz = orlicz_norm_from_values(values, OrliczSpec::llogl(0.0), 1e-10, 19).value;
    CHECK(orlicz == doctest::Approx(l1).epsilon(1e-8));
  }
  SUBCASE("constant function has Luxemburg norm c / phi_inv(1)") {
    std::vector<double> constant(1000, 3.0);
    double expl = orlicz_norm_from_values(constant, OrliczSpec::expl(), 1e-10, 0).value;
    CHECK(expl == doctest::Approx(3.0 / std::log(2.0)).epsilon(1e-6));
    double llogl = orlicz_norm_from_values(constant, OrliczSpec::llogl(0.5), 1e-10, 0).value;
    OrliczSpec spec = OrliczSpec::llogl(0.5);
    CHECK(llogl == doctest::Approx(3.0 / spec.phi_inverse(1.0)).epsilon(1e-6));
  }
  SUBCASE("LlogL(alpha) dominates L1") {
    double l1 = lp_norm_from_values(values, 1.0, 19).value;
    for (double alpha : {0.5, 1.0, 2.0}) {
      double v = orlicz_norm_from_values(values, OrliczSpec::llogl(alpha), 1e-8, 19).value;
      CHECK(v >= l1 * (1.0 - 1e-9));
    }
  }
  SUBCASE("all-zero values give norm 0") {
    std::vector<double> zeros(100, 0.0);
    CHECK(orlicz_norm_from_values(zeros, OrliczSpec::expl(), 1e-8, 0).value == 0.0);
  }
}

TEST_CASE("phi_inverse round trips") {
  for (double alpha : {0.0, 0.5, 1.0, 1.5}) {
    OrliczSpec spec = OrliczSpec::llogl(alpha);
    for (double y : {0.1, 1.0, 17.0, 4096.0}) {
      double t = spec.phi_inverse(y);
      CHECK(spec.phi(t) == doctest::Approx(y).epsilon(1e-9));
    }
  }
}

TEST_CASE("interpolation inequality holds on empirical measures") {
  PointSet ps = generate_van_der_corput(256);
  CHECK(check_interpolation(ps, 2.0, 10000, 3));
  CHECK(check_interpolation(ps, 3.0, 10000, 3));
  PointSet rnd = generate_random(3, 100, 8);
  CHECK(check_interpolation(rnd, 2.5, 10000, 4));
}

TEST_CASE("interpolation is equality for constants") {
  std::vector<double> constant(5000, 2.5);
  double p = 3.0, mid = 2.0 * p / (p + 1.0);
  double n1 = lp_norm_from_values(constant, 1.0, 0).value;
  double np = lp_norm_from_values(constant, p, 0).value;
  double nm = lp_norm_from_values(constant, mid, 0).value;
  CHECK(nm == doctest::Approx(std::sqrt(n1 * np)).epsilon(1e-12));
}

TEST_CASE("norm estimates are schedule independent") {
  PointSet ps = generate_random(2, 128, 77);
  set_thread_count(1);
  auto serial = lp_norm_mc(ps, 2.0, 50000, 5);
  auto serial_orlicz = orlicz_norm_mc(ps, OrliczSpec::llogl(1.0), 50000, 5);
  set_thread_count(8);
  auto threaded = lp_norm_mc(ps, 2.0, 50000, 5);
  auto threaded_orlicz = orlicz_norm_mc(ps, OrliczSpec::llogl(1.0), 50000, 5);
  set_thread_count(0);
  CHECK(serial.value == threaded.value);
  CHECK(serial.std_error == threaded.std_error);
  CHECK(serial_orlicz.value == threaded_orlicz.value);
}

TEST_CASE("stratified sampling stays consistent with the exact L2 norm") {
  PointSet ps = generate_van_der_corput(64);
  auto exact = l2_norm_exact(ps);
  auto mc = lp_norm_mc(ps, 2.0, 100000, 41, /*stratified=*/true);
  CHECK(std::abs(exact.value - mc.value) <= 3.0 * mc.std_error);
}
