#include <doctest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "discrep/discrepancy.hpp"
#include "discrep/haar.hpp"
#include "oracles.hpp"

using namespace discrep;

TEST_CASE("roth_level") {
  CHECK(roth_level(1) == 1);
  CHECK(roth_level(2) == 2);
  CHECK(roth_level(3) == 3);
  CHECK(roth_level(4) == 3);
  CHECK(roth_level(5) == 4);
  CHECK(roth_level(1024) == 11);
  CHECK_THROWS(roth_level(0));
}

TEST_CASE("shapes_of_order enumerates all compositions") {
  auto d2 = shapes_of_order(2, 4);
  CHECK(d2.size() == 5);  // C(4+1, 1)
  auto d3 = shapes_of_order(3, 4);
  CHECK(d3.size() == 15);  // C(4+2, 2)
  for (const auto& s : d3) {
    CHECK(s.order() == 4);
    CHECK(s.dim() == 3);
  }
  auto trivial = shapes_of_order(3, 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].levels == std::vector<int>{0, 0, 0});
}

TEST_CASE("haar_coefficient hand values in 1d") {
  PointSet half(1, {0.5}, {"manual", "", 0});
  DyadicRectangle full{ShapeVector{{0}}, {0}};
  CHECK(haar_coefficient(half, full) == doctest::Approx(0.25).epsilon(1e-15));

  PointSet right(1, {0.75}, {"manual", "", 0});
  DyadicRectangle left_half{ShapeVector{{1}}, {0}};
  CHECK(haar_coefficient(right, left_half) == doctest::Approx(-1.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("points at the corner contribute nothing to the tent sum") {
  PointSet corner(2, {1.0, 1.0, 1.0, 1.0}, {"manual", "", 0});
  DyadicRectangle full{ShapeVector{{0, 0}}, {0, 0}};
  // tent vanishes at 1, leaving only -N * 4^{-d}
  CHECK(haar_coefficient(corner, full) == doctest::Approx(-2.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("rational arithmetic agrees with the double path") {
  PointSet ps = generate_random(2, 40, 33);
  for (const auto& shape : shapes_of_order(2, 4)) {
    for (std::uint32_t a = 0; a < (1u << shape.levels[0]); ++a)
      for (std::uint32_t b = 0; b < (1u << shape.levels[1]); ++b) {
        DyadicRectangle rect{shape, {a, b}};
        double fast = haar_coefficient(ps, rect);
        double exact = haar_coefficient_rational(ps, rect);
        CHECK(fast == doctest::Approx(exact).epsilon(1e-12));
      }
  }
}

TEST_CASE("haar_coefficient matches dense quadrature on grid-aligned points") {
  // van der Corput coordinates at N = 32 are multiples of 2^-5, so the
  // midpoint rule at res = 10 is exact for every rectangle of order < 10.
  PointSet ps = generate_van_der_corput(32);
  for (const auto& shape : shapes_of_order(2, 5)) {
    for (std::uint32_t a = 0; a < (1u << shape.levels[0]); a += 3)
      for (std::uint32_t b = 0; b < (1u << shape.levels[1]); b += 3) {
        DyadicRectangle rect{shape, {a, b}};
        double closed = haar_coefficient(ps, rect);
        double quad = testing::quad_discrepancy_haar(ps, rect, 10);
        CHECK(closed == doctest::Approx(quad).epsilon(1e-10).scale(1.0));
      }
  }
}

TEST_CASE("all_coefficients equals the per-rectangle path bit for bit") {
  PointSet ps = generate_random(2, 64, 55);
  for (int order : {0, 3, 6}) {
    for (const auto& shape : shapes_of_order(2, order)) {
      auto coefs = all_coefficients(ps, shape);
      REQUIRE(coefs.size() == shape.rectangle_count());
      for (std::uint32_t a = 0; a < (1u << shape.levels[0]); ++a)
        for (std::uint32_t b = 0; b < (1u << shape.levels[1]); ++b) {
          DyadicRectangle rect{shape, {a, b}};
          std::uint64_t idx = (std::uint64_t{a} << shape.levels[1]) | b;
          CHECK(coefs[idx] == haar_coefficient(ps, rect));
        }
    }
  }
}

TEST_CASE("coordinate 1.0 lands in the last bucket without breaking sums") {
  PointSet ps(1, {1.0, 0.3}, {"manual", "", 0});
  auto coefs = all_coefficients(ps, ShapeVector{{2}});
  for (std::uint32_t a = 0; a < 4; ++a) {
    DyadicRectangle rect{ShapeVector{{2}}, {a}};
    CHECK(coefs[a] == haar_coefficient(ps, rect));
  }
}

TEST_CASE("RFunction evaluation") {
  // d=2, shape (1, 0): four rectangles? no, two: pos over 2 x 1.
  ShapeVector shape{{1, 0}};
  std::vector<std::uint64_t> packed{0b11};  // both signs +1
  RFunction fn(shape, std::move(packed));

  // left halves: x < 0.25 on axis 0 (level 1) and x < 0.5 on axis 1 (level 0)
  std::array<double, 2> a{0.1, 0.1};  // both left: h = +1
  std::array<double, 2> b{0.3, 0.1};  // axis 0 right, axis 1 left: h = -1
  std::array<double, 2> c{0.3, 0.7};  // both right: h = +1
  CHECK(fn.evaluate(a) == 1.0);
  CHECK(fn.evaluate(b) == -1.0);
  CHECK(fn.evaluate(c) == 1.0);

  RFunction flipped(shape, {0b10});  // rect 0 = pos (0,0) gets sign -1
  CHECK(flipped.evaluate(a) == -1.0);
  std::array<double, 2> other{0.6, 0.1};  // rect 1, left on both halves
  CHECK(flipped.evaluate(other) == 1.0);
}

TEST_CASE("r-functions integrate to zero and have unit L2 norm") {
  PointSet ps = generate_random(2, 16, 3);
  for (const auto& shape : shapes_of_order(2, 3)) {
    auto greedy = build_r_function_greedy(ps, shape);
    const RFunction& fn = greedy.fn;
    double integral = testing::dyadic_grid_integral(
        2, 6, [&](std::span<const double> x) { return fn.evaluate(x); });
    CHECK(integral == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    double norm_sq = testing::dyadic_grid_integral(
        2, 6, [&](std::span<const double> x) {
          double v = fn.evaluate(x);
          return v * v;
        });
    CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("r-functions of distinct shapes are orthogonal") {
  PointSet ps = generate_random(2, 16, 4);
  auto shapes = shapes_of_order(2, 3);
  std::vector<RFunction> fns;
  for (const auto& shape : shapes) fns.push_back(build_r_function_greedy(ps, shape).fn);
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = i + 1; j < fns.size(); ++j) {
      double ip = testing::dyadic_grid_integral(2, 6, [&](std::span<const double> x) {
        return fns[i].evaluate(x) * fns[j].evaluate(x);
      });
      CHECK(ip == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("greedy signs maximize the inner product") {
  PointSet ps = generate_van_der_corput(64);
  ShapeVector shape{{3, 2}};
  auto greedy = build_r_function_greedy(ps, shape);

  auto coefs = all_coefficients(ps, shape);
  double abs_sum = 0.0, max_abs = 0.0;
  for (double c : coefs) {
    abs_sum += std::abs(c);
    max_abs = std::max(max_abs, std::abs(c));
  }
  CHECK(greedy.inner_product == doctest::Approx(abs_sum).epsilon(1e-12));
  CHECK(greedy.max_abs_coefficient == doctest::Approx(max_abs).epsilon(1e-15));
  CHECK(inner_product_exact(ps, greedy.fn) == doctest::Approx(greedy.inner_product).epsilon(1e-12));

  // flipping any single sign cannot increase <D_N, f>
  for (std::uint64_t i = 0; i < shape.rectangle_count(); ++i) {
    auto packed = greedy.fn.packed_signs();
    packed[i >> 6] ^= std::uint64_t{1} << (i & 63);
    RFunction flipped(shape, std::move(packed));
    CHECK(inner_product_exact(ps, flipped) <= greedy.inner_product + 1e-12);
  }
}

TEST_CASE("exact inner product matches dense quadrature") {
  PointSet ps = generate_van_der_corput(16);  // coordinates multiples of 2^-4
  ShapeVector shape{{2, 1}};
  auto greedy = build_r_function_greedy(ps, shape);
  double quad = testing::dyadic_grid_integral(2, 9, [&](std::span<const double> x) {
    return eval_discrepancy(ps, x) * greedy.fn.evaluate(x);
  });
  CHECK(greedy.inner_product == doctest::Approx(quad).epsilon(1e-9));
}

TEST_CASE("exact inner product agrees with Monte Carlo") {
  PointSet ps = generate_van_der_corput(128);
  ShapeVector shape{{4, 3}};
  auto greedy = build_r_function_greedy(ps, shape);
  auto samples = make_samples(2, 400000, 71);
  double mean = 0.0, m2 = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < samples.count(); ++i) {
    double v = eval_discrepancy(ps, samples.sample(i)) * greedy.fn.evaluate(samples.sample(i));
    ++k;
    double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }
  double se = std::sqrt(m2 / static_cast<double>(k - 1) / static_cast<double>(k));
  CHECK(std::abs(mean - greedy.inner_product) <= 4.0 * se);
}

TEST_CASE("weighted inner product is linear") {
  PointSet ps = generate_random(2, 32, 9);
  auto f1 = build_r_function_greedy(ps, ShapeVector{{2, 1}});
  auto f2 = build_r_function_greedy(ps, ShapeVector{{0, 3}});
  std::array<WeightedRFunction, 2> terms{{{2.0, &f1.fn}, {-0.5, &f2.fn}}};
  double combo = inner_product_exact(ps, terms);
  CHECK(combo == doctest::Approx(2.0 * f1.inner_product - 0.5 * f2.inner_product).epsilon(1e-12));
}

TEST_CASE("RFunction serialization round trip") {
  PointSet ps = generate_random(3, 20, 12);
  ShapeVector shape{{3, 2, 2}};
  auto greedy = build_r_function_greedy(ps, shape);
  std::stringstream ss;
  write_r_function(ss, greedy.fn);
  RFunction back = read_r_function(ss);
  CHECK(back.shape().levels == shape.levels);
  CHECK(back.packed_signs() == greedy.fn.packed_signs());

  std::stringstream bad("XXXX....");
  CHECK_THROWS(read_r_function(bad));
  std::stringstream truncated;
  truncated.write("DRF1\x02\x00\x00\x00", 8);
  CHECK_THROWS(read_r_function(truncated));
}

TEST_CASE("shape order cap is enforced") {
  ShapeVector big{{kMaxShapeOrder + 1}};
  PointSet ps(1, {0.5}, {"manual", "", 0});
  CHECK_THROWS(all_coefficients(ps, big));
}
