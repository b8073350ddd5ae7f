#include "discrep/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "discrep/reduce.hpp"

namespace discrep {

namespace {

TestFunction::Group build_group(const PointSet& ps, const std::vector<ShapeVector>& shapes,
                                int key) {
  TestFunction::Group group;
  group.key = key;
  group.fns.reserve(shapes.size());
  group.greedy_inner_products.reserve(shapes.size());
  for (const auto& shape : shapes) {
    auto greedy = build_r_function_greedy(ps, shape);
    group.fns.push_back(std::move(greedy.fn));
    group.greedy_inner_products.push_back(greedy.inner_product);
  }
  return group;
}

}  // namespace

std::size_t TestFunction::component_count() const {
  std::size_t count = 0;
  for (const auto& g : groups_) count += g.fns.size();
  return count;
}

double TestFunction::evaluate(std::span<const double> x) const {
  if (kind_ == TestFnKind::YSine) {
    double inner_scale = sine_c_ / std::sqrt(static_cast<double>(level_));
    double total = 0.0;
    for (const auto& g : groups_) {
      double s = 0.0;
      for (const auto& fn : g.fns) s += fn.evaluate(x);
      total += std::sin(inner_scale * s);
    }
    return scale_ * total;
  }
  double total = 0.0;
  for (const auto& g : groups_)
    for (const auto& fn : g.fns) total += fn.evaluate(x);
  return scale_ * total;
}

double TestFunction::l2_norm_sq_exact() const {
  if (kind_ == TestFnKind::YSine)
    throw std::invalid_argument("l2_norm_sq_exact: not defined for the sine composite");
  // Components are pairwise orthogonal with ||f_r||_2 = 1 (+-1 valued), so
  // the square norm is scale^2 times the component count.
  return scale_ * scale_ * static_cast<double>(component_count());
}

double TestFunction::inner_product_exact_value() const {
  if (kind_ == TestFnKind::YSine)
    throw std::invalid_argument("inner_product_exact_value: sine composite is nonlinear");
  KahanSum total;
  for (const auto& g : groups_)
    for (double ip : g.greedy_inner_products) total.add(ip);
  return scale_ * total.value();
}

TestFunction build_Z(const PointSet& ps, std::optional<int> n_override) {
  TestFunction z;
  z.kind_ = TestFnKind::Z;
  z.dim_ = ps.dim();
  z.level_ = n_override.value_or(roth_level(ps.size()));
  z.scale_ = std::pow(static_cast<double>(z.level_), -(ps.dim() - 1) / 2.0);
  z.groups_.push_back(build_group(ps, shapes_of_order(ps.dim(), z.level_), 0));
  return z;
}

TestFunction build_Y_dichotomy(const PointSet& ps, double epsilon,
                               std::optional<int> n_override) {
  if (!(epsilon > 0.0 && epsilon <= 0.5))
    throw std::invalid_argument("build_Y_dichotomy: epsilon must be in (0, 1/2]");
  TestFunction y = build_Z(ps, n_override);
  y.kind_ = TestFnKind::YDichotomy;
  y.q_ = std::pow(static_cast<double>(y.level_), epsilon);
  y.scale_ /= y.q_;
  return y;
}

TestFunction build_Y_sine(const PointSet& ps, double c, bool allow_any_dim,
                          std::optional<int> n_override) {
  if (ps.dim() != 3 && !allow_any_dim)
    throw std::invalid_argument("build_Y_sine: construction is three-dimensional");
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("build_Y_sine: c must be in (0, 1)");
  TestFunction y;
  y.kind_ = TestFnKind::YSine;
  y.dim_ = ps.dim();
  y.level_ = n_override.value_or(roth_level(ps.size()));
  y.scale_ = 1.0 / std::sqrt(static_cast<double>(y.level_));
  y.sine_c_ = c;
  auto all_shapes = shapes_of_order(ps.dim(), y.level_);
  for (int j = 1; j <= y.level_ / 2; ++j) {
    std::vector<ShapeVector> shapes;
    for (const auto& s : all_shapes)
      if (s.levels[0] == j) shapes.push_back(s);
    y.groups_.push_back(build_group(ps, shapes, j));
  }
  return y;
}

std::vector<double> test_function_values(const TestFunction& fn, const SampleSet& samples) {
  if (samples.dim != fn.dim())
    throw std::invalid_argument("test_function_values: dimension mismatch");
  std::vector<double> values(samples.count());
  double* out = values.data();
  parallel_blocks<int>(samples.count(), 256, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = fn.evaluate(samples.sample(i));
    return 0;
  });
  return values;
}

InnerProductReport test_inner_product(const PointSet& ps, const TestFunction& fn,
                                      NormMethod mode, std::size_t samples,
                                      std::uint64_t seed) {
  InnerProductReport report;
  if (mode == NormMethod::Exact) {
    if (fn.kind() == TestFnKind::YSine)
      throw std::invalid_argument(
          "test_inner_product: exact mode is undefined for the sine composite");
    report.value = fn.inner_product_exact_value();
    report.method = NormMethod::Exact;
    return report;
  }
  if (samples < 2) throw std::invalid_argument("test_inner_product: need samples >= 2");
  auto set = make_samples(ps.dim(), samples, seed);
  auto d_values = discrepancy_values(ps, set);
  auto t_values = test_function_values(fn, set);
  const auto n = static_cast<double>(samples);
  struct Moments { KahanSum m, m2; };
  auto partials = parallel_blocks<Moments>(samples, 8192,
                                           [&](std::size_t lo, std::size_t hi) {
    Moments mom;
    for (std::size_t i = lo; i < hi; ++i) {
      double prod = d_values[i] * t_values[i];
      mom.m.add(prod);
      mom.m2.add(prod * prod);
    }
    return mom;
  });
  KahanSum m, m2;
  for (const auto& part : partials) {
    m.add(part.m);
    m2.add(part.m2);
  }
  double mean = m.value() / n;
  double var = std::max(0.0, m2.value() / n - mean * mean);
  report.value = mean;
  report.method = NormMethod::MonteCarlo;
  report.std_error = std::sqrt(var / n);
  report.samples = samples;
  report.seed = seed;
  return report;
}

TailReport tail_distribution(const TestFunction& fn, std::vector<double> thresholds,
                             std::size_t samples, std::uint64_t seed) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end()))
    throw std::invalid_argument("tail_distribution: thresholds must be increasing");
  for (double t : thresholds)
    if (!(t > 0.0)) throw std::invalid_argument("tail_distribution: thresholds must be positive");
  auto set = make_samples(fn.dim(), samples, seed);
  auto values = test_function_values(fn, set);
  for (double& v : values) v = std::abs(v);

  TailReport report;
  report.thresholds = std::move(thresholds);
  report.samples = samples;
  report.seed = seed;
  double eps = 1.0 / fn.dim();
  report.range_limit = std::pow(static_cast<double>(fn.level()),
                                (1.0 - 2.0 * eps) / (4.0 * fn.dim() - 2.0));

  report.survival.resize(report.thresholds.size());
  report.exceedances.resize(report.thresholds.size());
  report.used_in_fit.assign(report.thresholds.size(), false);
  for (std::size_t k = 0; k < report.thresholds.size(); ++k) {
    std::size_t exceed = 0;
    for (double v : values) exceed += v > report.thresholds[k];
    report.exceedances[k] = exceed;
    report.survival[k] = static_cast<double>(exceed) / static_cast<double>(samples);
  }

  // least squares of log-survival against t^2 over admissible thresholds
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < report.thresholds.size(); ++k) {
    if (report.exceedances[k] < 10) continue;
    if (report.thresholds[k] > report.range_limit) continue;
    report.used_in_fit[k] = true;
    xs.push_back(report.thresholds[k] * report.thresholds[k]);
    ys.push_back(std::log(report.survival[k]));
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      mx += xs[k];
      my += ys[k];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sxx += (xs[k] - mx) * (xs[k] - mx);
      sxy += (xs[k] - mx) * (ys[k] - my);
      syy += (ys[k] - my) * (ys[k] - my);
    }
    double slope = sxx > 0 ? sxy / sxx : 0.0;
    report.fit_b = -slope;
    report.fit_a = my - slope * mx;
    double ss_res = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      double pred = report.fit_a + slope * xs[k];
      ss_res += (ys[k] - pred) * (ys[k] - pred);
    }
    report.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
    report.envelope_a = report.fit_a;
    for (std::size_t k = 0; k < xs.size(); ++k)
      report.envelope_a = std::max(report.envelope_a, ys[k] + report.fit_b * xs[k]);
  }
  return report;
}

}  // namespace discrep
