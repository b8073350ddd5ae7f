#include "discrep/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "discrep/reduce.hpp"
#include "discrep/rng.hpp"

namespace discrep {

std::string NormReport::kind_label() const {
  switch (kind) {
    case NormKind::L1: return "L1";
    case NormKind::L2: return "L2";
    case NormKind::Lp: return "Lp(" + std::to_string(p) + ")";
    case NormKind::LlogL: return "LlogL(" + std::to_string(alpha) + ")";
    case NormKind::ExpL: return "expL";
  }
  return "?";
}

void to_json(nlohmann::json& j, const NormReport& r) {
  j = nlohmann::json{{"norm_kind", r.kind_label()},
                     {"value", r.value},
                     {"method", r.method == NormMethod::Exact ? "exact"
                                : r.method == NormMethod::MonteCarlo ? "monte_carlo"
                                                                     : "bisection_mc"},
                     {"std_error", r.std_error},
                     {"samples", r.samples},
                     {"seed", r.seed}};
}

double OrliczSpec::phi(double t) const {
  if (exp_l) return std::expm1(t);
  if (alpha == 0.0) return t;
  return t * std::pow(std::log(std::exp(1.0) + t), alpha);
}

double OrliczSpec::phi_derivative(double t) const {
  if (exp_l) return std::exp(t);
  if (alpha == 0.0) return 1.0;
  double l = std::log(std::exp(1.0) + t);
  return std::pow(l, alpha) + t * alpha * std::pow(l, alpha - 1.0) / (std::exp(1.0) + t);
}

double OrliczSpec::phi_inverse(double y) const {
  if (y <= 0.0) return 0.0;
  if (exp_l) return std::log1p(y);
  if (alpha == 0.0) return y;
  // Newton with a bisection fallback; phi is convex increasing.
  double lo = 0.0, hi = std::max(1.0, y);
  while (phi(hi) < y) hi *= 2.0;
  double t = y / std::pow(std::log(std::exp(1.0) + y), alpha);
  if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double f = phi(t) - y;
    if (std::abs(f) <= 1e-12 * y) break;
    if (f > 0) hi = t; else lo = t;
    double t_new = t - f / phi_derivative(t);
    if (!(t_new > lo && t_new < hi)) t_new = 0.5 * (lo + hi);
    if (t_new == t) break;
    t = t_new;
  }
  return t;
}

std::string OrliczSpec::label() const {
  return exp_l ? "expL" : "LlogL(" + std::to_string(alpha) + ")";
}

std::size_t count_points(const PointSet& ps, std::span<const double> x) {
  if (static_cast<int>(x.size()) != ps.dim())
    throw std::invalid_argument("count_points: dimension mismatch");
  const int d = ps.dim();
  const double* coords = ps.coords().data();
  std::size_t count = 0;
  const std::size_t n = ps.size();
  // branchless membership test: data-dependent branches mispredict badly
  // on random samples and dominate the Monte-Carlo kernels
  if (d == 2) {
    const double x0 = x[0], x1 = x[1];
    for (std::size_t i = 0; i < n; ++i)
      count += static_cast<unsigned>(coords[2 * i] < x0) &
               static_cast<unsigned>(coords[2 * i + 1] < x1);
    return count;
  }
  if (d == 3) {
    const double x0 = x[0], x1 = x[1], x2 = x[2];
    for (std::size_t i = 0; i < n; ++i)
      count += static_cast<unsigned>(coords[3 * i] < x0) &
               static_cast<unsigned>(coords[3 * i + 1] < x1) &
               static_cast<unsigned>(coords[3 * i + 2] < x2);
    return count;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double* pt = coords + i * d;
    unsigned in = 1;
    for (int j = 0; j < d; ++j) in &= pt[j] < x[j];
    count += in;
  }
  return count;
}

double eval_discrepancy(const PointSet& ps, std::span<const double> x) {
  double volume = 1.0;
  for (double c : x) volume *= c;
  return static_cast<double>(count_points(ps, x)) -
         static_cast<double>(ps.size()) * volume;
}

namespace {

constexpr std::size_t kPairBlockRows = 16;

// sum over q in P2 of prod_j (1 - max(p_j, q_j)) for each p-row block.
double pair_sum(const PointSet& a, const PointSet& b) {
  const int d = a.dim();
  const double* pa = a.coords().data();
  const double* pb = b.coords().data();
  const std::size_t nb = b.size();
  return parallel_compensated_sum(a.size(), kPairBlockRows,
                                  [&](std::size_t lo, std::size_t hi) {
    KahanSum block;
    for (std::size_t i = lo; i < hi; ++i) {
      const double* p = pa + i * d;
      for (std::size_t j = 0; j < nb; ++j) {
        const double* q = pb + j * d;
        double prod = 1.0;
        for (int k = 0; k < d; ++k) prod *= 1.0 - std::max(p[k], q[k]);
        block.add(prod);
      }
    }
    return block;
  });
}

double linear_cross_sum(const PointSet& ps) {
  const int d = ps.dim();
  const double* coords = ps.coords().data();
  return parallel_compensated_sum(ps.size(), 1024,
                                  [&](std::size_t lo, std::size_t hi) {
    KahanSum block;
    for (std::size_t i = lo; i < hi; ++i) {
      const double* p = coords + i * d;
      double prod = 1.0;
      for (int k = 0; k < d; ++k) prod *= (1.0 - p[k] * p[k]) * 0.5;
      block.add(prod);
    }
    return block;
  });
}

}  // namespace

NormReport l2_norm_exact(const PointSet& ps) {
  const auto n = static_cast<double>(ps.size());
  double sq = pair_sum(ps, ps) - 2.0 * n * linear_cross_sum(ps) +
              n * n / std::pow(3.0, ps.dim());
  NormReport r;
  r.kind = NormKind::L2;
  r.value = std::sqrt(std::max(0.0, sq));
  r.method = NormMethod::Exact;
  return r;
}

NormReport l2_diff_norm_exact(const PointSet& ps, const PointSet& ps2) {
  if (ps.dim() != ps2.dim())
    throw std::invalid_argument("l2_diff_norm_exact: dimension mismatch");
  double sq = pair_sum(ps, ps) - 2.0 * pair_sum(ps, ps2) + pair_sum(ps2, ps2);
  NormReport r;
  r.kind = NormKind::L2;
  r.value = std::sqrt(std::max(0.0, sq));
  r.method = NormMethod::Exact;
  return r;
}

SampleSet make_samples(int dim, std::size_t samples, std::uint64_t seed,
                       bool stratified) {
  if (dim < 1 || samples < 1)
    throw std::invalid_argument("make_samples: dim and samples must be >= 1");
  SampleSet set;
  set.dim = dim;
  set.seed = seed;
  set.stratified = stratified;
  set.coords.resize(samples * dim);

  int total_level = 0;
  std::vector<int> levels(dim, 0);
  std::uint64_t full_passes = 0;
  if (stratified) {
    while ((std::uint64_t{1} << (total_level + 1)) <= samples &&
           total_level + 1 <= 40)
      ++total_level;
    for (int l = 0; l < total_level; ++l) ++levels[l % dim];
    // only complete passes over the strata are stratified; the remainder is
    // drawn uniformly so every cell keeps the same expected density
    full_passes = (samples >> total_level) << total_level;
  }

  double* out = set.coords.data();
  parallel_blocks<int>(samples, 8192, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      SampleStream stream(seed, i);
      if (!stratified || i >= full_passes) {
        for (int j = 0; j < dim; ++j) out[i * dim + j] = stream.next_unit();
      } else {
        std::uint64_t cell = i & ((std::uint64_t{1} << total_level) - 1);
        for (int j = 0; j < dim; ++j) {
          std::uint64_t width = std::uint64_t{1} << levels[j];
          std::uint64_t digit = cell & (width - 1);
          cell >>= levels[j];
          out[i * dim + j] =
              (static_cast<double>(digit) + stream.next_unit()) / static_cast<double>(width);
        }
      }
    }
    return 0;
  });
  return set;
}

std::vector<double> discrepancy_values(const PointSet& ps, const SampleSet& samples) {
  if (samples.dim != ps.dim())
    throw std::invalid_argument("discrepancy_values: dimension mismatch");
  std::vector<double> values(samples.count());
  double* out = values.data();
  parallel_blocks<int>(samples.count(), 256, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      out[i] = eval_discrepancy(ps, samples.sample(i));
    return 0;
  });
  return values;
}

std::vector<double> count_diff_values(const PointSet& ps, const PointSet& ps2,
                                      const SampleSet& samples) {
  if (samples.dim != ps.dim() || ps.dim() != ps2.dim())
    throw std::invalid_argument("count_diff_values: dimension mismatch");
  std::vector<double> values(samples.count());
  double* out = values.data();
  parallel_blocks<int>(samples.count(), 256, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto x = samples.sample(i);
      out[i] = static_cast<double>(count_points(ps, x)) -
               static_cast<double>(count_points(ps2, x));
    }
    return 0;
  });
  return values;
}

NormReport lp_norm_from_values(std::span<const double> values, double p,
                               std::uint64_t seed) {
  if (p < 1.0) throw std::invalid_argument("lp_norm_from_values: p must be >= 1");
  if (values.size() < 2)
    throw std::invalid_argument("lp_norm_from_values: need at least 2 samples");
  const auto n = static_cast<double>(values.size());
  struct Moments { KahanSum m, m2; };
  auto partials = parallel_blocks<Moments>(values.size(), 8192,
                                           [&](std::size_t lo, std::size_t hi) {
    Moments mom;
    for (std::size_t i = lo; i < hi; ++i) {
      double a = std::pow(std::abs(values[i]), p);
      mom.m.add(a);
      mom.m2.add(a * a);
    }
    return mom;
  });
  KahanSum m, m2;
  for (const auto& part : partials) {
    m.add(part.m);
    m2.add(part.m2);
  }
  double mean = m.value() / n;
  double var = std::max(0.0, m2.value() / n - mean * mean) / n;
  NormReport r;
  r.kind = p == 1.0 ? NormKind::L1 : (p == 2.0 ? NormKind::L2 : NormKind::Lp);
  r.p = p;
  r.value = std::pow(mean, 1.0 / p);
  // delta method on the p-th moment
  r.std_error = mean > 0.0
                    ? (1.0 / p) * std::pow(mean, 1.0 / p - 1.0) * std::sqrt(var)
                    : 0.0;
  if (r.std_error == 0.0) r.std_error = 1e-300;  // MC result, never claim exact
  r.method = NormMethod::MonteCarlo;
  r.samples = values.size();
  r.seed = seed;
  return r;
}

NormReport orlicz_norm_from_values(std::span<const double> values,
                                   const OrliczSpec& spec, double tol,
                                   std::uint64_t seed) {
  if (values.size() < 2)
    throw std::invalid_argument("orlicz_norm_from_values: need at least 2 samples");
  if (!(tol > 0.0)) throw std::invalid_argument("orlicz_norm_from_values: tol must be > 0");
  const auto n = static_cast<double>(values.size());
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::abs(v));

  NormReport r;
  r.kind = spec.exp_l ? NormKind::ExpL : NormKind::LlogL;
  r.alpha = spec.alpha;
  r.method = NormMethod::BisectionMc;
  r.samples = values.size();
  r.seed = seed;
  if (vmax == 0.0) {
    r.value = 0.0;
    r.std_error = 1e-300;
    return r;
  }

  auto mean_phi = [&](double lambda) {
    KahanSum s;
    for (double v : values) s.add(spec.phi(std::abs(v) / lambda));
    return s.value() / n;
  };

  double lo = vmax / spec.phi_inverse(n);
  double hi = vmax;
  while (mean_phi(hi) > 1.0) hi *= 2.0;  // bracket validity
  while (hi - lo > tol * hi) {
    double mid = 0.5 * (lo + hi);
    if (mean_phi(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  double lambda = hi;
  r.value = lambda;

  // delta method: lambda solves mean phi(|v|/lambda) = 1;
  // Var(lambda) ~= Var(phi(|v|/lambda)) / (n * g'(lambda)^2).
  KahanSum s2, sd;
  for (double v : values) {
    double t = std::abs(v) / lambda;
    double ph = spec.phi(t);
    s2.add(ph * ph);
    sd.add(spec.phi_derivative(t) * std::abs(v));
  }
  double g = mean_phi(lambda);
  double var_phi = std::max(0.0, s2.value() / n - g * g);
  double gprime = sd.value() / n / (lambda * lambda);
  r.std_error = gprime > 0.0 ? std::sqrt(var_phi / n) / gprime : 0.0;
  if (r.std_error == 0.0) r.std_error = 1e-300;
  return r;
}

NormReport lp_norm_mc(const PointSet& ps, double p, std::size_t samples,
                      std::uint64_t seed, bool stratified) {
  auto set = make_samples(ps.dim(), samples, seed, stratified);
  auto values = discrepancy_values(ps, set);
  return lp_norm_from_values(values, p, seed);
}

NormReport orlicz_norm_mc(const PointSet& ps, const OrliczSpec& spec,
                          std::size_t samples, std::uint64_t seed, double tol) {
  auto set = make_samples(ps.dim(), samples, seed);
  auto values = discrepancy_values(ps, set);
  return orlicz_norm_from_values(values, spec, tol, seed);
}

bool check_interpolation(const PointSet& ps, double p, std::size_t samples,
                         std::uint64_t seed) {
  if (!(p > 1.0)) throw std::invalid_argument("check_interpolation: p must be > 1");
  auto set = make_samples(ps.dim(), samples, seed);
  auto values = discrepancy_values(ps, set);
  double mid = 2.0 * p / (p + 1.0);
  double n1 = lp_norm_from_values(values, 1.0, seed).value;
  double np = lp_norm_from_values(values, p, seed).value;
  double nm = lp_norm_from_values(values, mid, seed).value;
  return nm <= std::sqrt(n1 * np) * (1.0 + 1e-12) + 1e-300;
}

}  // namespace discrep
