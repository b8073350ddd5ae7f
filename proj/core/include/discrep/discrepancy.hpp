#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "discrep/pointset.hpp"

namespace discrep {

enum class NormKind { L1, L2, Lp, LlogL, ExpL };
enum class NormMethod { Exact, MonteCarlo, BisectionMc };

struct NormReport {
  NormKind kind = NormKind::L2;
  double p = 0.0;        // for Lp
  double alpha = 0.0;    // for LlogL
  double value = 0.0;
  NormMethod method = NormMethod::Exact;
  double std_error = 0.0;  // 0 iff method == Exact
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  std::string kind_label() const;
};

void to_json(nlohmann::json& j, const NormReport& r);

// Young function for the Luxemburg norm. L(log L)^alpha uses
// Phi(t) = t * (log(e + t))^alpha; exp(L) uses Phi(t) = e^t - 1.
struct OrliczSpec {
  bool exp_l = false;
  double alpha = 0.0;

  static OrliczSpec llogl(double alpha) { return {false, alpha}; }
  static OrliczSpec expl() { return {true, 0.0}; }

  double phi(double t) const;
  double phi_derivative(double t) const;
  double phi_inverse(double y) const;
  std::string label() const;
};

// #{p in P : p_j < x_j for all j} (strict: the half-open box [0, x)).
std::size_t count_points(const PointSet& ps, std::span<const double> x);

// D_N(x) = #(P ∩ [0,x)) - N * |[0,x)|.
double eval_discrepancy(const PointSet& ps, std::span<const double> x);

// Exact L2 norm via the pairwise closed form
//   ||D_N||_2^2 = sum_{p,q} prod_j (1 - max(p_j,q_j))
//                 - 2N sum_p prod_j (1 - p_j^2)/2 + N^2/3^d,
// O(N^2 d) with deterministic compensated block reduction.
NormReport l2_norm_exact(const PointSet& ps);

// Exact L2 norm of D_N - D'_N for two point sets of equal size and
// dimension (the Lebesgue terms cancel; only counting terms remain).
NormReport l2_diff_norm_exact(const PointSet& ps, const PointSet& ps2);

// Seeded sample grid shared by all empirical norms. With stratified=true the
// samples are jittered over a dyadic partition (variance reduction).
struct SampleSet {
  int dim = 0;
  std::uint64_t seed = 0;
  bool stratified = false;
  std::vector<double> coords;  // sample-major

  std::size_t count() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const double> sample(std::size_t i) const {
    return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
  }
};

SampleSet make_samples(int dim, std::size_t samples, std::uint64_t seed,
                       bool stratified = false);

std::vector<double> discrepancy_values(const PointSet& ps, const SampleSet& samples);
std::vector<double> count_diff_values(const PointSet& ps, const PointSet& ps2,
                                      const SampleSet& samples);

// Empirical L^p norm of precomputed values, with a delta-method standard
// error on the p-th root of the moment estimator.
NormReport lp_norm_from_values(std::span<const double> values, double p,
                               std::uint64_t seed);

// Luxemburg norm on the empirical measure of `values`, by bisection on the
// scale to relative tolerance tol. Returns 0 for identically-zero values.
NormReport orlicz_norm_from_values(std::span<const double> values,
                                   const OrliczSpec& spec, double tol,
                                   std::uint64_t seed);

NormReport lp_norm_mc(const PointSet& ps, double p, std::size_t samples,
                      std::uint64_t seed, bool stratified = false);
NormReport orlicz_norm_mc(const PointSet& ps, const OrliczSpec& spec,
                          std::size_t samples, std::uint64_t seed,
                          double tol = 1e-6);

// Hölder interpolation on a common sample set:
// ||D||_{2p/(p+1)} <= sqrt(||D||_1 * ||D||_p). Exact on the empirical
// measure up to rounding slack.
bool check_interpolation(const PointSet& ps, double p, std::size_t samples,
                         std::uint64_t seed);

}  // namespace discrep
