#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "discrep/discrepancy.hpp"
#include "discrep/haar.hpp"
#include "discrep/pointset.hpp"

namespace discrep {

enum class TestFnKind { Z, YDichotomy, YSine };

// Composite of greedy r-functions at total level n:
//   Z            = n^{-(d-1)/2} * sum over all shapes |r| = n of f_r
//   Y_dichotomy  = Z / q, q = n^epsilon
//   Y_sine       = n^{-1/2} * sum_{j=1..floor(n/2)} sin(c n^{-1/2} S_j),
//                  S_j = sum over shapes with r_1 = j, |r| = n of f_r
class TestFunction {
 public:
  struct Group {
    int key = 0;  // r_1 for YSine, 0 otherwise
    std::vector<RFunction> fns;
    std::vector<double> greedy_inner_products;  // <D_N, f_r> per component
  };

  TestFnKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int level() const { return level_; }      // n
  double scale() const { return scale_; }   // outer normalization
  double sine_c() const { return sine_c_; }
  double dichotomy_q() const { return q_; }
  const std::vector<Group>& groups() const { return groups_; }
  std::size_t component_count() const;

  double evaluate(std::span<const double> x) const;

  // ||T||_2^2 by Parseval over the pairwise-orthogonal +-1 components;
  // defined for Z and Y_dichotomy only.
  double l2_norm_sq_exact() const;

  // <D_N, T> from the stored greedy coefficient sums (Z, Y_dichotomy only).
  double inner_product_exact_value() const;

  friend TestFunction build_Z(const PointSet&, std::optional<int>);
  friend TestFunction build_Y_dichotomy(const PointSet&, double, std::optional<int>);
  friend TestFunction build_Y_sine(const PointSet&, double, bool, std::optional<int>);

 private:
  TestFnKind kind_ = TestFnKind::Z;
  int dim_ = 0;
  int level_ = 0;
  double scale_ = 1.0;
  double sine_c_ = 0.0;
  double q_ = 1.0;
  std::vector<Group> groups_;
};

TestFunction build_Z(const PointSet& ps, std::optional<int> n_override = {});
TestFunction build_Y_dichotomy(const PointSet& ps, double epsilon,
                               std::optional<int> n_override = {});
// The sine construction is three-dimensional; allow_any_dim permits the
// formal analogue in other dimensions for exploration.
TestFunction build_Y_sine(const PointSet& ps, double c, bool allow_any_dim = false,
                          std::optional<int> n_override = {});

std::vector<double> test_function_values(const TestFunction& fn, const SampleSet& samples);

struct InnerProductReport {
  double value = 0.0;
  NormMethod method = NormMethod::Exact;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// mode Exact is valid for Z and Y_dichotomy (linear in the Haar system);
// MonteCarlo estimates int D_N * T with a standard error.
InnerProductReport test_inner_product(const PointSet& ps, const TestFunction& fn,
                                      NormMethod mode, std::size_t samples = 0,
                                      std::uint64_t seed = 0);

struct TailReport {
  std::vector<double> thresholds;
  std::vector<double> survival;      // |{ |T| > t }| empirical
  std::vector<std::size_t> exceedances;
  std::vector<bool> used_in_fit;     // >= 10 exceedances and within range
  double fit_a = 0.0;                // log-survival ~ a - b t^2
  double fit_b = 0.0;
  double r_squared = 0.0;
  double envelope_a = 0.0;           // smallest a with exp(a - b t^2) >= survival
  double range_limit = 0.0;          // n^{(1-2/d')/(4d-2)} threshold cutoff
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

TailReport tail_distribution(const TestFunction& fn, std::vector<double> thresholds,
                             std::size_t samples, std::uint64_t seed);

}  // namespace discrep
