#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "discrep/discrepancy.hpp"
#include "discrep/pointset.hpp"

namespace discrep {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string experiment;               // norms|roth|lemma-bounds|dichotomy|product|tails|net-verify|interpolate|haar-scan
  std::string generator = "hammersley"; // random|hammersley|faure
  std::vector<int> dims = {2};
  std::vector<std::uint64_t> n_list;    // point counts N
  std::uint32_t base = 2;               // prime p for faure nets
  double delta = 0.0;                   // corner-collapse exponent, 0 = 1/(2d)
  double epsilon = 0.25;                // dichotomy q = n^epsilon
  double sine_c = 0.1;
  double p_exponent = 2.0;              // interpolation / norms p
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;           // counting-bound rectangles
  std::vector<double> thresholds;       // tails; empty = default grid
  std::string format = "json";          // json|csv
  std::string out;                      // output path, empty = stdout
  bool timing = false;                  // include wall clock (breaks bit-identity)
  int threads = 0;                      // 0 = auto
};

// Flat "key = value" file, '#' comments. Unknown keys are errors.
void apply_config_line(ExperimentConfig& cfg, const std::string& key,
                       const std::string& value);
void load_config_file(ExperimentConfig& cfg, const std::string& path);

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentReport {
  nlohmann::json config_echo;
  std::vector<nlohmann::json> rows;   // flat objects
  std::vector<Assertion> assertions;
  std::string version;
  double wall_clock_ms = -1.0;        // < 0 = omitted from serialization

  bool all_passed() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string serialize(const std::string& format) const;
};

// Frozen acceptance constants. Empirical floors/caps were pinned from a
// first calibration run and act as regression bounds thereafter.
namespace accept {
inline constexpr double kWarnockSigmas = 3.0;
inline constexpr double kLemmaLowerFloor = 0.01;
inline constexpr double kLemmaUpperRatioCap = 10.0;
inline constexpr double kRothFloorD2 = 0.04;   // observed plateau ~0.041
inline constexpr double kRothFloorD3 = 0.003;  // observed range 0.004..0.007
inline constexpr double kDichotomyBracketCap = 5.0;
inline constexpr double kDichotomyL1Cap = 2.0;  // observed max ~0.84
inline constexpr double kProductFloor = 0.005;  // observed min ~0.009
inline constexpr double kTailR2Min = 0.9;
}  // namespace accept

PointSet make_pointset(const ExperimentConfig& cfg, int dim, std::uint64_t n_points);

ExperimentReport run_norms_sweep(const ExperimentConfig& cfg);
ExperimentReport run_roth_test(const ExperimentConfig& cfg);
ExperimentReport run_lemma_bounds(const ExperimentConfig& cfg);
ExperimentReport run_dichotomy_example(const ExperimentConfig& cfg);
ExperimentReport run_product_bound(const ExperimentConfig& cfg);
ExperimentReport run_tails(const ExperimentConfig& cfg);
ExperimentReport run_net_verify(const ExperimentConfig& cfg);
ExperimentReport run_interpolation(const ExperimentConfig& cfg);
ExperimentReport run_haar_scan(const ExperimentConfig& cfg);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace discrep
