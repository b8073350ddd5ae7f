// Command-line front end: point-set generation plus the experiment runners.
// Exit codes: 0 = all assertions pass, 1 = assertion failure, 2 = config error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "discrep/experiments.hpp"
#include "discrep/pointset.hpp"

namespace {

using discrep::ExperimentConfig;

struct FlagBinding {
  std::string generator, format, out, config_path;
  std::string dims, n_list, thresholds;
  std::uint64_t seed = 0;
  std::size_t samples = 0, trials = 0;
  std::uint32_t base = 0;
  double delta = -1.0, epsilon = -1.0, sine_c = -1.0, p_exponent = -1.0;
  int threads = -1;
  bool timing = false;
};

void add_common_flags(CLI::App* cmd, FlagBinding& flags) {
  cmd->add_option("--config", flags.config_path, "flat key=value config file");
  cmd->add_option("--dim", flags.dims, "dimension list, comma separated");
  cmd->add_option("--n-list", flags.n_list, "point counts N, comma separated");
  cmd->add_option("--generator", flags.generator, "random|hammersley|faure");
  cmd->add_option("--base", flags.base, "prime base p for faure nets");
  cmd->add_option("--delta", flags.delta, "corner-collapse exponent (0 = 1/(2d))");
  cmd->add_option("--epsilon", flags.epsilon, "dichotomy scale q = n^epsilon");
  cmd->add_option("--sine-c", flags.sine_c, "inner constant of the sine composite");
  cmd->add_option("--p", flags.p_exponent, "exponent p for interpolation checks");
  cmd->add_option("--samples", flags.samples, "Monte-Carlo sample count");
  cmd->add_option("--seed", flags.seed, "RNG seed (mandatory for reproducibility)");
  cmd->add_option("--trials", flags.trials, "counting-bound rectangle count");
  cmd->add_option("--thresholds", flags.thresholds, "tail thresholds, comma separated");
  cmd->add_option("--format", flags.format, "json|csv");
  cmd->add_option("--out", flags.out, "output path (default stdout)");
  cmd->add_option("--threads", flags.threads, "worker threads (0 = auto)");
  cmd->add_flag("--timing", flags.timing, "include wall clock in the report");
}

// Config file first, then explicit CLI flags override.
ExperimentConfig build_config(const CLI::App* cmd, const FlagBinding& flags,
                              const std::string& experiment) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  if (!flags.config_path.empty()) discrep::load_config_file(cfg, flags.config_path);
  cfg.experiment = experiment;
  auto given = [&](const std::string& name) { return cmd->count(name) > 0; };
  if (given("--dim")) discrep::apply_config_line(cfg, "dim", flags.dims);
  if (given("--n-list")) discrep::apply_config_line(cfg, "n-list", flags.n_list);
  if (given("--generator")) cfg.generator = flags.generator;
  if (given("--base")) cfg.base = flags.base;
  if (given("--delta")) cfg.delta = flags.delta;
  if (given("--epsilon")) cfg.epsilon = flags.epsilon;
  if (given("--sine-c")) cfg.sine_c = flags.sine_c;
  if (given("--p")) cfg.p_exponent = flags.p_exponent;
  if (given("--samples")) cfg.samples = flags.samples;
  if (given("--seed")) cfg.seed = flags.seed;
  if (given("--trials")) cfg.trials = flags.trials;
  if (given("--thresholds")) discrep::apply_config_line(cfg, "thresholds", flags.thresholds);
  if (given("--format")) cfg.format = flags.format;
  if (given("--out")) cfg.out = flags.out;
  if (given("--threads")) cfg.threads = flags.threads;
  if (given("--timing")) cfg.timing = flags.timing;
  return cfg;
}

int run_and_emit(const ExperimentConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  discrep::ExperimentReport report = discrep::run_experiment(cfg);
  if (cfg.timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    report.wall_clock_ms =
        std::chrono::duration<double, std::milli>(elapsed).count();
  }
  std::string text = report.serialize(cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw discrep::ConfigError("cannot write output file " + cfg.out);
    os << text;
  }
  if (!report.all_passed()) {
    for (const auto& a : report.assertions)
      if (!a.pass) std::cerr << "FAILED " << a.name << ": " << a.detail << "\n";
    return 1;
  }
  return 0;
}

int run_generate(const ExperimentConfig& cfg, bool binary) {
  if (cfg.n_list.size() != 1 || cfg.dims.size() != 1)
    throw discrep::ConfigError("generate takes exactly one --dim and one --n-list value");
  discrep::PointSet ps = discrep::make_pointset(cfg, cfg.dims[0], cfg.n_list[0]);
  if (cfg.out.empty()) {
    if (binary) throw discrep::ConfigError("binary output needs --out");
    discrep::write_pointset_text(std::cout, ps);
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw discrep::ConfigError("cannot write output file " + cfg.out);
    if (binary)
      discrep::write_pointset_binary(os, ps);
    else
      discrep::write_pointset_text(os, ps);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrepancy-toolkit: point sets, discrepancy norms, and the "
               "orthogonal-function experiments"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    FlagBinding flags;
    std::string experiment;
  };
  std::vector<std::pair<std::string, std::string>> experiments = {
      {"norms", "L1/L2/Orlicz norm sweep with growth ratios"},
      {"haar-scan", "per-shape Haar coefficient scan at total level n"},
      {"roth", "inner products against the composite Z"},
      {"lemma-bounds", "greedy r-function lower/upper bound sweep"},
      {"dichotomy", "corner-collapse example (L1 small, L2 large)"},
      {"product", "L1 * L(log L) product bound in dimension 3"},
      {"tails", "sub-Gaussian tail fit for Z"},
      {"net-verify", "net axiom and counting-bound checks"},
      {"interpolate", "Hölder interpolation check on empirical norms"}};

  std::vector<std::unique_ptr<Sub>> subs;
  for (const auto& [name, desc] : experiments) {
    auto sub = std::make_unique<Sub>();
    sub->cmd = app.add_subcommand(name, desc);
    sub->experiment = name;
    add_common_flags(sub->cmd, sub->flags);
    subs.push_back(std::move(sub));
  }

  auto gen = std::make_unique<Sub>();
  gen->cmd = app.add_subcommand("generate", "generate a point set and write it");
  gen->experiment = "generate";
  add_common_flags(gen->cmd, gen->flags);
  bool binary = false;
  gen->cmd->add_flag("--binary", binary, "write the binary DPS1 format");
  subs.push_back(std::move(gen));

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& sub : subs) {
      if (!sub->cmd->parsed()) continue;
      ExperimentConfig cfg = build_config(sub->cmd, sub->flags, sub->experiment);
      if (sub->experiment == "generate") return run_generate(cfg, binary);
      return run_and_emit(cfg);
    }
  } catch (const discrep::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
