#include "discrep/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "discrep/haar.hpp"
#include "discrep/reduce.hpp"
#include "discrep/rng.hpp"
#include "discrep/testfn.hpp"

namespace discrep {

namespace {

constexpr const char* kVersion = "discrepancy-toolkit 0.1.0";

std::uint64_t row_seed(const ExperimentConfig& cfg, int dim, std::uint64_t n) {
  std::uint64_t s = cfg.seed;
  (void)splitmix64_next(s);
  s ^= static_cast<std::uint64_t>(dim) * 0x9e3779b97f4a7c15ULL + n;
  (void)splitmix64_next(s);
  return s;
}

std::uint32_t net_exponent(std::uint32_t p, std::uint64_t n) {
  std::uint64_t v = 1;
  std::uint32_t s = 0;
  while (v < n) {
    v *= p;
    ++s;
  }
  if (v != n)
    throw ConfigError("N = " + std::to_string(n) + " is not a power of base " +
                      std::to_string(p));
  return s;
}

double log_n(std::uint64_t n) { return std::log(static_cast<double>(n)); }

std::string shape_label(const ShapeVector& shape) {
  std::string s;
  for (std::size_t j = 0; j < shape.levels.size(); ++j)
    s += (j ? "," : "") + std::to_string(shape.levels[j]);
  return s;
}

void assert_that(ExperimentReport& report, const std::string& name, bool pass,
                 const std::string& detail) {
  report.assertions.push_back({name, pass, detail});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

nlohmann::json echo_config(const ExperimentConfig& cfg) {
  return nlohmann::json{{"experiment", cfg.experiment},
                        {"generator", cfg.generator},
                        {"dims", cfg.dims},
                        {"n_list", cfg.n_list},
                        {"base", cfg.base},
                        {"delta", cfg.delta},
                        {"epsilon", cfg.epsilon},
                        {"sine_c", cfg.sine_c},
                        {"p_exponent", cfg.p_exponent},
                        {"samples", cfg.samples},
                        {"seed", cfg.seed},
                        {"trials", cfg.trials},
                        {"thresholds", cfg.thresholds},
                        {"format", cfg.format}};
}

ExperimentReport new_report(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.config_echo = echo_config(cfg);
  report.version = kVersion;
  return report;
}

// Empirical-measure checks shared by every sweep: L1 <= L2 and the Hölder
// interpolation inequality on the same fixed sample set.
void check_empirical_inequalities(ExperimentReport& report, const std::string& tag,
                                  std::span<const double> values, double p,
                                  std::uint64_t seed) {
  double n1 = lp_norm_from_values(values, 1.0, seed).value;
  double n2 = lp_norm_from_values(values, 2.0, seed).value;
  assert_that(report, tag + ":l1<=l2", n1 <= n2 * (1.0 + 1e-12),
              "L1=" + fmt(n1) + " L2=" + fmt(n2));
  double mid = 2.0 * p / (p + 1.0);
  double np = lp_norm_from_values(values, p, seed).value;
  double nm = lp_norm_from_values(values, mid, seed).value;
  assert_that(report, tag + ":interpolation", nm <= std::sqrt(n1 * np) * (1.0 + 1e-12),
              "mid=" + fmt(nm) + " bound=" + fmt(std::sqrt(n1 * np)));
}

}  // namespace

PointSet make_pointset(const ExperimentConfig& cfg, int dim, std::uint64_t n_points) {
  if (cfg.generator == "random")
    return generate_random(dim, n_points, cfg.seed);
  if (cfg.generator == "hammersley") {
    if (dim != 2) throw ConfigError("hammersley generator is two-dimensional");
    return generate_van_der_corput(n_points);
  }
  if (cfg.generator == "faure") {
    std::uint32_t s = net_exponent(cfg.base, n_points);
    return generate_faure_net(cfg.base, s, dim);
  }
  throw ConfigError("unknown generator '" + cfg.generator + "'");
}

bool ExperimentReport::all_passed() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["config"] = config_echo;
  j["rows"] = rows;
  nlohmann::json as = nlohmann::json::array();
  for (const auto& a : assertions)
    as.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
  j["assertions"] = as;
  j["all_passed"] = all_passed();
  if (wall_clock_ms >= 0.0) j["wall_clock_ms"] = wall_clock_ms;
  return j;
}

std::string ExperimentReport::to_csv() const {
  std::set<std::string> keys;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it) keys.insert(it.key());
  std::ostringstream os;
  bool first = true;
  for (const auto& k : keys) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& k : keys) {
      os << (first ? "" : ",");
      first = false;
      if (row.contains(k)) {
        const auto& v = row.at(k);
        if (v.is_string())
          os << v.get<std::string>();
        else
          os << v.dump();
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string ExperimentReport::serialize(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json().dump(2) + "\n";
  throw ConfigError("unknown format '" + format + "'");
}

void apply_config_line(ExperimentConfig& cfg, const std::string& key,
                       const std::string& value) {
  auto parse_u64_list = [](const std::string& v) {
    std::vector<std::uint64_t> out;
    std::istringstream is(v);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoull(tok));
    return out;
  };
  auto parse_int_list = [](const std::string& v) {
    std::vector<int> out;
    std::istringstream is(v);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
  };
  auto parse_double_list = [](const std::string& v) {
    std::vector<double> out;
    std::istringstream is(v);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    return out;
  };
  try {
    if (key == "experiment") cfg.experiment = value;
    else if (key == "generator") cfg.generator = value;
    else if (key == "dim" || key == "dims") cfg.dims = parse_int_list(value);
    else if (key == "n-list" || key == "n_list") cfg.n_list = parse_u64_list(value);
    else if (key == "base") cfg.base = static_cast<std::uint32_t>(std::stoul(value));
    else if (key == "delta") cfg.delta = std::stod(value);
    else if (key == "epsilon") cfg.epsilon = std::stod(value);
    else if (key == "sine-c" || key == "sine_c") cfg.sine_c = std::stod(value);
    else if (key == "p" || key == "p_exponent") cfg.p_exponent = std::stod(value);
    else if (key == "samples") cfg.samples = std::stoull(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "trials") cfg.trials = std::stoull(value);
    else if (key == "thresholds") cfg.thresholds = parse_double_list(value);
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else if (key == "timing") cfg.timing = value == "true" || value == "1";
    else if (key == "threads") cfg.threads = std::stoi(value);
    else throw ConfigError("unknown config key '" + key + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("bad value for config key '" + key + "': " + value);
  }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file " + path);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    apply_config_line(cfg, key, value);
  }
}

ExperimentReport run_norms_sweep(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      std::uint64_t seed = row_seed(cfg, d, n);
      auto set = make_samples(d, cfg.samples, seed);
      auto values = discrepancy_values(ps, set);
      auto l2e = l2_norm_exact(ps);
      auto l1 = lp_norm_from_values(values, 1.0, seed);
      auto l2mc = lp_norm_from_values(values, 2.0, seed);
      auto llogl = orlicz_norm_from_values(values, OrliczSpec::llogl((d - 2) / 2.0),
                                           1e-6, seed);
      nlohmann::json row{{"generator", ps.generator().name},
                         {"d", d},
                         {"N", n},
                         {"n", roth_level(n)},
                         {"l2_exact", l2e.value},
                         {"l1_value", l1.value},
                         {"l1_stderr", l1.std_error},
                         {"l2_mc_value", l2mc.value},
                         {"l2_mc_stderr", l2mc.std_error},
                         {"llogl_alpha", (d - 2) / 2.0},
                         {"llogl_value", llogl.value},
                         {"llogl_stderr", llogl.std_error}};
      double ln = log_n(n);
      if (ln > 0.0) {
        double pow_half = std::sqrt(ln);
        double pow_main = std::pow(ln, (d - 1) / 2.0);
        row["l1_over_logpow"] = l1.value / pow_main;       // (log N)^{(d-1)/2}
        row["l1_over_loghalf"] = l1.value / pow_half;      // (log N)^{1/2}
        row["l2_over_logpow"] = l2e.value / pow_main;
        row["llogl_over_logpow"] = llogl.value / pow_main;
      }
      report.rows.push_back(row);
      std::string tag = ps.generator().name + ":d=" + std::to_string(d) +
                        ":N=" + std::to_string(n);
      double gap = std::abs(l2e.value - l2mc.value);
      assert_that(report, tag + ":warnock-3sigma",
                  gap <= accept::kWarnockSigmas * l2mc.std_error,
                  "gap=" + fmt(gap) + " sigma=" + fmt(l2mc.std_error));
      check_empirical_inequalities(report, tag, values, cfg.p_exponent, seed);
    }
  }
  return report;
}

ExperimentReport run_roth_test(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      std::uint64_t seed = row_seed(cfg, d, n);
      TestFunction z = build_Z(ps);
      auto exact = test_inner_product(ps, z, NormMethod::Exact);
      auto mc = test_inner_product(ps, z, NormMethod::MonteCarlo, cfg.samples, seed);
      double scale = std::pow(static_cast<double>(z.level()), (d - 1) / 2.0);
      double ratio = exact.value / scale;
      report.rows.push_back({{"generator", ps.generator().name},
                             {"d", d},
                             {"N", n},
                             {"n", z.level()},
                             {"shapes", z.component_count()},
                             {"ip_exact", exact.value},
                             {"ip_mc", mc.value},
                             {"ip_mc_stderr", mc.std_error},
                             {"z_l2_sq", z.l2_norm_sq_exact()},
                             {"ratio", ratio}});
      std::string tag = "roth:d=" + std::to_string(d) + ":N=" + std::to_string(n);
      assert_that(report, tag + ":lower",
                  ratio >= (d == 2 ? accept::kRothFloorD2 : accept::kRothFloorD3),
                  "ratio=" + fmt(ratio));
      assert_that(report, tag + ":exact-vs-mc",
                  std::abs(exact.value - mc.value) <= 3.0 * mc.std_error,
                  "exact=" + fmt(exact.value) + " mc=" + fmt(mc.value) +
                      " sigma=" + fmt(mc.std_error));
    }
  }
  return report;
}

ExperimentReport run_lemma_bounds(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      int level = roth_level(n);
      double min_ip = std::numeric_limits<double>::infinity();
      std::string min_shape;
      for (const auto& shape : shapes_of_order(d, level)) {
        auto greedy = build_r_function_greedy(ps, shape);
        if (greedy.inner_product < min_ip) {
          min_ip = greedy.inner_product;
          min_shape = shape_label(shape);
        }
      }
      double min_bound = std::numeric_limits<double>::infinity();
      double max_bound = 0.0;
      for (int order = level; order <= level + 6 && order <= kMaxShapeOrder; ++order) {
        double order_max = 0.0;
        for (const auto& shape : shapes_of_order(d, order)) {
          auto greedy = build_r_function_greedy(ps, shape);
          double bound = std::abs(greedy.inner_product) *
                         std::ldexp(1.0, order) / static_cast<double>(n);
          order_max = std::max(order_max, bound);
        }
        report.rows.push_back({{"generator", ps.generator().name},
                               {"d", d},
                               {"N", n},
                               {"order", order},
                               {"max_scaled_ip", order_max},
                               {"min_ip_at_n", min_ip},
                               {"min_shape", min_shape}});
        min_bound = std::min(min_bound, order_max);
        max_bound = std::max(max_bound, order_max);
      }
      std::string tag = "lemma:d=" + std::to_string(d) + ":N=" + std::to_string(n);
      assert_that(report, tag + ":lower", min_ip >= accept::kLemmaLowerFloor,
                  "min_ip=" + fmt(min_ip) + " shape=(" + min_shape + ")");
      assert_that(report, tag + ":upper-ratio",
                  max_bound / min_bound <= accept::kLemmaUpperRatioCap,
                  "max=" + fmt(max_bound) + " min=" + fmt(min_bound));
    }
  }
  return report;
}

ExperimentReport run_dichotomy_example(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    double delta = cfg.delta > 0.0 ? cfg.delta : 1.0 / (2.0 * d);
    std::vector<double> l2_ratios;
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      PointSet collapsed = corner_collapse(ps, delta);
      std::uint64_t seed = row_seed(cfg, d, n);
      auto set = make_samples(d, cfg.samples, seed);
      auto values = discrepancy_values(collapsed, set);
      auto l2p = l2_norm_exact(collapsed);
      auto l1p = lp_norm_from_values(values, 1.0, seed);
      auto l2diff = l2_diff_norm_exact(ps, collapsed);
      auto diff_values = count_diff_values(ps, collapsed, set);
      auto l1diff = lp_norm_from_values(diff_values, 1.0, seed);
      double ln = log_n(n);
      double r2 = l2p.value / std::pow(static_cast<double>(n), 0.25);
      double r1 = l1p.value / std::pow(ln, (d - 1) / 2.0);
      report.rows.push_back({{"generator", ps.generator().name},
                             {"d", d},
                             {"N", n},
                             {"delta", delta},
                             {"collapsed_points", corner_count(ps, delta)},
                             {"l2_collapsed", l2p.value},
                             {"l1_collapsed", l1p.value},
                             {"l1_collapsed_stderr", l1p.std_error},
                             {"l2_diff", l2diff.value},
                             {"l1_diff", l1diff.value},
                             {"l1_diff_stderr", l1diff.std_error},
                             {"l2_over_n14", r2},
                             {"l1_over_logpow", r1}});
      l2_ratios.push_back(r2);
      std::string tag = "dichotomy:d=" + std::to_string(d) + ":N=" + std::to_string(n);
      assert_that(report, tag + ":l1-cap", r1 <= accept::kDichotomyL1Cap,
                  "l1_ratio=" + fmt(r1));
      check_empirical_inequalities(report, tag, values, cfg.p_exponent, seed);
    }
    if (!l2_ratios.empty()) {
      double lo = *std::min_element(l2_ratios.begin(), l2_ratios.end());
      double hi = *std::max_element(l2_ratios.begin(), l2_ratios.end());
      assert_that(report, "dichotomy:d=" + std::to_string(d) + ":l2-bracket",
                  hi / lo <= accept::kDichotomyBracketCap,
                  "max=" + fmt(hi) + " min=" + fmt(lo));
    }
  }
  return report;
}

ExperimentReport run_product_bound(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      std::uint64_t seed = row_seed(cfg, d, n);
      auto set = make_samples(d, cfg.samples, seed);
      auto values = discrepancy_values(ps, set);
      auto l1 = lp_norm_from_values(values, 1.0, seed);
      auto llogl = orlicz_norm_from_values(values, OrliczSpec::llogl(1.0), 1e-6, seed);
      int level = roth_level(n);
      double nn = static_cast<double>(level) * level;
      double product = l1.value * llogl.value;
      double sigma = std::sqrt(l1.std_error * l1.std_error * llogl.value * llogl.value +
                               llogl.std_error * llogl.std_error * l1.value * l1.value);
      double ratio = product / nn;
      nlohmann::json row{{"generator", ps.generator().name},
                         {"d", d},
                         {"N", n},
                         {"n", level},
                         {"l1_value", l1.value},
                         {"l1_stderr", l1.std_error},
                         {"llogl_value", llogl.value},
                         {"llogl_stderr", llogl.std_error},
                         {"product", product},
                         {"product_stderr", sigma},
                         {"ratio", ratio}};
      if (d == 3) {
        TestFunction y = build_Y_sine(ps, cfg.sine_c);
        auto ip = test_inner_product(ps, y, NormMethod::MonteCarlo, cfg.samples, seed);
        row["ysine_ip"] = ip.value;
        row["ysine_ip_stderr"] = ip.std_error;
        row["ysine_ip_over_n"] = ip.value / level;
        // exp(L) norm of Y restricted to {|Y| > alpha}, alpha = 1: the
        // truncated norm should scale like 1/alpha.
        auto y_values = test_function_values(y, set);
        for (double& v : y_values)
          if (std::abs(v) <= 1.0) v = 0.0;
        bool any = std::any_of(y_values.begin(), y_values.end(),
                               [](double v) { return v != 0.0; });
        if (any) {
          auto expl = orlicz_norm_from_values(y_values, OrliczSpec::expl(), 1e-6, seed);
          row["ysine_trunc_expl"] = expl.value;
        }
      }
      report.rows.push_back(row);
      std::string tag = "product:d=" + std::to_string(d) + ":N=" + std::to_string(n);
      assert_that(report, tag + ":lower",
                  ratio + 3.0 * sigma / nn >= accept::kProductFloor,
                  "ratio=" + fmt(ratio) + " sigma/n2=" + fmt(sigma / nn));
      check_empirical_inequalities(report, tag, values, cfg.p_exponent, seed);
    }
  }
  return report;
}

ExperimentReport run_tails(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  std::vector<double> thresholds = cfg.thresholds;
  if (thresholds.empty())
    for (int k = 1; k <= 15; ++k) thresholds.push_back(0.2 * k);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      std::uint64_t seed = row_seed(cfg, d, n);
      TestFunction z = build_Z(ps);
      TailReport tail = tail_distribution(z, thresholds, cfg.samples, seed);
      for (std::size_t k = 0; k < tail.thresholds.size(); ++k)
        report.rows.push_back({{"generator", ps.generator().name},
                               {"d", d},
                               {"N", n},
                               {"t", tail.thresholds[k]},
                               {"survival", tail.survival[k]},
                               {"exceedances", tail.exceedances[k]},
                               {"used_in_fit", static_cast<bool>(tail.used_in_fit[k])},
                               {"fit_a", tail.fit_a},
                               {"fit_b", tail.fit_b},
                               {"envelope_a", tail.envelope_a},
                               {"r_squared", tail.r_squared},
                               {"range_limit", tail.range_limit}});
      std::string tag = "tails:d=" + std::to_string(d) + ":N=" + std::to_string(n);
      assert_that(report, tag + ":b-positive", tail.fit_b > 0.0, "b=" + fmt(tail.fit_b));
      assert_that(report, tag + ":r2", tail.r_squared >= accept::kTailR2Min,
                  "r2=" + fmt(tail.r_squared));
      bool envelopes = true;
      for (std::size_t k = 0; k < tail.thresholds.size(); ++k) {
        if (!tail.used_in_fit[k]) continue;
        double bound = std::exp(tail.envelope_a -
                                tail.fit_b * tail.thresholds[k] * tail.thresholds[k]);
        if (tail.survival[k] > bound * (1.0 + 1e-12)) envelopes = false;
      }
      assert_that(report, tag + ":envelope", envelopes,
                  "a=" + fmt(tail.envelope_a) + " b=" + fmt(tail.fit_b));
    }
  }
  return report;
}

ExperimentReport run_net_verify(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      std::uint32_t p = cfg.generator == "hammersley" ? 2 : cfg.base;
      std::uint32_t s = net_exponent(p, n);
      PointSet ps = make_pointset(cfg, d, n);
      auto res = verify_net(ps, p, s);
      double deviation = check_counting_bound(ps, cfg.trials, row_seed(cfg, d, n));
      double bound = std::pow(static_cast<double>(s), d - 1);
      std::string violation;
      if (!res.ok) {
        violation = "levels=(";
        for (std::size_t j = 0; j < res.levels.size(); ++j)
          violation += (j ? "," : "") + std::to_string(res.levels[j]);
        violation += ") pos=(";
        for (std::size_t j = 0; j < res.position.size(); ++j)
          violation += (j ? "," : "") + std::to_string(res.position[j]);
        violation += ") count=" + std::to_string(res.count);
      }
      report.rows.push_back({{"generator", cfg.generator},
                             {"d", d},
                             {"N", n},
                             {"p", p},
                             {"s", s},
                             {"is_net", res.ok},
                             {"violation", violation},
                             {"max_deviation", deviation},
                             {"bound", bound}});
      std::string tag = "net:d=" + std::to_string(d) + ":N=" + std::to_string(n);
      assert_that(report, tag + ":axiom", res.ok, violation);
      assert_that(report, tag + ":counting", deviation <= bound,
                  "dev=" + fmt(deviation) + " bound=" + fmt(bound));
    }
  }
  return report;
}

ExperimentReport run_interpolation(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      std::uint64_t seed = row_seed(cfg, d, n);
      bool ok = check_interpolation(ps, cfg.p_exponent, cfg.samples, seed);
      report.rows.push_back({{"generator", ps.generator().name},
                             {"d", d},
                             {"N", n},
                             {"p", cfg.p_exponent},
                             {"holds", ok}});
      assert_that(report,
                  "interpolate:d=" + std::to_string(d) + ":N=" + std::to_string(n), ok,
                  "p=" + fmt(cfg.p_exponent));
    }
  }
  return report;
}

ExperimentReport run_haar_scan(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  for (int d : cfg.dims) {
    for (std::uint64_t n : cfg.n_list) {
      PointSet ps = make_pointset(cfg, d, n);
      int level = roth_level(n);
      for (const auto& shape : shapes_of_order(d, level)) {
        auto greedy = build_r_function_greedy(ps, shape);
        report.rows.push_back({{"generator", ps.generator().name},
                               {"d", d},
                               {"N", n},
                               {"shape", shape_label(shape)},
                               {"order", shape.order()},
                               {"greedy_ip", greedy.inner_product},
                               {"max_abs_coef", greedy.max_abs_coefficient}});
      }
    }
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.threads != 0) set_thread_count(cfg.threads);
  if (cfg.n_list.empty()) throw ConfigError("n-list must not be empty");
  if (cfg.dims.empty()) throw ConfigError("dim list must not be empty");
  if (cfg.experiment == "norms") return run_norms_sweep(cfg);
  if (cfg.experiment == "roth") return run_roth_test(cfg);
  if (cfg.experiment == "lemma-bounds") return run_lemma_bounds(cfg);
  if (cfg.experiment == "dichotomy") return run_dichotomy_example(cfg);
  if (cfg.experiment == "product") return run_product_bound(cfg);
  if (cfg.experiment == "tails") return run_tails(cfg);
  if (cfg.experiment == "net-verify") return run_net_verify(cfg);
  if (cfg.experiment == "interpolate") return run_interpolation(cfg);
  if (cfg.experiment == "haar-scan") return run_haar_scan(cfg);
  throw ConfigError("unknown experiment '" + cfg.experiment + "'");
}

}  // namespace discrep
