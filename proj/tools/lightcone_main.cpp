// Copyright 2026 The lightcone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment runner. `run` executes a config-driven suite of certificate
// checks and writes CSV/JSON outputs; `describe` summarizes a model file.
// Exit codes: 0 all checks pass, 2 some check fails, 1 config or runtime
// error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lightcone/bounds.hpp"
#include "lightcone/evolve.hpp"
#include "lightcone/liouvillian.hpp"
#include "lightcone/model.hpp"
#include "lightcone/sampling.hpp"
#include "lightcone/verify.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
namespace lc = lightcone;

std::string format_sig12(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

[[noreturn]] void config_error(const std::string& message) {
  throw std::invalid_argument("config error: " + message);
}

double number_field(const json& j, const std::string& field, double fallback,
                    bool* present = nullptr) {
  if (!j.contains(field)) {
    if (present) *present = false;
    return fallback;
  }
  if (present) *present = true;
  if (!j.at(field).is_number())
    config_error("field '" + field + "' must be a number");
  return j.at(field).get<double>();
}

std::vector<double> double_list_field(const json& j, const std::string& field,
                                      std::vector<double> fallback) {
  if (!j.contains(field)) return fallback;
  if (!j.at(field).is_array())
    config_error("field '" + field + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j.at(field)) {
    if (!v.is_number())
      config_error("field '" + field + "' must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<int> int_list_field(const json& j, const std::string& field) {
  if (!j.at(field).is_array())
    config_error("field '" + field + "' must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j.at(field)) {
    if (!v.is_number_integer())
      config_error("field '" + field + "' must contain only integers");
    out.push_back(v.get<int>());
  }
  return out;
}

lc::Complex complex_field(const json& j, const std::string& field,
                          lc::Complex fallback) {
  if (!j.contains(field)) return fallback;
  const auto& node = j.at(field);
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number())
    config_error("field '" + field + "' must be a [re, im] pair");
  return lc::Complex(node[0].get<double>(), node[1].get<double>());
}

lc::LatticeModel model_from_config(const json& node) {
  if (!node.is_object()) config_error("field 'model' must be an object");
  if (node.contains("catalog")) {
    const std::string name = node.at("catalog").get<std::string>();
    if (!node.contains("n_sites") || !node.at("n_sites").is_number_integer())
      config_error("catalog models require integer field 'n_sites'");
    const int d = node.at("n_sites").get<int>();
    lc::Boundary boundary = lc::Boundary::open;
    if (node.contains("boundary")) {
      const std::string b = node.at("boundary").get<std::string>();
      if (b == "periodic")
        boundary = lc::Boundary::periodic;
      else if (b != "open")
        config_error("field 'boundary' must be \"open\" or \"periodic\"");
    }
    const double gamma = number_field(node, "gamma", 1.0);
    if (name == "free_chain") return lc::catalog_free_chain(d, boundary);
    if (name == "dephasing_chain")
      return lc::catalog_dephasing_chain(d, gamma, boundary);
    if (name == "hopping_chain")
      return lc::catalog_hopping_chain(d, gamma, boundary);
    if (name == "disordered_chain") {
      const double w = number_field(node, "w", 1.0);
      const auto seed = node.contains("seed")
                            ? node.at("seed").get<std::uint64_t>()
                            : std::uint64_t{1};
      return lc::catalog_disordered_chain(d, w, seed, boundary);
    }
    config_error("unknown catalog model '" + name + "'");
  }
  if (node.contains("path"))
    return lc::model_from_json_file(node.at("path").get<std::string>());
  return lc::model_from_json_text(node.dump());
}

struct ExperimentConfig {
  lc::LatticeModel model;
  std::vector<std::string> suite;
  std::vector<double> times{0.5, 1.0, 2.0};
  std::vector<double> nu_grid;
  double eps = 0.2;
  double mu = 0.3;
  double nu = 0.4;
  std::vector<int> x_sites, y_sites, u_sites, v_sites;
  bool has_x = false, has_y = false, has_u = false, has_v = false;
  lc::Complex zeta{0.0, 0.3};
  lc::Complex zeta_tilde{0.0, -0.3};
  double t = 0.5;
  double radius = 0.05;
  int circle_samples = 8;
  std::optional<std::vector<int>> dims;
  int family_size = 3;
  std::uint64_t seed = 1;
  std::string output_dir = ".";
};

const std::set<std::string>& known_checks() {
  static const std::set<std::string> names = {
      "check_leakage_cone",     "check_ball_bound",
      "check_deformed_growth",  "check_deformed_positivity",
      "check_subcp",            "check_cs_trace",
      "check_contraction_and_growth", "check_analyticity",
      "check_dual_cone",
  };
  return names;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) config_error("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    config_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) config_error("top level must be an object");
  if (!j.contains("model")) config_error("field 'model' is required");

  ExperimentConfig cfg;
  cfg.model = model_from_config(j.at("model"));
  lc::validate_model(cfg.model);

  if (j.contains("suite")) {
    if (!j.at("suite").is_array())
      config_error("field 'suite' must be an array of check names");
    for (const auto& item : j.at("suite")) {
      if (!item.is_string())
        config_error("field 'suite' must contain only strings");
      const std::string name = item.get<std::string>();
      if (!known_checks().count(name))
        config_error("unknown check '" + name + "' in suite");
      cfg.suite.push_back(name);
    }
  }

  cfg.times = double_list_field(j, "times", cfg.times);
  if (cfg.times.empty()) config_error("field 'times' must be nonempty");
  for (std::size_t i = 0; i + 1 < cfg.times.size(); ++i)
    if (!(cfg.times[i] < cfg.times[i + 1]))
      config_error("field 'times' must be strictly ascending");

  cfg.nu_grid = double_list_field(
      j, "nu_grid", lc::default_nu_grid(cfg.model.decay_rate));
  cfg.eps = number_field(j, "eps", cfg.eps);
  cfg.mu = number_field(j, "mu", cfg.mu);
  cfg.nu = number_field(j, "nu", cfg.nu);
  if (j.contains("X")) { cfg.x_sites = int_list_field(j, "X"); cfg.has_x = true; }
  if (j.contains("Y")) { cfg.y_sites = int_list_field(j, "Y"); cfg.has_y = true; }
  if (j.contains("U")) { cfg.u_sites = int_list_field(j, "U"); cfg.has_u = true; }
  if (j.contains("V")) { cfg.v_sites = int_list_field(j, "V"); cfg.has_v = true; }
  cfg.zeta = complex_field(j, "zeta", cfg.zeta);
  cfg.zeta_tilde = complex_field(j, "zeta_tilde", -cfg.zeta);
  cfg.t = number_field(j, "t", cfg.t);
  cfg.radius = number_field(j, "radius", cfg.radius);
  if (j.contains("samples")) {
    if (!j.at("samples").is_number_integer())
      config_error("field 'samples' must be an integer");
    cfg.circle_samples = j.at("samples").get<int>();
  }
  if (j.contains("dims")) cfg.dims = int_list_field(j, "dims");
  if (j.contains("family_size")) {
    if (!j.at("family_size").is_number_integer())
      config_error("field 'family_size' must be an integer");
    cfg.family_size = j.at("family_size").get<int>();
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() &&
        !j.at("seed").is_number_integer())
      config_error("field 'seed' must be an integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string())
      config_error("field 'output_dir' must be a string");
    cfg.output_dir = j.at("output_dir").get<std::string>();
  }
  return cfg;
}

const std::vector<int>& require_sites(const ExperimentConfig& cfg,
                                      const std::string& check, char which) {
  switch (which) {
    case 'X':
      if (!cfg.has_x)
        config_error("field 'X' is required by " + check);
      return cfg.x_sites;
    case 'Y':
      if (!cfg.has_y)
        config_error("field 'Y' is required by " + check);
      return cfg.y_sites;
    case 'U':
      if (!cfg.has_u)
        config_error("field 'U' is required by " + check);
      return cfg.u_sites;
    default:
      if (!cfg.has_v)
        config_error("field 'V' is required by " + check);
      return cfg.v_sites;
  }
}

lc::CheckReport run_one_check(const std::string& name,
                              const ExperimentConfig& cfg,
                              std::uint64_t seed) {
  if (name == "check_leakage_cone")
    return lc::check_leakage_cone(cfg.model, require_sites(cfg, name, 'X'),
                                  require_sites(cfg, name, 'Y'), cfg.mu,
                                  cfg.eps, cfg.times, seed);
  if (name == "check_dual_cone")
    return lc::check_dual_cone(cfg.model, require_sites(cfg, name, 'X'),
                               require_sites(cfg, name, 'Y'), cfg.mu, cfg.eps,
                               cfg.times, seed);
  if (name == "check_ball_bound")
    return lc::check_ball_bound(cfg.model, require_sites(cfg, name, 'U'),
                                require_sites(cfg, name, 'V'), cfg.nu,
                                cfg.times, seed);
  if (name == "check_deformed_growth")
    return lc::check_deformed_growth(cfg.model, cfg.nu, cfg.times, seed);
  if (name == "check_deformed_positivity")
    return lc::check_deformed_positivity(cfg.model, cfg.nu, cfg.times, seed);
  if (name == "check_subcp")
    return lc::check_subcp(seed, cfg.dims.value_or(std::vector<int>{2, 3, 4, 5, 6}),
                           cfg.family_size);
  if (name == "check_cs_trace")
    return lc::check_cs_trace(seed,
                              cfg.dims.value_or(std::vector<int>{2, 3, 4, 5}));
  if (name == "check_contraction_and_growth")
    return lc::check_contraction_and_growth(cfg.model, cfg.zeta,
                                            cfg.zeta_tilde, cfg.times);
  if (name == "check_analyticity")
    return lc::check_analyticity(cfg.model, cfg.t, cfg.zeta, cfg.radius,
                                 cfg.circle_samples);
  config_error("unknown check '" + name + "' in suite");
}

bool is_cone_check(const std::string& name) {
  return name == "check_leakage_cone" || name == "check_ball_bound" ||
         name == "check_dual_cone";
}

void write_file(const std::filesystem::path& path,
                const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

int run_command(const std::string& config_path, const std::string& out_flag,
                std::optional<std::uint64_t> seed_flag, int jobs) {
  ExperimentConfig cfg = parse_config(config_path);
  if (!out_flag.empty()) cfg.output_dir = out_flag;
  if (seed_flag) cfg.seed = *seed_flag;
  jobs = std::clamp(jobs, 1, 16);

  const std::filesystem::path out_dir(cfg.output_dir);
  std::filesystem::create_directories(out_dir);

  write_file(out_dir / "bounds.csv",
             lc::velocity_table_csv(cfg.model, cfg.nu_grid, cfg.eps));

  std::vector<lc::CheckReport> reports(cfg.suite.size());
  for (std::size_t base = 0; base < cfg.suite.size();
       base += std::size_t(jobs)) {
    const std::size_t end =
        std::min(cfg.suite.size(), base + std::size_t(jobs));
    std::vector<std::future<lc::CheckReport>> wave;
    for (std::size_t i = base; i < end; ++i)
      wave.push_back(std::async(std::launch::async, run_one_check,
                                cfg.suite[i], std::cref(cfg), cfg.seed));
    for (std::size_t i = base; i < end; ++i)
      reports[i] = wave[i - base].get();
  }

  bool all_pass = true;
  auto checks = ordered_json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const lc::CheckReport& report = reports[i];
    std::ostringstream stem;
    stem.width(2);
    stem.fill('0');
    stem << (i + 1);
    const std::string prefix = stem.str() + "_" + report.check;
    write_file(out_dir / (prefix + ".report.json"), lc::report_to_json(report));
    if (is_cone_check(report.check))
      write_file(out_dir / (prefix + ".samples.csv"),
                 lc::cone_samples_csv(report));

    double worst = std::numeric_limits<double>::infinity();
    int vacuous = 0;
    for (const auto& s : report.samples) {
      if (s.vacuous)
        ++vacuous;
      else
        worst = std::min(worst, s.margin);
    }
    ordered_json item;
    item["name"] = report.check;
    item["verdict"] = report.verdict();
    item["tolerance"] = report.tolerance;
    item["samples"] = report.samples.size();
    item["vacuous"] = vacuous;
    if (std::isfinite(worst)) item["worst_margin"] = worst;
    checks.push_back(std::move(item));
    all_pass = all_pass && report.pass;

    std::cout << report.check << ": " << report.verdict() << "\n";
    for (const auto& note : report.notes)
      std::cout << "  note: " << note << "\n";
  }

  ordered_json summary;
  summary["model"] = lc::text_digest(lc::model_to_json_text(cfg.model));
  summary["seed"] = cfg.seed;
  summary["checks"] = std::move(checks);
  summary["all_pass"] = all_pass;
  write_file(out_dir / "summary.json", summary.dump(2) + "\n");

  return all_pass ? 0 : 2;
}

std::string describe_jumps(const lc::LatticeModel& model) {
  if (model.jumps.empty()) return "none";
  std::map<std::string, std::pair<int, std::set<double>>> groups;
  for (const auto& jump : model.jumps) {
    std::string kind = "custom";
    if (jump.kind == lc::JumpSpec::Kind::dephasing) kind = "dephasing";
    if (jump.kind == lc::JumpSpec::Kind::hop) kind = "hop";
    auto& g = groups[kind];
    g.first += 1;
    if (kind != "custom") g.second.insert(jump.rate);
  }
  std::string out;
  for (const auto& [kind, g] : groups) {
    if (!out.empty()) out += ", ";
    out += std::to_string(g.first) + " " + kind;
    if (g.second.size() == 1)
      out += " (rate " + format_sig12(*g.second.begin()) + ")";
    else if (g.second.size() > 1)
      out += " (rates " + format_sig12(*g.second.begin()) + " .. " +
             format_sig12(*g.second.rbegin()) + ")";
  }
  return out;
}

// A model extends canonically to twice the size when its potential is
// constant and its jump list is one homogeneous per-site or per-bond family;
// the velocity functional can then be compared across truncation sizes.
std::optional<lc::LatticeModel> doubled_model(const lc::LatticeModel& model) {
  lc::LatticeModel big = model;
  big.n_sites = 2 * model.n_sites;

  if (model.potential.size() > 0) {
    const double v0 = model.potential[0];
    for (int i = 0; i < model.potential.size(); ++i)
      if (model.potential[i] != v0) return std::nullopt;
    big.potential = Eigen::VectorXd::Constant(big.n_sites, v0);
  }

  big.jumps.clear();
  if (!model.jumps.empty()) {
    const auto kind = model.jumps.front().kind;
    const double rate = model.jumps.front().rate;
    const int direction = model.jumps.front().direction;
    std::set<int> sites;
    for (const auto& jump : model.jumps) {
      if (jump.kind != kind || jump.rate != rate) return std::nullopt;
      if (kind == lc::JumpSpec::Kind::custom) return std::nullopt;
      if (kind == lc::JumpSpec::Kind::hop && jump.direction != direction)
        return std::nullopt;
      sites.insert(jump.site);
    }
    int expected = model.n_sites;
    if (kind == lc::JumpSpec::Kind::hop &&
        model.boundary == lc::Boundary::open)
      expected = model.n_sites - 1;
    if (int(sites.size()) != int(model.jumps.size()) ||
        int(sites.size()) != expected)
      return std::nullopt;

    int big_count = big.n_sites;
    if (kind == lc::JumpSpec::Kind::hop &&
        model.boundary == lc::Boundary::open)
      big_count = big.n_sites - 1;
    for (int s = 0; s < big_count; ++s) {
      lc::JumpSpec jump;
      jump.kind = kind;
      jump.site = s;
      jump.direction = direction;
      jump.rate = rate;
      big.jumps.push_back(jump);
    }
  }
  return big;
}

int describe_command(const std::string& model_path) {
  const lc::LatticeModel model = lc::model_from_json_file(model_path);
  lc::validate_model(model);

  const lc::OperatorMatrix h = lc::build_hamiltonian(model);
  int max_range = 0;
  for (const auto& term : model.hopping)
    max_range = std::max(max_range, std::abs(term.offset));

  std::cout << "sites: " << model.n_sites << "\n";
  std::cout << "boundary: "
            << (model.boundary == lc::Boundary::open ? "open" : "periodic")
            << "\n";
  std::cout << "hopping: " << model.hopping.size() << " stored offsets, max range "
            << max_range << "\n";
  std::cout << "decay rate: " << format_sig12(model.decay_rate)
            << " (declared strip; hopping kernel has finite range, so any "
               "rate is admissible)\n";
  if (model.potential.size() == 0) {
    std::cout << "potential: zero\n";
  } else {
    const double lo = model.potential.minCoeff();
    const double hi = model.potential.maxCoeff();
    if (lo == hi)
      std::cout << "potential: constant " << format_sig12(lo) << "\n";
    else
      std::cout << "potential: varying in [" << format_sig12(lo) << ", "
                << format_sig12(hi) << "] (seed " << model.seed << ")\n";
  }
  std::cout << "jumps: " << describe_jumps(model) << "\n";
  std::cout << "hermiticity residual: "
            << format_sig12(lc::hermiticity_defect(h.entries)) << "\n";
  std::cout << "gtilde_prime norm: "
            << format_sig12(lc::operator_norm(lc::build_gprime(model).entries))
            << "\n";

  const std::vector<double> grid = lc::default_nu_grid(model.decay_rate);
  std::vector<double> c_small;
  std::cout << "velocity c_prime (d = " << model.n_sites << "):\n";
  std::cout << "nu,c_prime\n";
  for (double nu : grid) {
    const double c = lc::velocity_c_prime(model, nu).c_prime;
    c_small.push_back(c);
    std::cout << format_sig12(nu) << "," << format_sig12(c) << "\n";
  }

  const auto big = doubled_model(model);
  if (big) {
    std::cout << "velocity c_prime (d = " << big->n_sites << "):\n";
    std::cout << "nu,c_prime\n";
    double gap = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double c = lc::velocity_c_prime(*big, grid[i]).c_prime;
      gap = std::max(gap, std::abs(c - c_small[i]));
      std::cout << format_sig12(grid[i]) << "," << format_sig12(c) << "\n";
    }
    std::cout << "truncation gap (max |c_prime(" << big->n_sites
              << ") - c_prime(" << model.n_sites
              << ")|): " << format_sig12(gap) << "\n";
  } else {
    std::cout << "truncation gap: skipped (model has no canonical "
                 "size-doubling extension)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"light-cone certificates for lattice Lindblad dynamics"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed_value = 0;
  int jobs = 1;
  auto* run = app.add_subcommand("run", "execute a config-driven check suite");
  run->add_option("config", config_path, "experiment config JSON")->required();
  run->add_option("--out", out_dir, "output directory (overrides config)");
  auto* seed_opt =
      run->add_option("--seed", seed_value, "seed (overrides config)");
  run->add_option("--jobs", jobs, "max concurrent checks")
      ->check(CLI::Range(1, 16));

  std::string model_path;
  auto* describe =
      app.add_subcommand("describe", "summarize a model JSON file");
  describe->add_option("model", model_path, "model JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      std::optional<std::uint64_t> seed_flag;
      if (seed_opt->count() > 0) seed_flag = seed_value;
      return run_command(config_path, out_dir, seed_flag, jobs);
    }
    return describe_command(model_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
