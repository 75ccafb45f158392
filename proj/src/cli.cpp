// Copyright 2026 The qlitho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qlitho/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>

#include "qlitho/baselines.hpp"
#include "qlitho/error.hpp"
#include "qlitho/report.hpp"

namespace qlitho::cli {
namespace {

constexpr double kPi = std::numbers::pi;

const std::map<std::string, Command> kCommands = {
    {"fringe", Command::Fringe},         {"noon", Command::Noon},
    {"classical", Command::Classical},   {"synthesize", Command::Synthesize},
    {"compare", Command::Compare},
};

const std::map<std::string, SubstrateConvention> kConventions = {
    {"symmetric", SubstrateConvention::Symmetric},
    {"paper", SubstrateConvention::PaperLiteral},
};

const std::map<std::string, OutputFormat> kFormats = {
    {"csv", OutputFormat::Csv}, {"svg", OutputFormat::Svg}, {"both", OutputFormat::Both}};

std::string command_name(Command c) {
  for (const auto& [name, value] : kCommands) {
    if (value == c) return name;
  }
  return "unknown";
}

std::string convention_name(SubstrateConvention c) {
  return c == SubstrateConvention::Symmetric ? "symmetric" : "paper";
}

// Signals a failed internal consistency check (exit code 4).
struct ToleranceViolation {
  std::string what;
};

void check_close(std::string_view what, double max_error) {
  if (!(max_error < kCheckTolerance)) {
    throw ToleranceViolation{std::string(what) + ": max abs error " + format_double(max_error)};
  }
}

double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> sample(const std::vector<double>& phis, auto&& f) {
  std::vector<double> out(phis.size());
  std::transform(phis.begin(), phis.end(), out.begin(), f);
  return out;
}

FockState noon_at_outputs(int n) { return make_state({{{n, 0}, 1.0}, {{0, n}, 1.0}}); }

// Simulated N-photon dose of the NOON state and its analytic form, both
// in the selected coordinate.
std::pair<std::vector<double>, std::vector<double>> noon_columns(int n, const std::vector<double>& phis,
                                                                 SubstrateConvention conv) {
  if (conv == SubstrateConvention::Symmetric) {
    const FockState s = noon_at_outputs(n);
    return {sample(phis, [&](double phi) { return deposition_rate(s, n, phi, conv); }),
            sample(phis, [&](double phi) { return noon_exposure(phi, n); })};
  }
  // Phase N*phi carried by the state, field c + d.
  return {sample(phis,
                 [&](double phi) {
                   const FockState s = make_state({{{0, n}, 1.0}, {{n, 0}, std::polar(1.0, n * phi)}});
                   return deposition_rate(s, n, phi, conv);
                 }),
          sample(phis, [&](double phi) { return noon_exposure(phi / 2.0, n); })};
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void emit(const std::vector<Column>& columns, std::string_view title, const std::vector<Series>& series) {
    const std::string stem = config_.output_stem();
    if (config_.format != OutputFormat::Svg) {
      write_text(stem + ".csv", render_csv(columns));
      out_ << "wrote " << stem << ".csv\n";
    }
    if (config_.format != OutputFormat::Csv) {
      write_text(stem + ".svg", render_svg(title, columns.front().values, series));
      out_ << "wrote " << stem << ".svg\n";
    }
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

void run_fringe(const RunConfig& config, std::ostream& out) {
  const auto conv = config.convention;
  const auto phis = phase_grid(config.grid);
  const ExposureProfile quantum = exposure_profile(number_state(1, 1), 2, config.grid, conv, StatePort::Input);
  const double k = conv == SubstrateConvention::Symmetric ? 4.0 : 2.0;
  const auto analytic = sample(phis, [&](double phi) { return 1.0 + std::cos(k * phi); });
  const double err = max_abs_difference(quantum.doses, analytic);
  out << "max_abs_error_quantum = " << format_double(err) << '\n';

  std::vector<Column> cols = {
      {"phi", phis},
      {"delta_1_classical", sample(phis, classical_one_photon)},
      {"delta_2_classical", sample(phis, classical_two_photon)},
      {"delta_2_quantum", quantum.doses},
  };
  Emitter(config, out).emit(cols, "Exposure dose vs phase",
                            {{"classical 1-photon", cols[1].values, "#1f77b4", "8,4"},
                             {"classical 2-photon", cols[2].values, "#2ca02c", "2,3"},
                             {"entangled 2-photon", cols[3].values, "#d62728", ""}});
  check_close("entangled two-photon fringe", err);
}

void print_features(const RunConfig& config, std::ostream& out) {
  if (!config.wavelength_nm) return;
  out << "classical_min_feature_nm = " << format_double(min_feature(1, *config.wavelength_nm)) << '\n';
  out << "min_feature_nm = " << format_double(min_feature(config.n, *config.wavelength_nm)) << '\n';
}

void run_noon(const RunConfig& config, std::ostream& out) {
  const auto phis = phase_grid(config.grid);
  auto [simulated, analytic] = noon_columns(config.n, phis, config.convention);
  std::vector<double> abs_error(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) abs_error[i] = std::abs(simulated[i] - analytic[i]);
  const double err = *std::max_element(abs_error.begin(), abs_error.end());
  out << "max_abs_error = " << format_double(err) << '\n';
  print_features(config, out);
  std::vector<Column> cols = {{"phi", phis}, {"simulated", simulated}, {"analytic", analytic}, {"abs_error", abs_error}};
  Emitter(config, out).emit(cols, "Entangled N-photon exposure",
                            {{"simulated", cols[1].values, "#d62728", ""},
                             {"analytic", cols[2].values, "#000000", "4,4"}});
  check_close("NOON exposure", err);
}

void run_classical(const RunConfig& config, std::ostream& out) {
  const auto phis = phase_grid(config.grid);
  const int n = config.n;
  std::vector<Column> cols = {
      {"phi", phis},
      {"classical_1", sample(phis, classical_one_photon)},
      {"classical_2", sample(phis, classical_two_photon)},
      {"classical_n", sample(phis, [&](double phi) { return classical_n_photon(phi, n); })},
  };
  Emitter(config, out).emit(cols, "Classical exposure",
                            {{"1-photon", cols[1].values, "#1f77b4", "8,4"},
                             {"2-photon", cols[2].values, "#2ca02c", "2,3"},
                             {"N-photon", cols[3].values, "#9467bd", ""}});
}

// Lowest harmonic h > 0 carrying weight, i.e. the fringe frequency.
int fundamental_harmonic(const ExposureProfile& p) {
  const auto c = fourier_components(p, p.size() / 2 - 1);
  for (std::size_t h = 1; h < c.size(); ++h) {
    if (std::abs(c[h]) > 1e-9) return static_cast<int>(h);
  }
  return 0;
}

void run_compare(const RunConfig& config, std::ostream& out) {
  const auto phis = phase_grid(config.grid);
  const int n = config.n;
  auto [quantum, analytic] = noon_columns(n, phis, config.convention);
  const auto classical = sample(phis, [&](double phi) { return classical_n_photon(phi, n); });
  out << "classical_fundamental_harmonic = "
      << fundamental_harmonic(ExposureProfile::from_doses(classical)) << '\n';
  out << "quantum_fundamental_harmonic = "
      << fundamental_harmonic(ExposureProfile::from_doses(quantum)) << '\n';
  print_features(config, out);
  std::vector<Column> cols = {{"phi", phis}, {"classical_n", classical}, {"quantum_n", quantum}};
  Emitter(config, out).emit(cols, "Classical vs entangled N-photon exposure",
                            {{"classical N-photon", cols[1].values, "#1f77b4", "8,4"},
                             {"entangled N-photon", cols[2].values, "#d62728", ""}});
  check_close("NOON exposure", max_abs_difference(quantum, analytic));
}

TargetPattern load_target(const RunConfig& config) {
  if (!config.target_csv) return trench_target(config.grid);
  const auto rows = read_phi_value_csv(*config.target_csv);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& [phi, v] : rows) values.push_back(v);
  TargetPattern t = TargetPattern::from_samples(std::move(values));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::abs(rows[i].first - t.phis[i]) > 1e-9) {
      throw DomainError("target CSV row " + std::to_string(i + 1) + " is not on the uniform grid 2*pi*i/G");
    }
  }
  return t;
}

void run_synthesize(const RunConfig& config, std::ostream& out) {
  const auto conv = config.convention;
  const TargetPattern target = load_target(config);
  const PartitionBasis basis(config.n, config.partitions);
  const GaResult ga = ga_optimize(basis, target, config.ga, conv);
  const ClassicalFit classical = best_classical_fit(target, conv);
  const ExposureProfile quantum = genome_profile(ga.best, basis, target.size(), conv);
  const double quantum_mse = mean_squared_error(quantum.doses, target.samples);

  out << "quantum_mse = " << format_double(quantum_mse) << '\n';
  out << "classical_mse = " << format_double(classical.error) << '\n';
  out << "quantum_beats_classical = " << (quantum_mse < classical.error ? "yes" : "no") << '\n';

  nlohmann::ordered_json summary;
  summary["command"] = "synthesize";
  summary["convention"] = convention_name(conv);
  summary["target"] = config.target_csv ? *config.target_csv : "trench";
  summary["grid"] = target.size();
  summary["n"] = basis.photons();
  summary["seed"] = config.ga.seed;
  summary["ga"] = {{"population", config.ga.population},
                   {"generations", config.ga.generations},
                   {"mutation_sigma", config.ga.mutation_sigma},
                   {"crossover_rate", config.ga.crossover_rate},
                   {"elite_count", config.ga.elite_count}};
  auto& coeffs = summary["coefficients"] = nlohmann::ordered_json::array();
  for (int k = 0; k < basis.size(); ++k) {
    const Complex a = ga.best.coefficients[k];
    coeffs.push_back({{"p", basis.partitions()[k]}, {"re", a.real()}, {"im", a.imag()}, {"abs", std::abs(a)}});
  }
  summary["scale"] = ga.best.scale;
  summary["quantum_mse"] = quantum_mse;
  summary["classical_mse"] = classical.error;
  summary["classical_fit"] = {{"offset", classical.offset},
                              {"amplitude", classical.amplitude},
                              {"phase", classical.phase}};
  const std::string stem = config.output_stem();
  write_text(stem + ".summary.json", summary.dump(2) + "\n");
  out << "wrote " << stem << ".summary.json\n";

  std::vector<Column> cols = {{"phi", target.phis},
                              {"target", target.samples},
                              {"classical_best", classical.profile.doses},
                              {"quantum_best", quantum.doses}};
  Emitter(config, out).emit(cols, "Pattern synthesis",
                            {{"target", cols[1].values, "#000000", ""},
                             {"best classical", cols[2].values, "#1f77b4", "8,4"},
                             {"entangled fit", cols[3].values, "#d62728", ""}});

  if (!std::is_sorted(ga.trace.rbegin(), ga.trace.rend())) {
    throw ToleranceViolation{"GA best-fitness trace increased"};
  }
  check_close("direct vs tabulated genome dose", std::abs(quantum_mse - ga.best_fitness));
}

}  // namespace

void RunConfig::validate() const {
  if (n < 1) throw ConfigError("--n must be at least 1");
  if (grid < kMinGridSize) throw ConfigError("--grid must be at least " + std::to_string(kMinGridSize));
  if (wavelength_nm && !(*wavelength_nm > 0.0)) throw ConfigError("--wavelength-nm must be positive");
  if (command == Command::Synthesize) {
    PartitionBasis(n, partitions);
    ga.validate();
  }
  if (command == Command::Noon || command == Command::Compare) {
    // e^N on an N-photon state; keep the factorials in exact range of double.
    if (n > 100) throw ConfigError("--n must be at most 100");
  }
}

std::string RunConfig::output_stem() const { return out.empty() ? "qlitho_" + command_name(command) : out; }

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err) {
  RunConfig config;
  CLI::App app{"Entangled-photon interferometric lithography simulator", "qlitho"};
  app.set_config("--config", "", "Read key = value settings from a file");
  app.add_option("--command", config.command, "fringe | noon | classical | synthesize | compare")
      ->required()
      ->transform(CLI::CheckedTransformer(kCommands, CLI::ignore_case));
  app.add_option("--n", config.n, "Photon number N");
  app.add_option("--partitions", config.partitions, "Comma-separated partitions P")->delimiter(',');
  app.add_option("--grid", config.grid, "Phase grid size G");
  app.add_option("--convention", config.convention, "symmetric | paper")
      ->transform(CLI::CheckedTransformer(kConventions, CLI::ignore_case));
  app.add_option("--wavelength-nm", config.wavelength_nm, "Wavelength for feature-size reports");
  app.add_option("--seed", config.ga.seed, "GA seed");
  app.add_option("--population", config.ga.population, "GA population size");
  app.add_option("--generations", config.ga.generations, "GA generation count");
  app.add_option("--mutation-sigma", config.ga.mutation_sigma, "Gaussian mutation width");
  app.add_option("--crossover-rate", config.ga.crossover_rate, "Arithmetic crossover probability");
  app.add_option("--elite", config.ga.elite_count, "Individuals carried over unchanged");
  app.add_option("--out", config.out, "Output path stem (extensions are appended)");
  app.add_option("--format", config.format, "csv | svg | both")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  app.add_option("--target", config.target_csv, "Target CSV with header phi,value (synthesize)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  try {
    config.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.command) {
      case Command::Fringe: run_fringe(config, out); break;
      case Command::Noon: run_noon(config, out); break;
      case Command::Classical: run_classical(config, out); break;
      case Command::Synthesize: run_synthesize(config, out); break;
      case Command::Compare: run_compare(config, out); break;
    }
  } catch (const ToleranceViolation& v) {
    err << "tolerance violation: " << v.what << '\n';
    return kToleranceViolation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  return kSuccess;
}

}  // namespace qlitho::cli
