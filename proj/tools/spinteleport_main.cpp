// Command-line front end: every quantity the library computes, as JSON on
// stdout (or CSV/JSON dataset files for the figure grids).
//
// Exit codes: 0 success, 2 configuration error (bad flags, bad config file,
// unwritable output), 3 numerical-domain error (invalid physical parameters
// or failed computation).

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spinteleport/critical.hpp"
#include "spinteleport/holevo.hpp"
#include "spinteleport/sweep.hpp"
#include "spinteleport/teleport.hpp"
#include "spinteleport/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spinteleport;

ordered_json complex_json(const Complex& z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json matrix_json(const Matrix4cd& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < 4; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 4; ++c) {
      row.push_back(complex_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json params_json(const ChainParams& p) {
  return {{"J", p.coupling()}, {"B", p.field()}, {"T", p.temperature()}};
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

/// Options merged from an optional JSON config file and the command line;
/// command-line flags take precedence over config keys of the same name.
class OptionContext {
 public:
  explicit OptionContext(const std::string& config_path) {
    if (config_path.empty()) return;
    std::ifstream file(config_path);
    if (!file) {
      throw ConfigError("cannot open config file: " + config_path);
    }
    try {
      file >> config_;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("malformed config file " + config_path + ": " +
                        e.what());
    }
    if (!config_.is_object()) {
      throw ConfigError("config file " + config_path +
                        " must hold a JSON object");
    }
  }

  template <typename T>
  std::optional<T> lookup(const std::optional<T>& flag,
                          const char* key) const {
    if (flag.has_value()) return flag;
    if (config_.contains(key)) return config_value<T>(key);
    return std::nullopt;
  }

  template <typename T>
  T require(const std::optional<T>& flag, const char* key) const {
    const std::optional<T> value = lookup(flag, key);
    if (!value.has_value()) {
      throw ConfigError(std::string("missing required option --") + key);
    }
    return *value;
  }

  template <typename T>
  T value_or(const std::optional<T>& flag, const char* key,
             const T& fallback) const {
    return lookup(flag, key).value_or(fallback);
  }

  /// For list-valued flags, which CLI11 leaves empty rather than unset.
  std::optional<std::pair<double, double>> lookup_range(
      const std::vector<double>& flag, const char* key) const {
    std::vector<double> values = flag;
    if (values.empty() && config_.contains(key)) {
      values = config_value<std::vector<double>>(key);
    }
    if (values.empty()) return std::nullopt;
    if (values.size() != 2) {
      throw ConfigError(std::string(key) + " needs exactly two numbers");
    }
    return std::pair{values[0], values[1]};
  }

 private:
  template <typename T>
  T config_value(const char* key) const {
    try {
      return config_.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(std::string("config key '") + key +
                        "' has the wrong type");
    }
  }

  ordered_json config_ = ordered_json::object();
};

/// Flag targets shared by the physics subcommands.
struct Flags {
  std::optional<double> coupling;
  std::optional<double> field;
  std::optional<double> temperature;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<double> gamma;
  std::optional<double> beta;
  std::optional<int> quadrature_order;
  std::optional<std::string> kind;
  std::optional<std::string> figure_id;
  std::optional<int> resolution;
  std::optional<std::string> out_path;
  std::optional<std::string> format;
  std::vector<double> gamma_range;
  std::vector<double> beta_range;
  std::string config_path;
};

ChainParams chain_params(const OptionContext& ctx, const Flags& f) {
  return ChainParams(ctx.require(f.coupling, "J"), ctx.require(f.field, "B"),
                     ctx.require(f.temperature, "T"));
}

void run_thermal(const Flags& f) {
  const OptionContext ctx(f.config_path);
  const ChainParams params = chain_params(ctx, f);
  const Matrix4cd rho = thermal_state(params);
  const double log_z = log_partition_function(params);
  const double z = std::exp(log_z);
  const PauliProbabilities probs = pauli_probabilities(rho);

  ordered_json doc;
  doc["params"] = params_json(params);
  doc["rho"] = matrix_json(rho);
  doc["log_partition"] = log_z;
  doc["partition"] = std::isfinite(z) ? ordered_json(z) : ordered_json();
  doc["negativity"] = negativity(rho);
  doc["negativity_closed"] = thermal_negativity_closed(params);
  doc["critical_temperature"] = critical_temperature(params.coupling());
  doc["probabilities"] = {{"identity", probs.identity},
                          {"x", probs.x},
                          {"y", probs.y},
                          {"z", probs.z}};
  emit(doc);
}

void run_teleport(const Flags& f) {
  const OptionContext ctx(f.config_path);
  const ChainParams params = chain_params(ctx, f);
  const InputState input(ctx.require(f.theta, "theta"),
                         ctx.require(f.phi, "phi"));
  const TeleportOutcome outcome = teleport_state(input, params);

  ordered_json doc;
  doc["params"] = params_json(params);
  doc["input"] = {{"theta", input.theta()},
                  {"phi", input.phi()},
                  {"entanglement", input.input_entanglement()}};
  doc["rho_out"] = matrix_json(outcome.rho_out);
  doc["fidelity"] = outcome.fidelity;
  doc["output_entanglement"] = outcome.output_entanglement;
  doc["output_entanglement_closed"] =
      output_negativity_closed(input.input_entanglement(), params);
  emit(doc);
}

void run_fidelity(const Flags& f) {
  const OptionContext ctx(f.config_path);
  const ChainParams params = chain_params(ctx, f);
  const int order = ctx.value_or(f.quadrature_order, "quadrature-order",
                                 kDefaultQuadratureOrder);
  const double closed = average_fidelity_closed(params);

  ordered_json doc;
  doc["params"] = params_json(params);
  doc["quadrature_order"] = order;
  doc["average_fidelity_closed"] = closed;
  doc["average_fidelity_quadrature"] =
      average_fidelity_quadrature(params, order);
  doc["weak_coupling_fidelity"] =
      weak_coupling_fidelity(params.field(), params.temperature());
  doc["classical_limit"] = 2.0 / 3.0;
  doc["exceeds_classical"] = closed > 2.0 / 3.0;
  emit(doc);
}

void run_mutual_info(const Flags& f) {
  const OptionContext ctx(f.config_path);
  const ChainParams params = chain_params(ctx, f);
  const double gamma = ctx.require(f.gamma, "gamma");
  const double beta = ctx.require(f.beta, "beta");
  const MutualInfoResult result = mutual_information(params, gamma, beta);

  ordered_json doc;
  doc["params"] = params_json(params);
  doc["angles"] = {{"gamma", gamma}, {"beta", beta}};
  doc["mutual_information"] = result.value;
  doc["per_signal_entropies"] = result.per_signal_entropies;
  doc["average_state_entropy"] = result.average_state_entropy;
  emit(doc);
}

void run_critical(const Flags& f) {
  const OptionContext ctx(f.config_path);
  const double coupling = ctx.require(f.coupling, "J");
  const double temperature = ctx.require(f.temperature, "T");
  const std::string kind = ctx.require(f.kind, "kind");

  std::optional<double> critical_field;
  if (kind == "entanglement") {
    critical_field = critical_field_entanglement(coupling, temperature);
  } else if (kind == "fidelity") {
    critical_field = critical_field_fidelity(coupling, temperature);
  } else {
    throw ConfigError("--kind must be 'entanglement' or 'fidelity', got '" +
                      kind + "'");
  }

  ordered_json doc;
  doc["params"] = {{"J", coupling}, {"T", temperature}};
  doc["kind"] = kind;
  doc["exists"] = critical_field.has_value();
  doc["critical_field"] = critical_field.has_value()
                              ? ordered_json(*critical_field)
                              : ordered_json();
  emit(doc);
}

void run_figure(const Flags& f) {
  const OptionContext ctx(f.config_path);
  SweepSpec spec;
  spec.figure = parse_figure_id(ctx.require(f.figure_id, "id"));
  spec.resolution = ctx.value_or(f.resolution, "resolution", 64);
  spec.coupling = ctx.lookup(f.coupling, "J");
  spec.field = ctx.lookup(f.field, "B");
  spec.temperature = ctx.lookup(f.temperature, "T");
  spec.gamma_range = ctx.lookup_range(f.gamma_range, "gamma-range");
  spec.beta_range = ctx.lookup_range(f.beta_range, "beta-range");
  const DatasetFormat format = parse_dataset_format(
      ctx.value_or<std::string>(f.format, "format", "csv"));

  const SweepDataset dataset = run_sweep(spec);
  const std::optional<std::string> out_path = ctx.lookup(f.out_path, "out");
  if (out_path.has_value()) {
    write_dataset(dataset, format, *out_path);
  } else if (format == DatasetFormat::kCsv) {
    std::cout << to_csv(dataset);
  } else {
    std::cout << to_json(dataset).dump(2) << '\n';
  }
}

void add_chain_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--J", f.coupling, "exchange coupling, > 0");
  cmd->add_option("--B", f.field, "magnetic field, >= 0");
  cmd->add_option("--T", f.temperature, "temperature, > 0");
}

void add_config_flag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path,
                  "JSON file with the same keys as the flags; "
                  "flags take precedence");
}

}  // namespace

int main(int argc, char** argv) {
  Flags flags;
  CLI::App app{"Entanglement, fidelity and channel-capacity calculator for "
               "teleportation through a thermal two-spin chain"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CLI::App* thermal =
      app.add_subcommand("thermal", "Gibbs resource state and its outcome "
                                    "probabilities");
  add_chain_flags(thermal, flags);
  add_config_flag(thermal, flags);
  thermal->callback([&flags] { run_thermal(flags); });

  CLI::App* teleport = app.add_subcommand(
      "teleport", "Teleport one input state through the thermal channel");
  add_chain_flags(teleport, flags);
  teleport->add_option("--theta", flags.theta, "input mixing angle in [0, pi]");
  teleport->add_option("--phi", flags.phi, "input phase in [0, 2 pi)");
  add_config_flag(teleport, flags);
  teleport->callback([&flags] { run_teleport(flags); });

  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "Sphere-averaged teleportation fidelity");
  add_chain_flags(fidelity, flags);
  fidelity->add_option("--quadrature-order", flags.quadrature_order,
                       "polar quadrature order, >= 8");
  add_config_flag(fidelity, flags);
  fidelity->callback([&flags] { run_fidelity(flags); });

  CLI::App* mutual = app.add_subcommand(
      "mutual-info", "Mutual information of a four-letter alphabet sent "
                     "through the channel");
  add_chain_flags(mutual, flags);
  mutual->add_option("--gamma", flags.gamma, "first-plane mixing angle");
  mutual->add_option("--beta", flags.beta, "second-plane mixing angle");
  add_config_flag(mutual, flags);
  mutual->callback([&flags] { run_mutual_info(flags); });

  CLI::App* critical = app.add_subcommand(
      "critical", "Boundary field where the channel stops beating the "
                  "classical benchmark");
  critical->add_option("--J", flags.coupling, "exchange coupling, > 0");
  critical->add_option("--T", flags.temperature, "temperature, > 0");
  critical->add_option("--kind", flags.kind,
                       "'entanglement' or 'fidelity'");
  add_config_flag(critical, flags);
  critical->callback([&flags] { run_critical(flags); });

  CLI::App* figure = app.add_subcommand(
      "figure", "Figure dataset grids as CSV or JSON");
  figure->add_option("--id", flags.figure_id, "fig1a..fig4b");
  figure->add_option("--resolution", flags.resolution,
                     "points per axis, in [2, 4096] (default 64)");
  figure->add_option("--out", flags.out_path,
                     "output file (stdout when omitted)");
  figure->add_option("--format", flags.format, "csv or json (default csv)");
  add_chain_flags(figure, flags);
  figure->add_option("--gamma-range", flags.gamma_range,
                     "first angle window, two numbers")
      ->expected(2);
  figure->add_option("--beta-range", flags.beta_range,
                     "second angle window, two numbers")
      ->expected(2);
  add_config_flag(figure, flags);
  figure->callback([&flags] { run_figure(flags); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
