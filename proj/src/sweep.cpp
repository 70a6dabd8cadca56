#include "spinteleport/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "spinteleport/critical.hpp"
#include "spinteleport/holevo.hpp"
#include "spinteleport/teleport.hpp"
#include "spinteleport/version.hpp"

namespace spinteleport {

namespace {

using nlohmann::ordered_json;

// Caption defaults shared by most figures.
const double kCaptionTemperature = 0.5 / std::log(3.0);
constexpr double kCaptionCoupling = 1.0;
constexpr double kFieldMax = 3.0;
constexpr double kTemperatureMax = 3.0;
constexpr double kCouplingMin = 0.05;
constexpr double kCouplingMax = 3.0;
constexpr double kEntangledAngle = std::numbers::pi / 4.0;
constexpr double kProductAngle = 0.0;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> points(n);
  for (int i = 0; i < n; ++i) {
    points[i] = lo + (hi - lo) * i / (n - 1);
  }
  return points;
}

void reject_override(bool present, const char* name, FigureId id) {
  if (present) {
    std::ostringstream msg;
    msg << "run_sweep: " << name << " cannot be overridden for "
        << figure_name(id);
    throw ConfigError(msg.str());
  }
}

ordered_json base_metadata(const SweepSpec& spec) {
  ordered_json meta;
  meta["figure"] = figure_name(spec.figure);
  meta["resolution"] = spec.resolution;
  meta["tool_version"] = kVersion;
  meta["quadrature_order"] = kDefaultQuadratureOrder;
  return meta;
}

ordered_json axis_entry(double lo, double hi) {
  return ordered_json::array({lo, hi});
}

std::pair<double, double> angle_axis(
    const std::optional<std::pair<double, double>>& range) {
  const auto [lo, hi] = range.value_or(
      std::pair<double, double>{0.0, std::numbers::pi});
  if (!(lo < hi)) {
    throw ConfigError("run_sweep: angle range must satisfy lo < hi");
  }
  return {lo, hi};
}

// Output-entanglement figures: E_in is always the first axis; the second
// axis and the fixed parameters vary per figure.
SweepDataset sweep_entanglement(const SweepSpec& spec) {
  const int n = spec.resolution;
  SweepDataset out;
  out.metadata = base_metadata(spec);
  const std::vector<double> e_axis = linspace(0.0, 1.0, n);
  reject_override(spec.gamma_range.has_value(), "gamma range", spec.figure);
  reject_override(spec.beta_range.has_value(), "beta range", spec.figure);

  std::vector<double> second_axis;
  std::string second_name;
  double coupling = spec.coupling.value_or(kCaptionCoupling);
  double field = spec.field.value_or(0.0);
  double temperature = spec.temperature.value_or(kCaptionTemperature);
  switch (spec.figure) {
    case FigureId::kFig1a:
      reject_override(spec.field.has_value(), "B", spec.figure);
      second_name = "B";
      second_axis = linspace(0.0, kFieldMax, n);
      out.metadata["fixed"] = {{"J", coupling}, {"T", temperature}};
      break;
    case FigureId::kFig1b:
      reject_override(spec.temperature.has_value(), "T", spec.figure);
      second_name = "T";
      second_axis = linspace(ChainParams::kTemperatureFloor,
                             kTemperatureMax, n);
      out.metadata["fixed"] = {{"J", coupling}, {"B", field}};
      break;
    case FigureId::kFig1c:
      reject_override(spec.coupling.has_value(), "J", spec.figure);
      second_name = "J";
      second_axis = linspace(kCouplingMin, kCouplingMax, n);
      out.metadata["fixed"] = {{"B", field}, {"T", temperature}};
      break;
    default:
      throw ConfigError("sweep_entanglement: unexpected figure");
  }
  out.metadata["axes"] = {{"E_in", axis_entry(0.0, 1.0)},
                          {second_name, axis_entry(second_axis.front(),
                                                   second_axis.back())}};
  out.columns = {"E_in", second_name, "E_out"};
  out.rows.reserve(static_cast<size_t>(n) * n);
  for (double e_in : e_axis) {
    for (double s : second_axis) {
      double j = coupling, b = field, t = temperature;
      if (spec.figure == FigureId::kFig1a) b = s;
      if (spec.figure == FigureId::kFig1b) t = s;
      if (spec.figure == FigureId::kFig1c) j = s;
      const double e_out =
          output_negativity_closed(e_in, ChainParams(j, b, t));
      out.rows.push_back({e_in, s, e_out});
    }
  }
  return out;
}

// Boundary figures: the critical field over (T, J), empty where no boundary
// exists.
SweepDataset sweep_boundary(const SweepSpec& spec) {
  const int n = spec.resolution;
  const bool entanglement = spec.figure == FigureId::kFig1d;
  SweepDataset out;
  out.metadata = base_metadata(spec);
  reject_override(spec.coupling.has_value(), "J", spec.figure);
  reject_override(spec.field.has_value(), "B", spec.figure);
  reject_override(spec.temperature.has_value(), "T", spec.figure);
  reject_override(spec.gamma_range.has_value(), "gamma range", spec.figure);
  reject_override(spec.beta_range.has_value(), "beta range", spec.figure);
  const std::vector<double> t_axis =
      linspace(ChainParams::kTemperatureFloor, kTemperatureMax, n);
  const std::vector<double> j_axis = linspace(kCouplingMin, kCouplingMax, n);
  out.metadata["fixed"] = ordered_json::object();
  out.metadata["boundary"] =
      entanglement ? "entanglement" : "classical_fidelity";
  out.metadata["axes"] = {
      {"T", axis_entry(t_axis.front(), t_axis.back())},
      {"J", axis_entry(j_axis.front(), j_axis.back())}};
  out.columns = {"T", "J", "B_critical"};
  out.rows.reserve(static_cast<size_t>(n) * n);
  for (double t : t_axis) {
    for (double j : j_axis) {
      const std::optional<double> b =
          entanglement ? critical_field_entanglement(j, t)
                       : critical_field_fidelity(j, t);
      out.rows.push_back({t, j, b});
    }
  }
  return out;
}

SweepDataset sweep_fidelity(const SweepSpec& spec) {
  const int n = spec.resolution;
  SweepDataset out;
  out.metadata = base_metadata(spec);
  reject_override(spec.coupling.has_value(), "J", spec.figure);
  reject_override(spec.field.has_value(), "B", spec.figure);
  reject_override(spec.gamma_range.has_value(), "gamma range", spec.figure);
  reject_override(spec.beta_range.has_value(), "beta range", spec.figure);
  const double temperature = spec.temperature.value_or(kCaptionTemperature);
  const std::vector<double> b_axis = linspace(0.0, kFieldMax, n);
  const std::vector<double> j_axis = linspace(kCouplingMin, kCouplingMax, n);
  out.metadata["fixed"] = {{"T", temperature}};
  out.metadata["axes"] = {
      {"B", axis_entry(b_axis.front(), b_axis.back())},
      {"J", axis_entry(j_axis.front(), j_axis.back())}};
  out.columns = {"B", "J", "F_avg"};
  out.rows.reserve(static_cast<size_t>(n) * n);
  for (double b : b_axis) {
    for (double j : j_axis) {
      out.rows.push_back(
          {b, j, average_fidelity_closed(ChainParams(j, b, temperature))});
    }
  }
  return out;
}

SweepDataset sweep_information_angles(const SweepSpec& spec) {
  const int n = spec.resolution;
  SweepDataset out;
  out.metadata = base_metadata(spec);
  const double coupling = spec.coupling.value_or(kCaptionCoupling);
  const double field = spec.field.value_or(0.0);
  const double temperature = spec.temperature.value_or(kCaptionTemperature);
  const auto [g_lo, g_hi] = angle_axis(spec.gamma_range);
  const auto [b_lo, b_hi] = angle_axis(spec.beta_range);
  const ChainParams params(coupling, field, temperature);
  out.metadata["fixed"] = {{"J", coupling}, {"B", field}, {"T", temperature}};
  out.metadata["axes"] = {{"gamma", axis_entry(g_lo, g_hi)},
                          {"beta", axis_entry(b_lo, b_hi)}};
  out.columns = {"gamma", "beta", "I"};
  const std::vector<double> g_axis = linspace(g_lo, g_hi, n);
  const std::vector<double> b_axis = linspace(b_lo, b_hi, n);
  out.rows.reserve(static_cast<size_t>(n) * n);
  for (double gamma : g_axis) {
    for (double beta : b_axis) {
      out.rows.push_back(
          {gamma, beta, mutual_information(params, gamma, beta).value});
    }
  }
  return out;
}

SweepDataset sweep_information_plane(const SweepSpec& spec) {
  const int n = spec.resolution;
  SweepDataset out;
  out.metadata = base_metadata(spec);
  reject_override(spec.field.has_value(), "B", spec.figure);
  reject_override(spec.temperature.has_value(), "T", spec.figure);
  reject_override(spec.gamma_range.has_value(), "gamma range", spec.figure);
  reject_override(spec.beta_range.has_value(), "beta range", spec.figure);
  const double coupling = spec.coupling.value_or(kCaptionCoupling);
  const std::vector<double> b_axis = linspace(0.0, kFieldMax, n);
  const std::vector<double> t_axis =
      linspace(ChainParams::kTemperatureFloor, kTemperatureMax, n);
  out.metadata["fixed"] = {{"J", coupling},
                           {"gamma", kEntangledAngle},
                           {"beta", kEntangledAngle}};
  out.metadata["axes"] = {
      {"B", axis_entry(b_axis.front(), b_axis.back())},
      {"T", axis_entry(t_axis.front(), t_axis.back())}};
  out.columns = {"B", "T", "I"};
  out.rows.reserve(static_cast<size_t>(n) * n);
  for (double b : b_axis) {
    for (double t : t_axis) {
      const ChainParams params(coupling, b, t);
      out.rows.push_back(
          {b, t,
           mutual_information(params, kEntangledAngle, kEntangledAngle)
               .value});
    }
  }
  return out;
}

// One-dimensional comparison of the maximally entangled and product signal
// ensembles.
SweepDataset sweep_information_series(const SweepSpec& spec) {
  const int n = spec.resolution;
  const bool field_axis = spec.figure == FigureId::kFig4a;
  SweepDataset out;
  out.metadata = base_metadata(spec);
  reject_override(spec.gamma_range.has_value(), "gamma range", spec.figure);
  reject_override(spec.beta_range.has_value(), "beta range", spec.figure);
  const double coupling = spec.coupling.value_or(kCaptionCoupling);
  double field = spec.field.value_or(0.0);
  double temperature = spec.temperature.value_or(kCaptionTemperature);
  std::vector<double> axis;
  std::string axis_name;
  if (field_axis) {
    reject_override(spec.field.has_value(), "B", spec.figure);
    axis_name = "B";
    axis = linspace(0.0, kFieldMax, n);
    out.metadata["fixed"] = {{"J", coupling}, {"T", temperature}};
  } else {
    reject_override(spec.temperature.has_value(), "T", spec.figure);
    axis_name = "T";
    axis = linspace(ChainParams::kTemperatureFloor, kTemperatureMax, n);
    out.metadata["fixed"] = {{"J", coupling}, {"B", field}};
  }
  out.metadata["series"] = {{"I_entangled", {{"gamma", kEntangledAngle},
                                             {"beta", kEntangledAngle}}},
                            {"I_product", {{"gamma", kProductAngle},
                                           {"beta", kProductAngle}}}};
  out.metadata["axes"] = {{axis_name, axis_entry(axis.front(), axis.back())}};
  out.columns = {axis_name, "I_entangled", "I_product"};
  out.rows.reserve(n);
  for (double s : axis) {
    const double b = field_axis ? s : field;
    const double t = field_axis ? temperature : s;
    const ChainParams params(coupling, b, t);
    out.rows.push_back(
        {s, mutual_information(params, kEntangledAngle, kEntangledAngle)
                .value,
         mutual_information(params, kProductAngle, kProductAngle).value});
  }
  return out;
}

}  // namespace

FigureId parse_figure_id(const std::string& name) {
  if (name == "fig1a") return FigureId::kFig1a;
  if (name == "fig1b") return FigureId::kFig1b;
  if (name == "fig1c") return FigureId::kFig1c;
  if (name == "fig1d") return FigureId::kFig1d;
  if (name == "fig2a") return FigureId::kFig2a;
  if (name == "fig2b") return FigureId::kFig2b;
  if (name == "fig3a") return FigureId::kFig3a;
  if (name == "fig3b") return FigureId::kFig3b;
  if (name == "fig4a") return FigureId::kFig4a;
  if (name == "fig4b") return FigureId::kFig4b;
  throw ConfigError("unknown figure id: " + name);
}

std::string figure_name(FigureId id) {
  switch (id) {
    case FigureId::kFig1a: return "fig1a";
    case FigureId::kFig1b: return "fig1b";
    case FigureId::kFig1c: return "fig1c";
    case FigureId::kFig1d: return "fig1d";
    case FigureId::kFig2a: return "fig2a";
    case FigureId::kFig2b: return "fig2b";
    case FigureId::kFig3a: return "fig3a";
    case FigureId::kFig3b: return "fig3b";
    case FigureId::kFig4a: return "fig4a";
    case FigureId::kFig4b: return "fig4b";
  }
  throw ConfigError("unknown figure id");
}

DatasetFormat parse_dataset_format(const std::string& name) {
  if (name == "csv") return DatasetFormat::kCsv;
  if (name == "json") return DatasetFormat::kJson;
  throw ConfigError("unknown dataset format: " + name);
}

SweepDataset run_sweep(const SweepSpec& spec) {
  if (spec.resolution < 2 || spec.resolution > 4096) {
    std::ostringstream msg;
    msg << "run_sweep: resolution must lie in [2, 4096], got "
        << spec.resolution;
    throw ConfigError(msg.str());
  }
  switch (spec.figure) {
    case FigureId::kFig1a:
    case FigureId::kFig1b:
    case FigureId::kFig1c:
      return sweep_entanglement(spec);
    case FigureId::kFig1d:
    case FigureId::kFig2b:
      return sweep_boundary(spec);
    case FigureId::kFig2a:
      return sweep_fidelity(spec);
    case FigureId::kFig3a:
      return sweep_information_angles(spec);
    case FigureId::kFig3b:
      return sweep_information_plane(spec);
    case FigureId::kFig4a:
    case FigureId::kFig4b:
      return sweep_information_series(spec);
  }
  throw ConfigError("run_sweep: unknown figure id");
}

namespace {
std::string format_value(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.15g", v);
  return buffer;
}
}  // namespace

std::string to_csv(const SweepDataset& dataset) {
  std::string out;
  for (size_t i = 0; i < dataset.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += dataset.columns[i];
  }
  out += '\n';
  for (const auto& row : dataset.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      if (row[i].has_value()) out += format_value(*row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const SweepDataset& dataset) {
  ordered_json doc;
  doc["metadata"] = dataset.metadata;
  doc["columns"] = dataset.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : dataset.rows) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : row) {
      if (cell.has_value()) {
        cells.push_back(*cell);
      } else {
        cells.push_back(nullptr);
      }
    }
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

void write_dataset(const SweepDataset& dataset, DatasetFormat format,
                   const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw FileError("write_dataset: cannot open " + path);
  }
  if (format == DatasetFormat::kCsv) {
    file << to_csv(dataset);
  } else {
    file << to_json(dataset).dump(2) << '\n';
  }
  if (!file) {
    throw FileError("write_dataset: write failed for " + path);
  }
}

}  // namespace spinteleport
