#ifndef SPINTELEPORT_SWEEP_HPP
#define SPINTELEPORT_SWEEP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinteleport/errors.hpp"

namespace spinteleport {

/// The ten published figure datasets.
enum class FigureId {
  kFig1a,  // E_out over (E_in, B)          at J = 1, T = 1/(2 ln 3)
  kFig1b,  // E_out over (E_in, T)          at J = 1, B = 0
  kFig1c,  // E_out over (E_in, J)          at B = 0, T = 1/(2 ln 3)
  kFig1d,  // entanglement boundary B_c over (T, J)
  kFig2a,  // average fidelity over (B, J)  at T = 1/(2 ln 3)
  kFig2b,  // fidelity boundary B_cf over (T, J)
  kFig3a,  // mutual information over (gamma, beta) at J = 1, B = 0
  kFig3b,  // mutual information over (B, T) at J = 1, gamma = beta = pi/4
  kFig4a,  // entangled/product mutual information over B at J = 1
  kFig4b,  // entangled/product mutual information over T at J = 1, B = 0
};

FigureId parse_figure_id(const std::string& name);
std::string figure_name(FigureId id);

/// Grid request for one figure.  Overrides replace the figure's fixed
/// parameters; requesting an override for a swept axis is a configuration
/// error.  Angle ranges apply to figures that sweep angles.
struct SweepSpec {
  FigureId figure = FigureId::kFig1a;
  int resolution = 64;  // points per axis, in [2, 4096]
  std::optional<double> coupling;
  std::optional<double> field;
  std::optional<double> temperature;
  std::optional<std::pair<double, double>> gamma_range;
  std::optional<std::pair<double, double>> beta_range;
};

/// Dense rectangular dataset: named columns, rows in grid order with the
/// first axis slowest.  Cells without a defined value (no boundary exists)
/// are empty.
struct SweepDataset {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  nlohmann::ordered_json metadata;
};

enum class DatasetFormat { kCsv, kJson };
DatasetFormat parse_dataset_format(const std::string& name);

/// Evaluates one figure's grid.  Deterministic: identical specs produce
/// byte-identical serialisations.
SweepDataset run_sweep(const SweepSpec& spec);

/// Header line plus one line per row; %.15g numbers, LF endings, empty
/// fields for missing values.  Metadata is not embedded in CSV.
std::string to_csv(const SweepDataset& dataset);

/// {"metadata": ..., "columns": [...], "rows": [[...], ...]} with null for
/// missing values.  Doubles survive a parse round trip exactly.
nlohmann::ordered_json to_json(const SweepDataset& dataset);

/// Serialises in the requested format and writes to path.
void write_dataset(const SweepDataset& dataset, DatasetFormat format,
                   const std::string& path);

}  // namespace spinteleport

#endif  // SPINTELEPORT_SWEEP_HPP
