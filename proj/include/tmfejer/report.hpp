#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmfejer/config.hpp"

namespace tmfejer {

/// Numeric table plus descriptive metadata, serialized to CSV or JSON.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Header row first, 17 significant digits, '\n' line endings.
std::string to_csv(const Report& report);

/// Single JSON document with "schema_version": "1".
std::string to_json(const Report& report);

std::string serialize(const Report& report, OutputFormat format);

/// Runs the experiment named by `command` (which must agree with config.command
/// when that is set). `default_grid` replaces the per-order default resolution
/// when config.grid_n is unset; 0 keeps the per-order default.
Report run_experiment(Command command, const ExperimentConfig& config,
                      std::size_t default_grid = 0);

}  // namespace tmfejer
