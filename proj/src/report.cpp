#include "tmfejer/report.hpp"

#include <cstdio>
#include <json.hpp>

#include "tmfejer/errors.hpp"
#include "tmfejer/functions.hpp"

namespace tmfejer {
namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_csv(const Report& report) {
  std::string out;
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    out += (c ? "," : "") + report.columns[c];
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["command"] = report.command;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.metadata) meta[key] = value;
  doc["metadata"] = meta;
  doc["columns"] = report.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) r[report.columns[c]] = row[c];
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string serialize(const Report& report, OutputFormat format) {
  return format == OutputFormat::kJson ? to_json(report) : to_csv(report);
}

Report run_experiment(Command command, const ExperimentConfig& config, std::size_t default_grid) {
  if (config.command && *config.command != command) {
    throw ConfigError(ErrorCode::kValidationError,
                      std::string("command: config names '") + to_string(*config.command) +
                          "' but '" + to_string(command) + "' was requested",
                      0, "command");
  }
  const std::size_t max_order = config.orders.back();
  const PointSequence a = config.sequence.build(max_order);
  const std::size_t grid = config.grid_n.value_or(default_grid);

  Report report;
  report.command = to_string(command);
  report.metadata = {
      {"sequence_generator", config.sequence.generator_name()},
      {"sequence_generator_version", std::to_string(SequenceSpec::kVersion)},
      {"sequence", config.sequence.describe()},
      {"grid_n", grid ? std::to_string(grid) : "auto"},
      {"seed", std::to_string(config.seed)},
  };

  switch (command) {
    case Command::kKernel: {
      report.columns = {"n", "x", "y", "kernel"};
      for (const auto& s : kernel_surface(a, config.orders, config.kernel_samples)) {
        report.rows.push_back({static_cast<double>(s.n), s.x, s.y, s.value});
      }
      break;
    }
    case Command::kConverge: {
      const auto f = corpus::by_name(config.function);
      report.metadata.emplace_back("function", f.name());
      report.metadata.emplace_back("norm", to_string(config.norm));
      report.columns = {"n", "error_sup", "error_l1", "error_l2", "bound", "lower"};
      for (const auto& r : convergence_experiment(f, a, config.orders, config.norm, grid)) {
        report.rows.push_back(
            {static_cast<double>(r.n), r.error_sup, r.error_l1, r.error_l2, r.bound, r.lower});
      }
      break;
    }
    case Command::kVoronovskaya: {
      std::vector<Complex> probes = config.probes;
      if (probes.empty()) probes = {Complex{0.0, 0.0}, Complex{0.5, 0.0}, Complex{0.0, -0.7}};
      report.metadata.emplace_back("trials", std::to_string(config.trials));
      report.columns = {"n", "z_re", "z_im", "blaschke_modulus", "bound", "extremal", "random_max"};
      for (const auto& r : voronovskaya_experiment(a, config.orders, probes, config.trials,
                                                   config.seed, grid)) {
        report.rows.push_back({static_cast<double>(r.n), r.z.real(), r.z.imag(),
                               r.blaschke_modulus, r.bound, r.extremal, r.random_max});
      }
      break;
    }
    case Command::kSaturation: {
      const auto f = corpus::by_name(config.function);
      report.metadata.emplace_back("function", f.name());
      report.columns = {"n", "error", "lower", "holds"};
      for (const auto& r : saturation_check(f, a, config.orders, grid)) {
        report.rows.push_back({static_cast<double>(r.n), r.error, r.lower,
                               r.error >= r.lower - 1e-8 ? 1.0 : 0.0});
      }
      break;
    }
    case Command::kFrostman: {
      report.columns = {"n", "blaschke_sum_partial", "frostman_min_partial", "argmin_angle"};
      for (std::size_t n : config.orders) {
        const auto d = diagnose_sequence(a, n);
        report.rows.push_back({static_cast<double>(n), d.blaschke_sum_partial,
                               d.frostman_min_partial, d.argmin_angle});
      }
      break;
    }
    case Command::kCounterexample: {
      report.columns = {"n", "cesaro_sup", "argmax_angle", "closed_form", "fejer_type_sup"};
      const std::size_t res = grid ? grid : default_resolution(max_order, a.max_modulus(max_order));
      for (const auto& r : cesaro_counterexample(a, config.orders, res)) {
        report.rows.push_back({static_cast<double>(r.n), r.sup_norm, r.argmax_angle,
                               r.closed_form, r.positive_sup});
      }
      break;
    }
  }
  return report;
}

}  // namespace tmfejer
