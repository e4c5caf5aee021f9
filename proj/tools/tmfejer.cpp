// tmfejer <command> --config <path> [--out <path>] [--format csv|json] [--seed N]

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tmfejer/config.hpp"
#include "tmfejer/errors.hpp"
#include "tmfejer/quadrature.hpp"
#include "tmfejer/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNoConvergence = 3;

// TMFEJER_GRID_N replaces the automatic grid; an explicit grid_n in the config wins.
std::size_t grid_from_environment() {
  const char* raw = std::getenv("TMFEJER_GRID_N");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(raw, &end, 10);
  if (*end != '\0' || !tmfejer::is_valid_resolution(static_cast<std::size_t>(n))) {
    throw tmfejer::ConfigError(tmfejer::ErrorCode::kValidationError,
                               "TMFEJER_GRID_N must be a power of two >= 16", 0,
                               "TMFEJER_GRID_N");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Takenaka-Malmquist Fejer-type operator experiments"};
  std::string command_name;
  std::string config_path;
  std::string out_path;
  std::string format_name;
  std::uint64_t seed = 0;

  app.add_option("command", command_name,
                 "kernel | converge | voronovskaya | saturation | frostman | counterexample")
      ->required();
  app.add_option("--config", config_path, "experiment config file")->required();
  app.add_option("--out", out_path, "report path (default: config 'output', else stdout)");
  app.add_option("--format", format_name, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "random seed (overrides config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    const auto command = tmfejer::command_from_string(command_name);
    if (!command) {
      std::cerr << "error: unknown command '" << command_name << "'\n";
      return kExitConfig;
    }
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config '" << config_path << "'\n";
      return kExitConfig;
    }
    std::stringstream text;
    text << in.rdbuf();

    tmfejer::ExperimentConfig config = tmfejer::parse_config(text.str());
    if (!format_name.empty()) {
      config.format = format_name == "json" ? tmfejer::OutputFormat::kJson
                                            : tmfejer::OutputFormat::kCsv;
    }
    if (*seed_opt) config.seed = seed;
    if (!out_path.empty()) config.output_path = out_path;

    const tmfejer::Report report =
        tmfejer::run_experiment(*command, config, grid_from_environment());
    const std::string body = tmfejer::serialize(report, config.format);

    if (config.output_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(config.output_path, std::ios::binary);
      if (!out || !(out << body)) {
        std::cerr << "error: cannot write '" << config.output_path << "'\n";
        return kExitFailure;
      }
    }
    return kExitOk;
  } catch (const tmfejer::ConfigError& e) {
    std::cerr << "config error";
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    if (!e.field().empty()) std::cerr << " [" << e.field() << "]";
    std::cerr << ": " << e.message() << '\n';
    return kExitConfig;
  } catch (const tmfejer::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == tmfejer::ErrorCode::kNoConvergence ? kExitNoConvergence : kExitFailure;
  }
}
