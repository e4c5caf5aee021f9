#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmfejer/analysis.hpp"
#include "tmfejer/blaschke.hpp"

namespace tmfejer {

enum class Command { kKernel, kConverge, kVoronovskaya, kSaturation, kFrostman, kCounterexample };
enum class OutputFormat { kCsv, kJson };

const char* to_string(Command command);
std::optional<Command> command_from_string(const std::string& name);

/// Named, versioned generator for the zero sequence.
///   constant(c)        a_k = c
///   geometric(r)       a_k = 1 - r^k
///   harmonic(c)        a_k = 1 - 1/(k + c)
///   explicit[...]      listed points
struct SequenceSpec {
  static constexpr int kVersion = 1;

  enum class Generator { kConstant, kGeometric, kHarmonic, kExplicit };

  Generator generator = Generator::kConstant;
  Complex parameter;
  std::vector<Complex> points;

  std::string generator_name() const;
  std::string describe() const;

  /// First `count` points. Throws ValidationError (field "sequence" or
  /// "sequence[k]") when a point reaches modulus 1 - 1e-12.
  PointSequence build(std::size_t count) const;
};

struct ExperimentConfig {
  std::optional<Command> command;
  SequenceSpec sequence;
  std::vector<std::size_t> orders;
  std::optional<std::size_t> grid_n;
  std::uint64_t seed = 0;
  std::string output_path;
  OutputFormat format = OutputFormat::kCsv;
  std::string function = "w0";
  NormKind norm = NormKind::kSup;
  std::vector<Complex> probes;
  std::size_t trials = 100;
  std::size_t kernel_samples = 64;
};

/// Strict parser for `key = value` documents: `#` starts a comment, lists are
/// bracketed and comma separated, unknown or repeated keys are errors.
/// Throws ConfigError (ParseError with a line, ValidationError with a field).
ExperimentConfig parse_config(const std::string& text);

}  // namespace tmfejer
