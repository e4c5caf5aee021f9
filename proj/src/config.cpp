#include "tmfejer/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tmfejer/errors.hpp"
#include "tmfejer/functions.hpp"
#include "tmfejer/quadrature.hpp"

namespace tmfejer {
namespace {

const std::set<std::string> kKnownKeys = {
    "command", "sequence", "orders", "grid_n",   "seed",  "output",
    "format",  "function", "norm",   "probes",   "trials", "kernel_samples",
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw ConfigError(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what, line, "");
}

[[noreturn]] void validation_error(int line, const std::string& field, const std::string& what) {
  throw ConfigError(ErrorCode::kValidationError, field + ": " + what, line, field);
}

std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

// Splits "[a, (b, c), d]" at depth-zero commas.
std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!trim(current).empty() || !items.empty()) items.push_back(trim(current));
  return items;
}

std::vector<std::string> list_items(int line, const std::string& field, const std::string& value) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    validation_error(line, field, "expected a bracketed list");
  }
  auto items = split_list(value.substr(1, value.size() - 2));
  for (const auto& item : items) {
    if (item.empty()) validation_error(line, field, "empty list entry");
  }
  return items;
}

std::uint64_t parse_unsigned(int line, const std::string& field, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    validation_error(line, field, "expected a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    validation_error(line, field, "integer out of range: '" + text + "'");
  }
}

Complex parse_complex_field(int line, const std::string& field, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const Error& e) {
    validation_error(line, field, e.message());
  }
}

SequenceSpec parse_sequence(int line, const std::string& value) {
  SequenceSpec spec;
  if (value.rfind("explicit", 0) == 0) {
    spec.generator = SequenceSpec::Generator::kExplicit;
    const auto items = list_items(line, "sequence", trim(value.substr(8)));
    if (items.empty()) validation_error(line, "sequence", "explicit list is empty");
    for (std::size_t k = 0; k < items.size(); ++k) {
      spec.points.push_back(
          parse_complex_field(line, "sequence[" + std::to_string(k) + "]", items[k]));
    }
    return spec;
  }
  const auto open = value.find('(');
  if (open == std::string::npos || value.back() != ')') {
    validation_error(line, "sequence", "expected constant(c), geometric(r), harmonic(c) or explicit[...]");
  }
  const std::string head = trim(value.substr(0, open));
  spec.parameter = parse_complex_field(line, "sequence", value.substr(open + 1, value.size() - open - 2));
  if (head == "constant") {
    spec.generator = SequenceSpec::Generator::kConstant;
  } else if (head == "geometric") {
    spec.generator = SequenceSpec::Generator::kGeometric;
    const double r = spec.parameter.real();
    if (spec.parameter.imag() != 0.0 || !(r > 0.0 && r < 1.0)) {
      validation_error(line, "sequence", "geometric ratio must be real in (0, 1)");
    }
  } else if (head == "harmonic") {
    spec.generator = SequenceSpec::Generator::kHarmonic;
    if (spec.parameter.imag() != 0.0) validation_error(line, "sequence", "harmonic offset must be real");
  } else {
    validation_error(line, "sequence", "unknown generator '" + head + "'");
  }
  return spec;
}

}  // namespace

const char* to_string(Command command) {
  switch (command) {
    case Command::kKernel: return "kernel";
    case Command::kConverge: return "converge";
    case Command::kVoronovskaya: return "voronovskaya";
    case Command::kSaturation: return "saturation";
    case Command::kFrostman: return "frostman";
    case Command::kCounterexample: return "counterexample";
  }
  return "unknown";
}

std::optional<Command> command_from_string(const std::string& name) {
  for (Command c : {Command::kKernel, Command::kConverge, Command::kVoronovskaya,
                    Command::kSaturation, Command::kFrostman, Command::kCounterexample}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

std::string SequenceSpec::generator_name() const {
  switch (generator) {
    case Generator::kConstant: return "constant";
    case Generator::kGeometric: return "geometric";
    case Generator::kHarmonic: return "harmonic";
    case Generator::kExplicit: return "explicit";
  }
  return "unknown";
}

std::string SequenceSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (generator == Generator::kExplicit) {
    os << "explicit[";
    for (std::size_t k = 0; k < points.size(); ++k) {
      os << (k ? ", " : "") << "(" << points[k].real() << ", " << points[k].imag() << ")";
    }
    os << "]";
  } else {
    os << generator_name() << "((" << parameter.real() << ", " << parameter.imag() << "))";
  }
  return os.str();
}

PointSequence SequenceSpec::build(std::size_t count) const {
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Complex a;
    switch (generator) {
      case Generator::kConstant: a = parameter; break;
      case Generator::kGeometric: a = 1.0 - std::pow(parameter.real(), static_cast<double>(k)); break;
      case Generator::kHarmonic: a = 1.0 - 1.0 / (static_cast<double>(k) + parameter.real()); break;
      case Generator::kExplicit:
        if (k >= points.size()) {
          throw ConfigError(ErrorCode::kValidationError,
                            "sequence: explicit list has " + std::to_string(points.size()) +
                                " points but order " + std::to_string(count) + " was requested",
                            0, "sequence");
        }
        a = points[k];
        break;
    }
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !(std::abs(a) < PointSequence::kMaxModulus)) {
      const std::string field =
          generator == Generator::kExplicit ? "sequence[" + std::to_string(k) + "]" : "sequence";
      throw ConfigError(ErrorCode::kValidationError,
                        field + ": point " + std::to_string(k) + " has modulus >= 1 - 1e-12", 0,
                        field);
    }
    out.push_back(a);
  }
  return PointSequence(std::move(out));
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  bool have_sequence = false;
  int sequence_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) parse_error(line, "expected 'key = value'");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key.empty()) parse_error(line, "missing key");
    if (!kKnownKeys.count(key)) parse_error(line, "unknown key '" + key + "'");
    if (!seen.insert(key).second) parse_error(line, "duplicate key '" + key + "'");
    if (value.empty()) parse_error(line, "missing value for '" + key + "'");
    if (std::count(value.begin(), value.end(), '[') != std::count(value.begin(), value.end(), ']') ||
        std::count(value.begin(), value.end(), '(') != std::count(value.begin(), value.end(), ')')) {
      parse_error(line, "unbalanced brackets in value of '" + key + "'");
    }

    if (key == "command") {
      cfg.command = command_from_string(unquote(value));
      if (!cfg.command) validation_error(line, key, "unknown command '" + value + "'");
    } else if (key == "sequence") {
      cfg.sequence = parse_sequence(line, value);
      have_sequence = true;
      sequence_line = line;
    } else if (key == "orders") {
      for (const auto& item : list_items(line, key, value)) {
        cfg.orders.push_back(static_cast<std::size_t>(parse_unsigned(line, key, item)));
      }
      if (cfg.orders.empty()) validation_error(line, key, "must list at least one order");
      if (!std::is_sorted(cfg.orders.begin(), cfg.orders.end())) {
        validation_error(line, key, "must be sorted ascending");
      }
    } else if (key == "grid_n") {
      if (unquote(value) != "auto") {
        const auto n = static_cast<std::size_t>(parse_unsigned(line, key, value));
        if (!is_valid_resolution(n)) validation_error(line, key, "must be a power of two >= 16");
        cfg.grid_n = n;
      }
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(line, key, value);
    } else if (key == "output") {
      cfg.output_path = unquote(value);
    } else if (key == "format") {
      const std::string f = unquote(value);
      if (f == "csv") cfg.format = OutputFormat::kCsv;
      else if (f == "json") cfg.format = OutputFormat::kJson;
      else validation_error(line, key, "must be csv or json");
    } else if (key == "function") {
      cfg.function = unquote(value);
      try {
        corpus::by_name(cfg.function);
      } catch (const Error& e) {
        validation_error(line, key, e.message());
      }
    } else if (key == "norm") {
      const std::string nk = unquote(value);
      if (nk == "sup") cfg.norm = NormKind::kSup;
      else if (nk == "l1") cfg.norm = NormKind::kL1;
      else if (nk == "l2") cfg.norm = NormKind::kL2;
      else validation_error(line, key, "must be sup, l1 or l2");
    } else if (key == "probes") {
      const auto items = list_items(line, key, value);
      for (std::size_t k = 0; k < items.size(); ++k) {
        const std::string field = "probes[" + std::to_string(k) + "]";
        const Complex z = parse_complex_field(line, field, items[k]);
        if (std::abs(z) > 0.9) validation_error(line, field, "probe must satisfy |z| <= 0.9");
        cfg.probes.push_back(z);
      }
    } else if (key == "trials") {
      cfg.trials = static_cast<std::size_t>(parse_unsigned(line, key, value));
    } else if (key == "kernel_samples") {
      cfg.kernel_samples = static_cast<std::size_t>(parse_unsigned(line, key, value));
      if (cfg.kernel_samples == 0) validation_error(line, key, "must be positive");
    }
  }

  if (!have_sequence) validation_error(0, "sequence", "is required");
  if (cfg.orders.empty()) validation_error(0, "orders", "is required");
  try {
    cfg.sequence.build(cfg.orders.back());
  } catch (const ConfigError& e) {
    throw ConfigError(e.code(), e.message(), sequence_line, e.field());
  }
  return cfg;
}

}  // namespace tmfejer
