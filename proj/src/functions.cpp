#include "tmfejer/functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "tmfejer/errors.hpp"

namespace tmfejer {
namespace {

std::string format_complex(Complex c) {
  std::ostringstream os;
  os.precision(6);
  os << c.real();
  if (c.imag() != 0.0) os << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

// Uniform in [-1, 1) from raw generator bits; identical on every platform.
double symmetric_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + text + "'");
  }
  if (used != text.size()) throw Error(ErrorCode::kInvalidArgument, "not a number: '" + text + "'");
  return v;
}

double parse_imag_part(const std::string& text) {
  // text ends in 'i'
  const std::string body = text.substr(0, text.size() - 1);
  if (body.empty() || body == "+") return 1.0;
  if (body == "-") return -1.0;
  return parse_real(body);
}

}  // namespace

const char* to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kRational: return "rational";
    case FunctionKind::kCauchyTransform: return "cauchy_transform";
    case FunctionKind::kSchur: return "schur";
    case FunctionKind::kBlaschkeMultiple: return "blaschke_multiple";
  }
  return "unknown";
}

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "empty complex literal");
  if (s.front() == '(') {
    if (s.back() != ')') throw Error(ErrorCode::kInvalidArgument, "unbalanced '(' in " + raw);
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
      return {parse_real(s.substr(1, s.size() - 2)), 0.0};
    }
    return {parse_real(s.substr(1, comma - 1)),
            parse_real(s.substr(comma + 1, s.size() - comma - 2))};
  }
  if (s.back() != 'i') return {parse_real(s), 0.0};

  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_imag_part(s)};
  return {parse_real(s.substr(0, split)), parse_imag_part(s.substr(split))};
}

AnalyticTestFunction::AnalyticTestFunction(std::string name, FunctionKind kind, Map value,
                                           Map derivative, Map density)
    : name_(std::move(name)),
      kind_(kind),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      density_(std::move(density)) {}

BoundaryGridFunction AnalyticTestFunction::boundary_samples(std::size_t resolution) const {
  return BoundaryGridFunction::sample(value_, resolution);
}

BoundaryGridFunction AnalyticTestFunction::density_samples(std::size_t resolution) const {
  return BoundaryGridFunction::sample([this](Complex t) { return density(t); }, resolution);
}

namespace corpus {

AnalyticTestFunction constant(Complex c) {
  return {c == Complex{1.0, 0.0} ? "e0" : "const(" + format_complex(c) + ")",
          FunctionKind::kRational, [c](Complex) { return c; }, [](Complex) { return Complex{}; }};
}

AnalyticTestFunction power(int m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "power needs m >= 0");
  if (m == 0) return constant();
  return {"power(" + std::to_string(m) + ")", FunctionKind::kSchur,
          [m](Complex z) { return std::pow(z, m); },
          [m](Complex z) { return static_cast<double>(m) * std::pow(z, m - 1); }};
}

AnalyticTestFunction mobius(Complex alpha) {
  if (!(std::abs(alpha) < 1.0)) throw Error(ErrorCode::kInvalidArgument, "mobius needs |alpha| < 1");
  const std::string name = alpha == Complex{} ? "w0" : "mobius(" + format_complex(alpha) + ")";
  return {name, FunctionKind::kSchur,
          [alpha](Complex z) { return (z - alpha) / (1.0 - z * std::conj(alpha)); },
          [alpha](Complex z) {
            const Complex den = 1.0 - z * std::conj(alpha);
            return (1.0 - std::norm(alpha)) / (den * den);
          }};
}

AnalyticTestFunction rational(std::string name, std::vector<Complex> poly,
                              std::vector<Complex> inverse_poles,
                              std::vector<Complex> residues) {
  if (inverse_poles.size() != residues.size()) {
    throw Error(ErrorCode::kInvalidArgument, "rational: poles and residues differ in length");
  }
  for (Complex c : inverse_poles) {
    if (!(std::abs(c) < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "rational: pole inside the closed disc");
    }
  }
  auto data = std::make_shared<const std::tuple<std::vector<Complex>, std::vector<Complex>,
                                                std::vector<Complex>>>(
      std::move(poly), std::move(inverse_poles), std::move(residues));
  auto value = [data](Complex z) {
    const auto& [p, c, r] = *data;
    Complex acc{};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
    for (std::size_t i = 0; i < c.size(); ++i) acc += r[i] / (1.0 - c[i] * z);
    return acc;
  };
  auto derivative = [data](Complex z) {
    const auto& [p, c, r] = *data;
    Complex acc{};
    for (std::size_t k = p.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * p[k];
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Complex den = 1.0 - c[i] * z;
      acc += r[i] * c[i] / (den * den);
    }
    return acc;
  };
  return {std::move(name), FunctionKind::kRational, value, derivative};
}

AnalyticTestFunction mobius_product(std::vector<Complex> alphas, Complex scale) {
  std::string name = "mobius_product[";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(std::abs(alphas[i]) < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "mobius_product needs |alpha| < 1");
    }
    name += (i ? "," : "") + format_complex(alphas[i]);
  }
  name += "]";
  PointSequence seq(alphas);
  const std::size_t n = seq.size();
  return {name, FunctionKind::kSchur,
          [seq, n, scale](Complex z) { return scale * eval_blaschke(seq, n, z).value; },
          [seq, n, scale](Complex z) { return scale * eval_blaschke(seq, n, z).derivative; }};
}

AnalyticTestFunction blaschke_multiple(const TMBasis& basis, Complex scale, Complex alpha) {
  const auto w = mobius(alpha);
  std::ostringstream name;
  name << "blaschke_multiple(n=" << basis.order() << ",alpha=" << format_complex(alpha) << ")";
  return {name.str(), FunctionKind::kBlaschkeMultiple,
          [basis, scale, w](Complex z) { return scale * basis.blaschke(z).value * w.value(z); },
          [basis, scale, w](Complex z) {
            const BlaschkeEval b = basis.blaschke(z);
            return scale * (b.derivative * w.value(z) + b.value * w.derivative(z));
          }};
}

AnalyticTestFunction trig_density(std::string name, std::vector<Complex> coefficients,
                                  int lowest_degree) {
  // Analytic part keeps frequencies >= 0.
  std::vector<Complex> analytic;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const int degree = static_cast<int>(k) + lowest_degree;
    if (degree >= 0) {
      if (analytic.size() <= static_cast<std::size_t>(degree)) analytic.resize(degree + 1);
      analytic[degree] = coefficients[k];
    }
  }
  auto poly = std::make_shared<const std::vector<Complex>>(std::move(analytic));
  auto coeffs = std::make_shared<const std::vector<Complex>>(std::move(coefficients));
  return {std::move(name), FunctionKind::kCauchyTransform,
          [poly](Complex z) {
            Complex acc{};
            for (std::size_t k = poly->size(); k-- > 0;) acc = acc * z + (*poly)[k];
            return acc;
          },
          [poly](Complex z) {
            Complex acc{};
            for (std::size_t k = poly->size(); k-- > 1;) {
              acc = acc * z + static_cast<double>(k) * (*poly)[k];
            }
            return acc;
          },
          [coeffs, lowest_degree](Complex t) {
            // t is on the circle, so t^{-1} = conj(t).
            Complex acc{};
            for (std::size_t k = coeffs->size(); k-- > 0;) acc = acc * t + (*coeffs)[k];
            const Complex shift = lowest_degree >= 0 ? std::pow(t, lowest_degree)
                                                     : std::pow(std::conj(t), -lowest_degree);
            return acc * shift;
          }};
}

AnalyticTestFunction random_density(std::uint64_t seed, int degree, std::size_t resolution,
                                    double sup_norm) {
  if (degree < 0) throw Error(ErrorCode::kInvalidArgument, "random_density needs degree >= 0");
  std::mt19937_64 gen(seed);
  std::vector<Complex> c(2 * static_cast<std::size_t>(degree) + 1);
  for (Complex& x : c) {
    const double re = symmetric_uniform(gen);
    const double im = symmetric_uniform(gen);
    x = {re, im};
  }
  const auto raw = trig_density("", c, -degree);
  double peak = 0.0;
  for (std::size_t j = 0; j < resolution; ++j) {
    peak = std::max(peak, std::abs(raw.density(BoundaryGridFunction::node(j, resolution))));
  }
  for (Complex& x : c) x *= sup_norm / peak;
  return trig_density("random_density(seed=" + std::to_string(seed) + ")", std::move(c), -degree);
}

std::vector<AnalyticTestFunction> rational_members() {
  const Complex i{0.0, 1.0};
  return {
      constant(),
      mobius(0.0),
      power(3),
      mobius(0.3),
      mobius(-0.4 + 0.5 * i),
      rational("pole(0.6)", {}, {0.6}, {1.0}),
      rational("two_poles", {}, {0.7 * i, -0.5}, {0.5, 0.3}),
      rational("cubic", {1.0, -2.0, 0.5, i}, {}, {}),
      rational("poly_plus_pole", {2.0, 0.0, -1.0}, {std::polar(0.8, 1.0)}, {0.8}),
      mobius_product({0.5 * i, -0.3}),
  };
}

std::vector<AnalyticTestFunction> schur_members() {
  const Complex i{0.0, 1.0};
  return {
      constant(),
      constant(std::polar(0.7, 2.0)),
      mobius(0.0),
      power(2),
      power(5),
      mobius(0.3),
      mobius(-0.6 + 0.2 * i),
      mobius_product({0.5 * i, -0.3}),
      mobius_product({0.8, 0.8, -0.2 * i}, std::polar(1.0, 0.4)),
      rational("half_one_plus_z", {0.5, 0.5}, {}, {}),
      rational("pole_scaled", {}, {0.5}, {0.5}),
  };
}

std::vector<AnalyticTestFunction> full(std::uint64_t seed) {
  auto members = rational_members();
  const Complex i{0.0, 1.0};
  members.push_back(trig_density("density_cos", {0.5, 0.0, 0.5}, -1));
  members.push_back(trig_density("density_mixed", {0.25 * i, 0.25, 0.25, -0.25}, -2));
  for (std::uint64_t k = 0; k < 3; ++k) members.push_back(random_density(seed + k, 4, 1024));
  return members;
}

AnalyticTestFunction by_name(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "e0") return constant();
  if (spec == "w0" || spec == "identity") return mobius(0.0);
  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') {
    throw Error(ErrorCode::kInvalidArgument, "unknown function '" + spec + "'");
  }
  const std::string head = spec.substr(0, open);
  const std::string arg = spec.substr(open + 1, spec.size() - open - 2);
  if (head == "power") {
    const double m = parse_real(trim(arg));
    if (m < 0 || m != std::floor(m)) throw Error(ErrorCode::kInvalidArgument, "power(m) needs integer m >= 0");
    return power(static_cast<int>(m));
  }
  if (head == "mobius") return mobius(parse_complex(arg));
  if (head == "const") return constant(parse_complex(arg));
  if (head == "pole") {
    const Complex c = parse_complex(arg);
    return rational("pole(" + format_complex(c) + ")", {}, {c}, {1.0});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown function '" + spec + "'");
}

}  // namespace corpus
}  // namespace tmfejer
