#include "tmfejer/blaschke.hpp"

#include <cmath>
#include <string>

#include "tmfejer/errors.hpp"

namespace tmfejer {
namespace {

constexpr double kPoleTolerance = 1e-12;
constexpr double kZeroFallback = 1e-8;

void check_order(const PointSequence& a, std::size_t n) {
  if (n > a.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "order " + std::to_string(n) + " exceeds sequence length " +
                    std::to_string(a.size()));
  }
}

Complex checked_denominator(Complex z, Complex aj) {
  const Complex den = 1.0 - z * std::conj(aj);
  if (std::abs(den) < kPoleTolerance) {
    throw Error(ErrorCode::kPoleProximity, "evaluation point hits the pole 1/conj(a_j)");
  }
  return den;
}

// Difference quotient of a single factor: (b(t) - b(z))/(t - z).
Complex factor_slope(Complex aj, Complex den_t, Complex den_z) {
  return (1.0 - std::norm(aj)) / (den_t * den_z);
}

}  // namespace

PointSequence::PointSequence(std::vector<Complex> points) : points_(std::move(points)) {
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const double r = std::abs(points_[k]);
    if (!(r < kMaxModulus)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point a_" + std::to_string(k) + " has modulus " + std::to_string(r) +
                      " (must be < 1 - 1e-12)");
    }
  }
}

PointSequence PointSequence::zeros(std::size_t count) {
  return PointSequence(std::vector<Complex>(count, Complex{}));
}

PointSequence PointSequence::constant(Complex value, std::size_t count) {
  return PointSequence(std::vector<Complex>(count, value));
}

double PointSequence::max_modulus(std::size_t count) const {
  double r = 0.0;
  for (std::size_t k = 0; k < count && k < points_.size(); ++k) {
    r = std::max(r, std::abs(points_[k]));
  }
  return r;
}

BlaschkeEval eval_blaschke(const PointSequence& a, std::size_t n, Complex z) {
  check_order(a, n);
  BlaschkeEval out{Complex{1.0, 0.0}, Complex{}, n};
  if (n == 0) return out;

  Complex log_derivative{};
  bool near_zero = false;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex den = checked_denominator(z, a[j]);
    const Complex num = z - a[j];
    out.value *= num / den;
    if (std::abs(num) < kZeroFallback) {
      near_zero = true;
    } else {
      log_derivative += (1.0 - std::norm(a[j])) / (num * den);
    }
  }
  out.derivative = near_zero ? blaschke_divided_difference(a, n, z, z)
                             : out.value * log_derivative;
  return out;
}

Complex blaschke_divided_difference(const PointSequence& a, std::size_t n, Complex t,
                                    Complex z) {
  check_order(a, n);
  if (n == 0) return Complex{};

  // B(t) - B(z) = sum_j [prod_{i<j} b_i(t)] (b_j(t) - b_j(z)) [prod_{i>j} b_i(z)].
  std::vector<Complex> den_z(n);
  std::vector<Complex> suffix(n + 1, Complex{1.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) den_z[j] = checked_denominator(z, a[j]);
  for (std::size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] * (z - a[j]) / den_z[j];

  Complex prefix{1.0, 0.0};
  Complex sum{};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex den_t = checked_denominator(t, a[j]);
    sum += prefix * factor_slope(a[j], den_t, den_z[j]) * suffix[j + 1];
    prefix *= (t - a[j]) / den_t;
  }
  return sum;
}

double boundary_derivative_modulus(const PointSequence& a, std::size_t n, double angle) {
  check_order(a, n);
  const Complex t_bar = std::polar(1.0, -angle);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum += (1.0 - std::norm(a[k])) / std::norm(1.0 - t_bar * a[k]);
  }
  return sum;
}

double gamma_density(const PointSequence& a, std::size_t n, double angle) {
  check_order(a, n);
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "gamma_n needs n >= 1");
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = std::abs(a[k]);
    const double phase = r == 0.0 ? 0.0 : std::arg(a[k]);
    sum += (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(angle - phase) + r * r);
  }
  return 0.5 * sum;
}

double boundary_argument(const PointSequence& a, std::size_t n, double angle) {
  check_order(a, n);
  const Complex rot = std::polar(1.0, -angle);
  double theta = static_cast<double>(n) * angle;
  for (std::size_t j = 0; j < n; ++j) theta += 2.0 * std::arg(1.0 - a[j] * rot);
  return theta;
}

double boundary_phase(const PointSequence& a, std::size_t n, double from, double to) {
  check_order(a, n);
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "boundary phase needs n >= 1");
  if (from == to) return 0.0;
  // Per-factor increments; the linear part is exact and kept separate so that
  // long arcs do not lose relative accuracy.
  const Complex rot_to = std::polar(1.0, -to);
  const Complex rot_from = std::polar(1.0, -from);
  double bend = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    bend += std::arg(1.0 - a[j] * rot_to) - std::arg(1.0 - a[j] * rot_from);
  }
  return 0.5 * static_cast<double>(n) * (to - from) + bend;
}

}  // namespace tmfejer
