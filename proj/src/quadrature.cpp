#include "tmfejer/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "tmfejer/errors.hpp"

namespace tmfejer {
namespace {

constexpr std::size_t kAdaptiveStart = 256;
constexpr std::size_t kAdaptiveCap = std::size_t{1} << 20;
constexpr std::size_t kDefaultCap = std::size_t{1} << 22;

template <typename T>
T tree_sum(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return tree_sum(v.first(half)) + tree_sum(v.subspan(half));
}

}  // namespace

bool is_valid_resolution(std::size_t n) {
  return n >= BoundaryGridFunction::kMinResolution && std::has_single_bit(n);
}

std::size_t round_up_resolution(std::size_t n) {
  return std::bit_ceil(std::max(n, BoundaryGridFunction::kMinResolution));
}

std::size_t default_resolution(std::size_t order, double max_modulus) {
  double want = std::max(4096.0, 64.0 * static_cast<double>(order));
  if (max_modulus > 0.0) want = std::max(want, 64.0 / (1.0 - max_modulus));
  want = std::min(want, static_cast<double>(kDefaultCap));
  return round_up_resolution(static_cast<std::size_t>(want));
}

BoundaryGridFunction::BoundaryGridFunction(std::vector<Complex> samples)
    : samples_(std::move(samples)) {
  if (!is_valid_resolution(samples_.size())) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid resolution " + std::to_string(samples_.size()) +
                    " must be a power of two >= 16");
  }
}

double BoundaryGridFunction::angle(std::size_t j, std::size_t resolution) {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(resolution);
}

Complex BoundaryGridFunction::node(std::size_t j, std::size_t resolution) {
  // Exact at the quarter points so t = -1, +-i are hit without rounding.
  if (4 * j % resolution == 0) {
    switch (4 * j / resolution) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, angle(j, resolution));
}

BoundaryGridFunction BoundaryGridFunction::sample(const std::function<Complex(Complex)>& f,
                                                  std::size_t resolution) {
  if (!is_valid_resolution(resolution)) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid resolution " + std::to_string(resolution) +
                    " must be a power of two >= 16");
  }
  std::vector<Complex> samples(resolution);
  for (std::size_t j = 0; j < resolution; ++j) samples[j] = f(node(j, resolution));
  return BoundaryGridFunction(std::move(samples));
}

Complex pairwise_sum(std::span<const Complex> values) { return tree_sum(values); }
double pairwise_sum(std::span<const double> values) { return tree_sum(values); }

Complex integrate(const BoundaryGridFunction& f) {
  return pairwise_sum(f.samples()) / static_cast<double>(f.resolution());
}

AdaptiveIntegral adaptive_integrate(const std::function<Complex(double)>& f, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");

  // Nested grids: each refinement only evaluates the new odd nodes.
  std::vector<Complex> samples(kAdaptiveStart);
  for (std::size_t j = 0; j < kAdaptiveStart; ++j) {
    samples[j] = f(BoundaryGridFunction::angle(j, kAdaptiveStart));
  }
  Complex previous = pairwise_sum(samples) / static_cast<double>(kAdaptiveStart);
  Complex sum_even = pairwise_sum(samples);

  for (std::size_t n = 2 * kAdaptiveStart; n <= kAdaptiveCap; n *= 2) {
    std::vector<Complex> odd(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
      odd[j] = f(BoundaryGridFunction::angle(2 * j + 1, n));
    }
    const Complex sum = sum_even + pairwise_sum(odd);
    const Complex current = sum / static_cast<double>(n);
    if (std::abs(current - previous) < tol) return {current, n};
    previous = current;
    sum_even = sum;
  }
  throw Error(ErrorCode::kNoConvergence,
              "trapezoid rule did not settle below tolerance by N = 2^20");
}

NormReport norms(const BoundaryGridFunction& f) {
  const std::size_t n = f.resolution();
  std::vector<double> mod(n);
  std::vector<double> sq(n);
  NormReport r;
  for (std::size_t j = 0; j < n; ++j) {
    mod[j] = std::abs(f[j]);
    sq[j] = mod[j] * mod[j];
    r.sup_norm = std::max(r.sup_norm, mod[j]);
  }
  r.l1_norm = pairwise_sum(mod) / static_cast<double>(n);
  r.l2_norm = std::sqrt(pairwise_sum(sq) / static_cast<double>(n));
  return r;
}

}  // namespace tmfejer
