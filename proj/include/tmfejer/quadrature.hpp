#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tmfejer {

using Complex = std::complex<double>;

/// Samples of a function on the uniform grid t_j = exp(2 pi i j / N).
/// N is a power of two and at least 16 so grids nest under refinement.
class BoundaryGridFunction {
 public:
  static constexpr std::size_t kMinResolution = 16;

  explicit BoundaryGridFunction(std::vector<Complex> samples);

  static BoundaryGridFunction sample(const std::function<Complex(Complex)>& f,
                                     std::size_t resolution);

  static double angle(std::size_t j, std::size_t resolution);
  static Complex node(std::size_t j, std::size_t resolution);

  std::size_t resolution() const noexcept { return samples_.size(); }
  const Complex& operator[](std::size_t j) const { return samples_[j]; }
  std::span<const Complex> samples() const noexcept { return samples_; }

 private:
  std::vector<Complex> samples_;
};

bool is_valid_resolution(std::size_t n);

/// Smallest power of two >= max(n, 16).
std::size_t round_up_resolution(std::size_t n);

/// Default grid for TM computations of the given order:
/// max(4096, 64 n, 64/(1 - max|a_k|)) rounded up to a power of two, capped at 2^22.
std::size_t default_resolution(std::size_t order, double max_modulus = 0.0);

/// Pairwise (tree) sum; the summation order depends only on the length.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

/// Integral over the circle against normalized arc length: (1/N) sum f_j.
Complex integrate(const BoundaryGridFunction& f);

struct AdaptiveIntegral {
  Complex value;
  std::size_t resolution;
};

/// Doubles N from 256 until successive trapezoid values differ by < tol.
/// Throws NoConvergence once N would exceed 2^20.
AdaptiveIntegral adaptive_integrate(const std::function<Complex(double)>& f, double tol);

struct NormReport {
  double sup_norm = 0.0;
  double l1_norm = 0.0;
  double l2_norm = 0.0;
};

NormReport norms(const BoundaryGridFunction& f);

}  // namespace tmfejer
