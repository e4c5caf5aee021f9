#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tmfejer {

using Complex = std::complex<double>;

/// Zero sequence a = {a_k} of a Takenaka-Malmquist system, multiplicities
/// counted by repetition. Every point satisfies |a_k| < 1 - 1e-12.
class PointSequence {
 public:
  static constexpr double kMaxModulus = 1.0 - 1e-12;

  PointSequence() = default;
  explicit PointSequence(std::vector<Complex> points);

  static PointSequence zeros(std::size_t count);
  static PointSequence constant(Complex value, std::size_t count);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Complex& operator[](std::size_t k) const { return points_[k]; }
  std::span<const Complex> points() const noexcept { return points_; }

  /// Largest |a_k| over the first `count` points (0 when count is 0).
  double max_modulus(std::size_t count) const;

 private:
  std::vector<Complex> points_;
};

struct BlaschkeEval {
  Complex value;
  Complex derivative;
  std::size_t degree = 0;
};

/// B_n(z) = prod_{j<n} (z - a_j)/(1 - z conj(a_j)) and its derivative.
/// Throws PoleProximity if |1 - z conj(a_j)| < 1e-12.
BlaschkeEval eval_blaschke(const PointSequence& a, std::size_t n, Complex z);

/// Divided difference (B_n(t) - B_n(z))/(t - z) by telescoping over factors,
/// so it is free of cancellation and equals B_n'(z) at t = z.
Complex blaschke_divided_difference(const PointSequence& a, std::size_t n, Complex t,
                                    Complex z);

/// |B_n'(e^{i angle})| as the Frostman partial sum
/// sum_{k<n} (1 - |a_k|^2)/|1 - e^{-i angle} a_k|^2.
double boundary_derivative_modulus(const PointSequence& a, std::size_t n, double angle);

/// gamma_n(angle) = |B_n'(e^{i angle})| / 2, written with the Poisson kernel.
double gamma_density(const PointSequence& a, std::size_t n, double angle);

/// Integral of gamma_n over [from, to] (signed), i.e. half the increment of the
/// continuous boundary argument of B_n.
double boundary_phase(const PointSequence& a, std::size_t n, double from, double to);

/// Continuous argument theta_n(angle) with e^{i theta_n} = B_n(e^{i angle}).
/// Each factor contributes angle + 2 Arg(1 - a_j e^{-i angle}); the principal
/// Arg never wraps because Re(1 - a_j e^{-i angle}) > 0.
double boundary_argument(const PointSequence& a, std::size_t n, double angle);

}  // namespace tmfejer
