#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tmfejer/functions.hpp"
#include "tmfejer/quadrature.hpp"
#include "tmfejer/tm_basis.hpp"

namespace tmfejer {

/// TM Fourier coefficients <f, phi_k> for k in [-n+1, n-1] (negative part optional).
class CoefficientVector {
 public:
  CoefficientVector(std::size_t order, bool has_negative);

  std::size_t order() const noexcept { return order_; }
  bool has_negative() const noexcept { return has_negative_; }
  int min_index() const noexcept;
  int max_index() const noexcept { return static_cast<int>(order_) - 1; }

  Complex operator[](int k) const;
  Complex& at(int k);

  /// sum |c_k|^2 over stored indices.
  double energy() const;

 private:
  std::size_t slot(int k) const;

  std::size_t order_;
  bool has_negative_;
  std::vector<Complex> entries_;
};

CoefficientVector coefficients(const BoundaryGridFunction& f, const TMBasis& basis,
                               bool include_negative);

enum class PartialSumKind { kOneSided, kSymmetric };

/// One-sided: sum_{0<=k<m} c_k phi_k(z). Symmetric: sum_{-m<k<m}, circle only.
Complex partial_sum(const CoefficientVector& coeffs, const TMBasis& basis, std::size_t m,
                    Complex z, PartialSumKind kind = PartialSumKind::kOneSided);

/// Derivative of the one-sided partial sum.
Complex partial_sum_derivative(const CoefficientVector& coeffs, const TMBasis& basis,
                               std::size_t m, Complex z);

/// Cesaro (C,1) mean sum_{|k|<n} (1 - |k|/n) c_k phi_k(t) of the extended series.
Complex cesaro_mean(const CoefficientVector& coeffs, const TMBasis& basis, std::size_t n,
                    Complex t);

/// Closed form 1 + (1/n) sum_{k=1}^{n} prod_{j<k} a_j for sup |sigma_n(e_0)| stated
/// for real 0 < a_k < 1. It is an upper bound; the true sup falls short for n >= 2.
double cesaro_e0_closed_form(const PointSequence& a, std::size_t n);

/// Cesaro mean of e_0 on the circle, 1 - (1/n) sum_{k=1}^n conj(B_k(0)) B_k(t).
Complex cesaro_e0(const PointSequence& a, std::size_t n, Complex t);

/// Fejer-type kernel |(B_n(t) - B_n(z))/(t - z)|^2 / |B_n'(z)| for t, z on the circle.
/// The divided difference is evaluated by telescoping, so t = z gives |B_n'(z)|.
double fejer_kernel(const TMBasis& basis, Complex t, Complex z);

/// The same kernel in angular form
/// sin^2(int_x^y gamma_n) / (2 gamma_n(x) sin^2((y - x)/2)), x = arg z, y = arg t.
double fejer_kernel_angular(const TMBasis& basis, double y, double x);

/// sigma^+_{n,phi} for a holomorphic test function. The partial sums come from
/// TM coefficients of the density, computed once at construction.
class SigmaPositive {
 public:
  SigmaPositive(const AnalyticTestFunction& f, TMBasis basis, std::size_t resolution = 0);

  /// Throws CriticalPoint where B_n' vanishes but B_n does not.
  Complex operator()(Complex z) const;

  Complex partial_sum(Complex z) const;
  Complex partial_sum_derivative(Complex z) const;

  const TMBasis& basis() const noexcept { return basis_; }
  const CoefficientVector& coefficients() const noexcept { return coeffs_; }

 private:
  AnalyticTestFunction f_;
  TMBasis basis_;
  CoefficientVector coeffs_;
};

Complex sigma_positive(const AnalyticTestFunction& f, const TMBasis& basis, Complex z);

/// Closed form of sigma^+(w_alpha)(z).
Complex sigma_positive_mobius(const TMBasis& basis, Complex alpha, Complex z);

/// Rusak's positive operator sigma_{n,phi} on a fixed boundary grid.
class FejerOperator {
 public:
  FejerOperator(TMBasis basis, std::size_t resolution);

  const TMBasis& basis() const noexcept { return basis_; }
  std::size_t resolution() const noexcept { return resolution_; }

  /// sigma_{n,phi}(f)(z) for z on the circle by quadrature against the kernel.
  Complex at(const BoundaryGridFunction& f, Complex z) const;

  /// sigma_{n,phi}(f) at every grid node.
  BoundaryGridFunction apply(const BoundaryGridFunction& f) const;

 private:
  TMBasis basis_;
  std::size_t resolution_;
  std::vector<Complex> blaschke_;       // B_n(t_j)
  std::vector<double> derivative_abs_;  // |B_n'(t_j)|
};

/// sigma_{n,phi}(f)(z). For n = 0 returns the sample of f at z (z must be a node).
Complex sigma_rusak(const BoundaryGridFunction& f, const TMBasis& basis, Complex z);

/// delta_{n,phi}(f)(z) = f'(z) - B_n(z) int conj(t B_n(t)) mu(t)/(1 - conj(t) z)^2 dm(t),
/// holomorphic in the disc. Throws NearBoundary for |z| >= 1 - 1e-9.
Complex delta(const AnalyticTestFunction& f, const TMBasis& basis, Complex z,
              std::size_t resolution = 0);

/// delta_{n,phi}(.)(z) at a fixed point and basis; the quadrature weights
/// conj(t B_n(t))/(1 - conj(t) z)^2 are computed once and reused across functions.
class DeltaEvaluator {
 public:
  DeltaEvaluator(const TMBasis& basis, Complex z, std::size_t resolution = 0);

  Complex operator()(const AnalyticTestFunction& f) const;

  /// delta(f)(z) - f'(z), which only needs the density.
  Complex deviation(const AnalyticTestFunction& f) const;

  std::size_t resolution() const noexcept { return resolution_; }

 private:
  Complex z_;
  Complex blaschke_at_z_;
  bool order_zero_ = false;
  std::size_t resolution_ = 0;
  std::vector<Complex> weights_;
};

/// (B_n'/B_n)(f - sigma^+(f)) evaluated literally. Undefined at zeros of B_n.
Complex delta_quotient(const SigmaPositive& sigma, const AnalyticTestFunction& f, Complex z);

/// f_*(t) = e^{i theta} B_n(t) (t - z)/(1 - t conj(z)), the extremal member of the
/// unit-density Cauchy class at z.
AnalyticTestFunction extremal_voronovskaya(const TMBasis& basis, Complex z, double theta);

struct SchurBounds {
  double lower;
  double upper;
};

/// Pointwise bounds on sup over the Schur class of |f(z) - sigma^+(f)(z)|:
/// lower = |B_n/B_n'| (1 - |B_n|^2)/(1 - |z|^2), upper = lower + |B_n|^2.
SchurBounds schur_bounds(const TMBasis& basis, Complex z);

/// |B_n(z)|/(1 - |z|^2): the largest |delta(f)(z) - f'(z)| over unit densities.
double voronovskaya_bound(const TMBasis& basis, Complex z);

}  // namespace tmfejer
