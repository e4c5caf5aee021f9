#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "tmfejer/blaschke.hpp"

namespace tmfejer {

/// Finite Takenaka-Malmquist system phi_0..phi_{n-1} generated by the first
/// n points of a sequence. The extended family phi_{-k}(t) = conj(t phi_{k-1}(t))
/// lives on the unit circle only.
class TMBasis {
 public:
  TMBasis(PointSequence sequence, std::size_t order);

  const PointSequence& sequence() const noexcept { return sequence_; }
  std::size_t order() const noexcept { return order_; }

  BlaschkeEval blaschke(Complex z) const { return eval_blaschke(sequence_, order_, z); }

  /// phi_k(z) for -order <= k < order.
  Complex phi(int k, Complex z) const;

  /// phi_k'(z) for 0 <= k < order.
  Complex phi_derivative(std::size_t k, Complex z) const;

  /// Fills values[k] = phi_k(z) (and derivs[k] = phi_k'(z) when non-empty)
  /// for k < order in one O(n) sweep.
  void eval_all(Complex z, std::span<Complex> values, std::span<Complex> derivs = {}) const;

 private:
  PointSequence sequence_;
  std::size_t order_;
};

Complex eval_phi(const TMBasis& basis, int k, Complex z);

/// Christoffel-Darboux kernel sum_{k<n} phi_k(z) conj(phi_k(t)) via the closed
/// form (1 - B_n(z) conj(B_n(t)))/(1 - z conj(t)).
/// Throws DiagonalSingularity if |1 - z conj(t)| < 1e-12.
Complex cd_kernel(const TMBasis& basis, Complex z, Complex t);

/// sum_{k<n} |phi_k(t)|^2 = |B_n'(t)| for |t| = 1.
double cd_kernel_diagonal(const TMBasis& basis, Complex t);

}  // namespace tmfejer
