#include "tmfejer/tm_basis.hpp"

#include <cmath>
#include <string>

#include "tmfejer/errors.hpp"

namespace tmfejer {
namespace {

constexpr double kCircleTolerance = 1e-10;
constexpr double kPoleTolerance = 1e-12;

Complex checked_denominator(Complex z, Complex aj) {
  const Complex den = 1.0 - z * std::conj(aj);
  if (std::abs(den) < kPoleTolerance) {
    throw Error(ErrorCode::kPoleProximity, "evaluation point hits the pole 1/conj(a_k)");
  }
  return den;
}

}  // namespace

TMBasis::TMBasis(PointSequence sequence, std::size_t order)
    : sequence_(std::move(sequence)), order_(order) {
  if (order_ > sequence_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "basis order " + std::to_string(order_) + " exceeds sequence length " +
                    std::to_string(sequence_.size()));
  }
}

void TMBasis::eval_all(Complex z, std::span<Complex> values, std::span<Complex> derivs) const {
  const bool want_derivs = !derivs.empty();
  Complex b{1.0, 0.0};   // B_k(z)
  Complex db{};          // B_k'(z)
  for (std::size_t k = 0; k < order_; ++k) {
    const Complex ak = sequence_[k];
    const Complex den = checked_denominator(z, ak);
    const double scale = std::sqrt(1.0 - std::norm(ak));
    values[k] = scale / den * b;
    if (want_derivs) derivs[k] = scale * (std::conj(ak) * b / (den * den) + db / den);

    // Advance to B_{k+1} = B_k * (z - a_k)/(1 - z conj(a_k)).
    const Complex factor = (z - ak) / den;
    const Complex factor_slope = (1.0 - std::norm(ak)) / (den * den);
    db = db * factor + b * factor_slope;
    b *= factor;
  }
}

Complex TMBasis::phi(int k, Complex z) const {
  const auto n = static_cast<long long>(order_);
  if (k >= n || k < -n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "phi index " + std::to_string(k) + " outside [-" + std::to_string(n) + ", " +
                    std::to_string(n) + ")");
  }
  if (k < 0) {
    if (std::abs(std::abs(z) - 1.0) > kCircleTolerance) {
      throw Error(ErrorCode::kExtendedOffCircle,
                  "negative-index functions are defined on the unit circle only");
    }
    return std::conj(z * phi(-k - 1, z));
  }
  const auto idx = static_cast<std::size_t>(k);
  const Complex ak = sequence_[idx];
  return std::sqrt(1.0 - std::norm(ak)) / checked_denominator(z, ak) *
         eval_blaschke(sequence_, idx, z).value;
}

Complex TMBasis::phi_derivative(std::size_t k, Complex z) const {
  if (k >= order_) {
    throw Error(ErrorCode::kIndexOutOfRange, "phi derivative index " + std::to_string(k));
  }
  const Complex ak = sequence_[k];
  const Complex den = checked_denominator(z, ak);
  const BlaschkeEval bk = eval_blaschke(sequence_, k, z);
  return std::sqrt(1.0 - std::norm(ak)) *
         (std::conj(ak) * bk.value / (den * den) + bk.derivative / den);
}

Complex eval_phi(const TMBasis& basis, int k, Complex z) { return basis.phi(k, z); }

Complex cd_kernel(const TMBasis& basis, Complex z, Complex t) {
  const Complex den = 1.0 - z * std::conj(t);
  if (std::abs(den) < kPoleTolerance) {
    throw Error(ErrorCode::kDiagonalSingularity,
                "z conj(t) = 1; use cd_kernel_diagonal on the circle");
  }
  const Complex bz = basis.blaschke(z).value;
  const Complex bt = basis.blaschke(t).value;
  return (1.0 - bz * std::conj(bt)) / den;
}

double cd_kernel_diagonal(const TMBasis& basis, Complex t) {
  if (std::abs(std::abs(t) - 1.0) > kCircleTolerance) {
    throw Error(ErrorCode::kInvalidArgument, "cd_kernel_diagonal requires |t| = 1");
  }
  return boundary_derivative_modulus(basis.sequence(), basis.order(), std::arg(t));
}

}  // namespace tmfejer
