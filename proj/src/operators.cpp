#include "tmfejer/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tmfejer/errors.hpp"

namespace tmfejer {
namespace {

constexpr double kCircleTolerance = 1e-10;
constexpr double kCriticalTolerance = 1e-12;
constexpr double kBoundaryMargin = 1e-9;
// Off-diagonal grid pairs closer than this use the telescoped divided difference.
constexpr double kNearDiagonal = 0.05;

void require_on_circle(Complex z, const char* what) {
  if (std::abs(std::abs(z) - 1.0) > kCircleTolerance) {
    throw Error(ErrorCode::kExtendedOffCircle, std::string(what) + " requires |z| = 1");
  }
}

std::size_t coefficient_resolution(const TMBasis& basis) {
  return default_resolution(basis.order(), basis.sequence().max_modulus(basis.order()));
}

// B_n/B_n' as 1/sum_j b_j'/b_j, which stays accurate where B_n and B_n' are
// both tiny (e.g. z^n near 0). Zero at the zeros of B_n.
Complex blaschke_ratio(const TMBasis& basis, Complex z) {
  const BlaschkeEval b = basis.blaschke(z);
  if (b.value == Complex{}) return {};
  if (std::abs(b.derivative) < kCriticalTolerance && std::abs(b.value) >= kCriticalTolerance) {
    throw Error(ErrorCode::kCriticalPoint, "B_n' vanishes at a non-zero of B_n");
  }
  Complex log_derivative{};
  for (std::size_t k = 0; k < basis.order(); ++k) {
    const Complex a = basis.sequence()[k];
    log_derivative += (1.0 - std::norm(a)) / ((z - a) * (1.0 - z * std::conj(a)));
  }
  return 1.0 / log_derivative;
}

}  // namespace

// ---------------------------------------------------------------------------
// Coefficients and partial sums

CoefficientVector::CoefficientVector(std::size_t order, bool has_negative)
    : order_(order),
      has_negative_(has_negative),
      entries_(order == 0 ? 0 : (has_negative ? 2 * order - 1 : order)) {}

int CoefficientVector::min_index() const noexcept {
  return has_negative_ ? 1 - static_cast<int>(order_) : 0;
}

std::size_t CoefficientVector::slot(int k) const {
  if (order_ == 0 || k < min_index() || k > max_index()) {
    throw Error(ErrorCode::kIndexOutOfRange, "coefficient index " + std::to_string(k));
  }
  return static_cast<std::size_t>(k - min_index());
}

Complex CoefficientVector::operator[](int k) const { return entries_[slot(k)]; }
Complex& CoefficientVector::at(int k) { return entries_[slot(k)]; }

double CoefficientVector::energy() const {
  double e = 0.0;
  for (const Complex& c : entries_) e += std::norm(c);
  return e;
}

CoefficientVector coefficients(const BoundaryGridFunction& f, const TMBasis& basis,
                               bool include_negative) {
  const std::size_t n = basis.order();
  const std::size_t grid = f.resolution();
  CoefficientVector out(n, include_negative);
  if (n == 0) return out;

  // products[k][j] = f(t_j) conj(phi_k(t_j)); negative indices use
  // conj(phi_{-m}(t)) = t phi_{m-1}(t).
  const std::size_t rows = include_negative ? 2 * n - 1 : n;
  std::vector<std::vector<Complex>> products(rows, std::vector<Complex>(grid));
  std::vector<Complex> phi(n);
  for (std::size_t j = 0; j < grid; ++j) {
    const Complex t = BoundaryGridFunction::node(j, grid);
    basis.eval_all(t, phi);
    for (std::size_t k = 0; k < n; ++k) {
      products[include_negative ? k + n - 1 : k][j] = f[j] * std::conj(phi[k]);
    }
    if (include_negative) {
      for (std::size_t m = 1; m < n; ++m) products[n - 1 - m][j] = f[j] * t * phi[m - 1];
    }
  }
  for (int k = out.min_index(); k <= out.max_index(); ++k) {
    out.at(k) = pairwise_sum(products[static_cast<std::size_t>(k - out.min_index())]) /
                static_cast<double>(grid);
  }
  return out;
}

Complex partial_sum(const CoefficientVector& coeffs, const TMBasis& basis, std::size_t m,
                    Complex z, PartialSumKind kind) {
  if (m > coeffs.order() || m > basis.order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "partial sum length " + std::to_string(m));
  }
  if (m == 0) return {};
  std::vector<Complex> phi(m);
  TMBasis(basis.sequence(), m).eval_all(z, phi);
  Complex sum{};
  for (std::size_t k = 0; k < m; ++k) sum += coeffs[static_cast<int>(k)] * phi[k];
  if (kind == PartialSumKind::kSymmetric) {
    if (!coeffs.has_negative()) {
      throw Error(ErrorCode::kInvalidArgument, "symmetric partial sum needs negative coefficients");
    }
    require_on_circle(z, "symmetric partial sum");
    for (std::size_t k = 1; k < m; ++k) {
      sum += coeffs[-static_cast<int>(k)] * std::conj(z * phi[k - 1]);
    }
  }
  return sum;
}

Complex partial_sum_derivative(const CoefficientVector& coeffs, const TMBasis& basis,
                               std::size_t m, Complex z) {
  if (m > coeffs.order() || m > basis.order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "partial sum length " + std::to_string(m));
  }
  if (m == 0) return {};
  std::vector<Complex> phi(m);
  std::vector<Complex> dphi(m);
  TMBasis(basis.sequence(), m).eval_all(z, phi, dphi);
  Complex sum{};
  for (std::size_t k = 0; k < m; ++k) sum += coeffs[static_cast<int>(k)] * dphi[k];
  return sum;
}

Complex cesaro_mean(const CoefficientVector& coeffs, const TMBasis& basis, std::size_t n,
                    Complex t) {
  require_on_circle(t, "cesaro mean");
  if (n == 0 || n > coeffs.order() || n > basis.order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "cesaro order " + std::to_string(n));
  }
  if (!coeffs.has_negative()) {
    throw Error(ErrorCode::kInvalidArgument, "cesaro mean needs the extended coefficients");
  }
  std::vector<Complex> phi(n);
  TMBasis(basis.sequence(), n).eval_all(t, phi);
  const double inv_n = 1.0 / static_cast<double>(n);
  Complex sum = coeffs[0] * phi[0];
  for (std::size_t k = 1; k < n; ++k) {
    const double w = 1.0 - static_cast<double>(k) * inv_n;
    sum += w * (coeffs[static_cast<int>(k)] * phi[k] +
                coeffs[-static_cast<int>(k)] * std::conj(t * phi[k - 1]));
  }
  return sum;
}

double cesaro_e0_closed_form(const PointSequence& a, std::size_t n) {
  if (n == 0 || n > a.size()) throw Error(ErrorCode::kIndexOutOfRange, "cesaro order");
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    prod *= a[k].real();
    sum += prod;
  }
  return 1.0 + sum / static_cast<double>(n);
}

Complex cesaro_e0(const PointSequence& a, std::size_t n, Complex t) {
  require_on_circle(t, "cesaro mean");
  if (n == 0 || n > a.size()) throw Error(ErrorCode::kIndexOutOfRange, "cesaro order");
  Complex b0{1.0, 0.0};
  Complex bt{1.0, 0.0};
  Complex sum{};
  for (std::size_t k = 0; k < n; ++k) {
    b0 *= -a[k];
    bt *= (t - a[k]) / (1.0 - t * std::conj(a[k]));
    sum += std::conj(b0) * bt;
  }
  return 1.0 - sum / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Kernel

double fejer_kernel(const TMBasis& basis, Complex t, Complex z) {
  require_on_circle(t, "fejer kernel");
  require_on_circle(z, "fejer kernel");
  if (basis.order() == 0) return 1.0;
  const Complex slope =
      blaschke_divided_difference(basis.sequence(), basis.order(), t, z);
  return std::norm(slope) / boundary_derivative_modulus(basis.sequence(), basis.order(),
                                                        std::arg(z));
}

double fejer_kernel_angular(const TMBasis& basis, double y, double x) {
  if (basis.order() == 0) return 1.0;
  const double g = gamma_density(basis.sequence(), basis.order(), x);
  const double half = 0.5 * (y - x);
  const double s = std::sin(half);
  if (std::abs(s) < 1e-8) return 2.0 * g;  // diagonal limit |B_n'| = 2 gamma_n
  const double phase = std::sin(boundary_phase(basis.sequence(), basis.order(), x, y));
  return phase * phase / (2.0 * g * s * s);
}

// ---------------------------------------------------------------------------
// sigma^+

SigmaPositive::SigmaPositive(const AnalyticTestFunction& f, TMBasis basis,
                             std::size_t resolution)
    : f_(f), basis_(std::move(basis)), coeffs_(basis_.order(), false) {
  if (basis_.order() == 0) return;
  const std::size_t grid = resolution ? resolution : coefficient_resolution(basis_);
  coeffs_ = tmfejer::coefficients(f_.density_samples(grid), basis_, false);
}

Complex SigmaPositive::partial_sum(Complex z) const {
  return tmfejer::partial_sum(coeffs_, basis_, basis_.order(), z);
}

Complex SigmaPositive::partial_sum_derivative(Complex z) const {
  return tmfejer::partial_sum_derivative(coeffs_, basis_, basis_.order(), z);
}

Complex SigmaPositive::operator()(Complex z) const {
  const std::size_t n = basis_.order();
  if (n == 0) return f_.value(z);
  std::vector<Complex> phi(n);
  std::vector<Complex> dphi(n);
  basis_.eval_all(z, phi, dphi);
  Complex s{};
  Complex ds{};
  for (std::size_t k = 0; k < n; ++k) {
    s += coeffs_[static_cast<int>(k)] * phi[k];
    ds += coeffs_[static_cast<int>(k)] * dphi[k];
  }
  return s - blaschke_ratio(basis_, z) * ds;
}

Complex sigma_positive(const AnalyticTestFunction& f, const TMBasis& basis, Complex z) {
  return SigmaPositive(f, basis)(z);
}

Complex sigma_positive_mobius(const TMBasis& basis, Complex alpha, Complex z) {
  if (basis.order() == 0) return (z - alpha) / (1.0 - z * std::conj(alpha));
  const BlaschkeEval b = basis.blaschke(z);
  const Complex ratio = blaschke_ratio(basis, z);
  const Complex den = 1.0 - z * std::conj(alpha);
  const Complex b_alpha = basis.blaschke(alpha).value;
  return (z - alpha) / den -
         (1.0 - std::norm(alpha)) / (den * den) * ratio * (1.0 - std::conj(b_alpha) * b.value);
}

// ---------------------------------------------------------------------------
// sigma_{n,phi}

FejerOperator::FejerOperator(TMBasis basis, std::size_t resolution)
    : basis_(std::move(basis)),
      resolution_(resolution),
      blaschke_(resolution),
      derivative_abs_(resolution) {
  if (!is_valid_resolution(resolution)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid grid resolution " + std::to_string(resolution));
  }
  for (std::size_t j = 0; j < resolution_; ++j) {
    const Complex t = BoundaryGridFunction::node(j, resolution_);
    blaschke_[j] = basis_.blaschke(t).value;
    derivative_abs_[j] = boundary_derivative_modulus(basis_.sequence(), basis_.order(),
                                                     BoundaryGridFunction::angle(j, resolution_));
  }
}

Complex FejerOperator::at(const BoundaryGridFunction& f, Complex z) const {
  require_on_circle(z, "sigma_{n,phi}");
  if (f.resolution() != resolution_) {
    throw Error(ErrorCode::kInvalidArgument, "grid function resolution does not match operator");
  }
  if (basis_.order() == 0) return sigma_rusak(f, basis_, z);
  const PointSequence& a = basis_.sequence();
  const std::size_t n = basis_.order();
  const Complex bz = basis_.blaschke(z).value;
  const double inv_dz = 1.0 / boundary_derivative_modulus(a, n, std::arg(z));
  std::vector<Complex> terms(resolution_);
  for (std::size_t j = 0; j < resolution_; ++j) {
    const Complex t = BoundaryGridFunction::node(j, resolution_);
    const double gap = std::abs(t - z);
    const double quotient = gap < kNearDiagonal
                                ? std::norm(blaschke_divided_difference(a, n, t, z))
                                : std::norm(blaschke_[j] - bz) / (gap * gap);
    terms[j] = f[j] * (quotient * inv_dz);
  }
  return pairwise_sum(terms) / static_cast<double>(resolution_);
}

BoundaryGridFunction FejerOperator::apply(const BoundaryGridFunction& f) const {
  if (f.resolution() != resolution_) {
    throw Error(ErrorCode::kInvalidArgument, "grid function resolution does not match operator");
  }
  if (basis_.order() == 0) return f;
  const PointSequence& a = basis_.sequence();
  const std::size_t n = basis_.order();
  const std::size_t grid = resolution_;

  // |t_j - t_k|^2 depends only on the index offset.
  std::vector<double> gap2(grid);
  for (std::size_t d = 0; d < grid; ++d) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(d) / static_cast<double>(grid));
    gap2[d] = 4.0 * s * s;
  }
  const double near2 = kNearDiagonal * kNearDiagonal;

  std::vector<Complex> out(grid);
  std::vector<Complex> terms(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const Complex z = BoundaryGridFunction::node(k, grid);
    const double inv_dz = 1.0 / derivative_abs_[k];
    for (std::size_t j = 0; j < grid; ++j) {
      const std::size_t d = j >= k ? j - k : j + grid - k;
      const double quotient =
          gap2[d] < near2
              ? std::norm(blaschke_divided_difference(a, n, BoundaryGridFunction::node(j, grid), z))
              : std::norm(blaschke_[j] - blaschke_[k]) / gap2[d];
      terms[j] = f[j] * (quotient * inv_dz);
    }
    out[k] = pairwise_sum(terms) / static_cast<double>(grid);
  }
  return BoundaryGridFunction(std::move(out));
}

Complex sigma_rusak(const BoundaryGridFunction& f, const TMBasis& basis, Complex z) {
  require_on_circle(z, "sigma_{n,phi}");
  const std::size_t grid = f.resolution();
  if (basis.order() == 0) {
    double angle = std::arg(z);
    if (angle < 0) angle += 2.0 * std::numbers::pi;
    const double pos = angle / (2.0 * std::numbers::pi) * static_cast<double>(grid);
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) > 1e-9) {
      throw Error(ErrorCode::kInvalidArgument, "sigma_0 needs z on the sample grid");
    }
    return f[static_cast<std::size_t>(nearest) % grid];
  }
  const PointSequence& a = basis.sequence();
  const std::size_t n = basis.order();
  const double inv_dz = 1.0 / boundary_derivative_modulus(a, n, std::arg(z));
  std::vector<Complex> terms(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const Complex t = BoundaryGridFunction::node(j, grid);
    terms[j] = f[j] * (std::norm(blaschke_divided_difference(a, n, t, z)) * inv_dz);
  }
  return pairwise_sum(terms) / static_cast<double>(grid);
}

// ---------------------------------------------------------------------------
// delta and the extremal problems

DeltaEvaluator::DeltaEvaluator(const TMBasis& basis, Complex z, std::size_t resolution)
    : z_(z) {
  const double r = std::abs(z);
  if (r >= 1.0 - kBoundaryMargin) {
    throw Error(ErrorCode::kNearBoundary, "delta needs |z| < 1 - 1e-9");
  }
  order_zero_ = basis.order() == 0;
  if (order_zero_) return;
  blaschke_at_z_ = basis.blaschke(z).value;
  if (blaschke_at_z_ == Complex{}) return;

  resolution_ = resolution;
  if (resolution_ == 0) {
    resolution_ = std::max(coefficient_resolution(basis),
                           round_up_resolution(static_cast<std::size_t>(std::min(
                               64.0 / (1.0 - r), static_cast<double>(std::size_t{1} << 22)))));
  }
  weights_.resize(resolution_);
  const double inv_n = 1.0 / static_cast<double>(resolution_);
  for (std::size_t j = 0; j < resolution_; ++j) {
    const Complex t = BoundaryGridFunction::node(j, resolution_);
    const Complex den = 1.0 - std::conj(t) * z;
    weights_[j] = std::conj(t * basis.blaschke(t).value) / (den * den) * inv_n;
  }
}

Complex DeltaEvaluator::deviation(const AnalyticTestFunction& f) const {
  if (weights_.empty()) return {};
  std::vector<Complex> terms(resolution_);
  for (std::size_t j = 0; j < resolution_; ++j) {
    terms[j] = weights_[j] * f.density(BoundaryGridFunction::node(j, resolution_));
  }
  return -blaschke_at_z_ * pairwise_sum(terms);
}

Complex DeltaEvaluator::operator()(const AnalyticTestFunction& f) const {
  if (order_zero_) return {};
  // At an exact zero of B_n the weights are empty and delta = f'.
  return f.derivative(z_) + deviation(f);
}

Complex delta(const AnalyticTestFunction& f, const TMBasis& basis, Complex z,
              std::size_t resolution) {
  return DeltaEvaluator(basis, z, resolution)(f);
}

Complex delta_quotient(const SigmaPositive& sigma, const AnalyticTestFunction& f, Complex z) {
  if (sigma.basis().order() == 0) return {};
  const BlaschkeEval b = sigma.basis().blaschke(z);
  return b.derivative / b.value * (f.value(z) - sigma(z));
}

AnalyticTestFunction extremal_voronovskaya(const TMBasis& basis, Complex z, double theta) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::kInvalidArgument, "extremal needs |z| < 1");
  const Complex rot = std::polar(1.0, theta);
  const auto w = corpus::mobius(z);
  auto value = [basis, rot, w](Complex t) { return rot * basis.blaschke(t).value * w.value(t); };
  auto derivative = [basis, rot, w](Complex t) {
    const BlaschkeEval b = basis.blaschke(t);
    return rot * (b.derivative * w.value(t) + b.value * w.derivative(t));
  };
  return {"extremal_voronovskaya", FunctionKind::kCauchyTransform, value, derivative, value};
}

SchurBounds schur_bounds(const TMBasis& basis, Complex z) {
  const double mod_b = std::abs(basis.blaschke(z).value);
  const double lower =
      std::abs(blaschke_ratio(basis, z)) * (1.0 - mod_b * mod_b) / (1.0 - std::norm(z));
  return {lower, lower + mod_b * mod_b};
}

double voronovskaya_bound(const TMBasis& basis, Complex z) {
  return std::abs(basis.blaschke(z).value) / (1.0 - std::norm(z));
}

}  // namespace tmfejer
