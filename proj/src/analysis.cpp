#include "tmfejer/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tmfejer/errors.hpp"

namespace tmfejer {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_orders(const PointSequence& a, std::span<const std::size_t> orders) {
  if (orders.empty()) throw Error(ErrorCode::kInvalidArgument, "orders must be non-empty");
  for (std::size_t n : orders) {
    if (n > a.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "order " + std::to_string(n) + " exceeds sequence length " +
                      std::to_string(a.size()));
    }
  }
}

// The grid mean of |B_n'| must reproduce n; otherwise the kernel is unresolved.
std::size_t grid_for(const PointSequence& a, std::size_t n, std::size_t resolution) {
  const std::size_t grid = resolution ? resolution : default_resolution(n, a.max_modulus(n));
  std::vector<double> values(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    values[j] = boundary_derivative_modulus(a, n, BoundaryGridFunction::angle(j, grid));
  }
  const double mean = pairwise_sum(values) / static_cast<double>(grid);
  if (std::abs(mean - static_cast<double>(n)) > 1e-8 * static_cast<double>(n)) {
    throw Error(ErrorCode::kNoConvergence,
                "grid of " + std::to_string(grid) + " points does not resolve order " +
                    std::to_string(n) + " (mean |B'| = " + std::to_string(mean) + ")");
  }
  return grid;
}

double product_modulus_squared(const PointSequence& a, std::size_t n) {
  double p = 1.0;
  for (std::size_t k = 0; k < n; ++k) p *= std::norm(a[k]);
  return p;
}

NormReport error_norms(const AnalyticTestFunction& f, const SigmaPositive& sigma,
                       std::size_t grid) {
  std::vector<Complex> err(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const Complex t = BoundaryGridFunction::node(j, grid);
    err[j] = f.value(t) - sigma(t);
  }
  return norms(BoundaryGridFunction(std::move(err)));
}

}  // namespace

const char* to_string(NormKind kind) {
  switch (kind) {
    case NormKind::kSup: return "sup";
    case NormKind::kL1: return "l1";
    case NormKind::kL2: return "l2";
  }
  return "unknown";
}

FrostmanMinimum frostman_minimum(const PointSequence& a, std::size_t n,
                                 std::size_t scan_resolution, double tol) {
  if (n == 0) return {0.0, 0.0};
  if (scan_resolution == 0) throw Error(ErrorCode::kInvalidArgument, "scan resolution must be positive");
  auto sum_at = [&](double x) { return boundary_derivative_modulus(a, n, x); };

  std::size_t best = 0;
  double best_value = sum_at(0.0);
  for (std::size_t j = 1; j < scan_resolution; ++j) {
    const double v = sum_at(kTwoPi * static_cast<double>(j) / static_cast<double>(scan_resolution));
    if (v < best_value) {
      best_value = v;
      best = j;
    }
  }

  const double step = kTwoPi / static_cast<double>(scan_resolution);
  const double center = step * static_cast<double>(best);
  double lo = center - step;
  double hi = center + step;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = sum_at(x1);
  double f2 = sum_at(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = sum_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = sum_at(x2);
    }
  }
  double angle = 0.5 * (lo + hi);
  double value = sum_at(angle);
  if (best_value < value) {
    angle = center;
    value = best_value;
  }
  angle = std::fmod(angle, kTwoPi);
  if (angle < 0.0) angle += kTwoPi;
  return {value, angle};
}

SequenceDiagnostics diagnose_sequence(const PointSequence& a, std::size_t n) {
  if (n > a.size()) throw Error(ErrorCode::kIndexOutOfRange, "order exceeds sequence length");
  SequenceDiagnostics d;
  d.order = n;
  for (std::size_t k = 0; k < n; ++k) d.blaschke_sum_partial += 1.0 - std::abs(a[k]);
  const FrostmanMinimum m = frostman_minimum(a, n);
  d.frostman_min_partial = m.value;
  d.argmin_angle = m.angle;
  return d;
}

double inverse_derivative_norm(const PointSequence& a, std::size_t n, NormKind kind,
                               std::size_t resolution) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "1/B_0' is undefined");
  if (kind == NormKind::kSup) return 1.0 / frostman_minimum(a, n).value;
  std::vector<Complex> inv(resolution);
  for (std::size_t j = 0; j < resolution; ++j) {
    inv[j] = 1.0 / boundary_derivative_modulus(a, n, BoundaryGridFunction::angle(j, resolution));
  }
  const NormReport r = norms(BoundaryGridFunction(std::move(inv)));
  return kind == NormKind::kL1 ? r.l1_norm : r.l2_norm;
}

std::vector<ConvergenceRow> convergence_experiment(const AnalyticTestFunction& f,
                                                   const PointSequence& a,
                                                   std::span<const std::size_t> orders,
                                                   NormKind norm, std::size_t resolution) {
  check_orders(a, orders);
  std::vector<ConvergenceRow> rows;
  for (std::size_t n : orders) {
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "convergence orders must be >= 1");
    const std::size_t grid = grid_for(a, n, resolution);
    const TMBasis basis(a, n);
    const SigmaPositive sigma(f, basis, grid);
    const NormReport err = error_norms(f, sigma, grid);
    const double inv = inverse_derivative_norm(a, n, norm, grid);
    rows.push_back({n, err.sup_norm, err.l1_norm, err.l2_norm, 2.0 * inv,
                    product_modulus_squared(a, n) * inv});
  }
  return rows;
}

std::vector<VoronovskayaRow> voronovskaya_experiment(const PointSequence& a,
                                                     std::span<const std::size_t> orders,
                                                     std::span<const Complex> probes,
                                                     std::size_t trials, std::uint64_t seed,
                                                     std::size_t resolution,
                                                     int density_degree) {
  check_orders(a, orders);
  for (Complex z : probes) {
    if (std::abs(z) > 0.9) throw Error(ErrorCode::kInvalidArgument, "probes must satisfy |z| <= 0.9");
  }
  std::mt19937_64 gen(seed);
  std::vector<AnalyticTestFunction> densities;
  densities.reserve(trials);
  for (std::size_t k = 0; k < trials; ++k) {
    densities.push_back(corpus::random_density(gen(), density_degree, 4096));
  }

  std::vector<VoronovskayaRow> rows;
  for (std::size_t n : orders) {
    const TMBasis basis(a, n);
    const std::size_t grid = resolution ? resolution : 0;
    for (Complex z : probes) {
      const DeltaEvaluator delta_at(basis, z, grid);
      VoronovskayaRow row;
      row.n = n;
      row.z = z;
      row.blaschke_modulus = std::abs(basis.blaschke(z).value);
      row.bound = voronovskaya_bound(basis, z);
      row.extremal = std::abs(delta_at.deviation(extremal_voronovskaya(basis, z, 0.0)));
      for (const auto& mu : densities) {
        row.random_max = std::max(row.random_max, std::abs(delta_at.deviation(mu)));
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SaturationRow> saturation_check(const AnalyticTestFunction& f, const PointSequence& a,
                                            std::span<const std::size_t> orders,
                                            std::size_t resolution) {
  check_orders(a, orders);
  std::vector<SaturationRow> rows;
  for (std::size_t n : orders) {
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "saturation orders must be >= 1");
    const std::size_t grid = grid_for(a, n, resolution);
    const TMBasis basis(a, n);
    const SigmaPositive sigma(f, basis, grid);
    double lower = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      lower = std::max(lower, (1.0 - std::norm(a[j])) * std::abs(f.derivative(a[j])));
    }
    rows.push_back({n, error_norms(f, sigma, grid).sup_norm, lower / static_cast<double>(n)});
  }
  return rows;
}

std::vector<CesaroRow> cesaro_counterexample(const PointSequence& a,
                                             std::span<const std::size_t> orders,
                                             std::size_t resolution) {
  check_orders(a, orders);
  const BoundaryGridFunction one =
      BoundaryGridFunction::sample([](Complex) { return Complex{1.0, 0.0}; }, resolution);
  std::vector<CesaroRow> rows;
  for (std::size_t n : orders) {
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cesaro orders must be >= 1");
    CesaroRow row;
    row.n = n;
    row.closed_form = cesaro_e0_closed_form(a, n);
    for (std::size_t j = 0; j < resolution; ++j) {
      const double v = std::abs(cesaro_e0(a, n, BoundaryGridFunction::node(j, resolution)));
      if (v > row.sup_norm) {
        row.sup_norm = v;
        row.argmax_angle = BoundaryGridFunction::angle(j, resolution);
      }
    }
    const TMBasis basis(a, n);
    const std::size_t probes = std::min<std::size_t>(64, resolution);
    for (std::size_t k = 0; k < probes; ++k) {
      const Complex z = BoundaryGridFunction::node(k * (resolution / probes), resolution);
      row.positive_sup = std::max(row.positive_sup, std::abs(sigma_rusak(one, basis, z)));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<KernelSample> kernel_surface(const PointSequence& a,
                                         std::span<const std::size_t> orders,
                                         std::size_t samples) {
  check_orders(a, orders);
  if (samples == 0) throw Error(ErrorCode::kInvalidArgument, "kernel samples must be positive");
  std::vector<KernelSample> out;
  out.reserve(orders.size() * samples * samples);
  for (std::size_t n : orders) {
    const TMBasis basis(a, n);
    for (std::size_t i = 0; i < samples; ++i) {
      const double x = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
      for (std::size_t j = 0; j < samples; ++j) {
        const double y = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
        out.push_back({n, x, y, fejer_kernel(basis, std::polar(1.0, y), std::polar(1.0, x))});
      }
    }
  }
  return out;
}

}  // namespace tmfejer
