#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tmfejer/functions.hpp"
#include "tmfejer/operators.hpp"

namespace tmfejer {

enum class NormKind { kSup, kL1, kL2 };

const char* to_string(NormKind kind);

struct FrostmanMinimum {
  double value;
  double angle;
};

/// min over the circle of sum_{k<n} (1 - |a_k|^2)/|1 - conj(t) a_k|^2: a grid scan
/// followed by golden-section refinement around the best node.
FrostmanMinimum frostman_minimum(const PointSequence& a, std::size_t n,
                                 std::size_t scan_resolution = 8192, double tol = 1e-10);

struct SequenceDiagnostics {
  std::size_t order = 0;
  double blaschke_sum_partial = 0.0;  // sum_{k<n} (1 - |a_k|)
  double frostman_min_partial = 0.0;
  double argmin_angle = 0.0;
};

SequenceDiagnostics diagnose_sequence(const PointSequence& a, std::size_t n);

/// ||1/B_n'|| on the circle. The sup norm is exact (1/frostman minimum);
/// L^1 and L^2 use the given grid.
double inverse_derivative_norm(const PointSequence& a, std::size_t n, NormKind kind,
                               std::size_t resolution);

struct ConvergenceRow {
  std::size_t n = 0;
  double error_sup = 0.0;
  double error_l1 = 0.0;
  double error_l2 = 0.0;
  double bound = 0.0;  // 2 ||1/B_n'||
  double lower = 0.0;  // prod |a_k|^2 ||1/B_n'||
};

/// ||f - sigma_{n,phi}(f)|| on the grid for each order, with the bracket of the
/// identity map's error in the chosen norm. `resolution` 0 picks the default per n.
std::vector<ConvergenceRow> convergence_experiment(const AnalyticTestFunction& f,
                                                   const PointSequence& a,
                                                   std::span<const std::size_t> orders,
                                                   NormKind norm, std::size_t resolution = 0);

struct VoronovskayaRow {
  std::size_t n = 0;
  Complex z;
  double blaschke_modulus = 0.0;
  double bound = 0.0;       // |B_n(z)|/(1 - |z|^2)
  double extremal = 0.0;    // attained by the extremal function
  double random_max = 0.0;  // max over random unit densities
};

/// Random densities are trigonometric polynomials of `density_degree` scaled to
/// grid sup 1, drawn from a generator seeded with `seed`.
std::vector<VoronovskayaRow> voronovskaya_experiment(const PointSequence& a,
                                                     std::span<const std::size_t> orders,
                                                     std::span<const Complex> probes,
                                                     std::size_t trials, std::uint64_t seed,
                                                     std::size_t resolution = 0,
                                                     int density_degree = 6);

struct SaturationRow {
  std::size_t n = 0;
  double error = 0.0;  // ||f - sigma^+(f)|| on the circle
  double lower = 0.0;  // (1/n) max_j (1 - |a_j|^2)|f'(a_j)|
};

std::vector<SaturationRow> saturation_check(const AnalyticTestFunction& f, const PointSequence& a,
                                            std::span<const std::size_t> orders,
                                            std::size_t resolution = 0);

struct CesaroRow {
  std::size_t n = 0;
  double sup_norm = 0.0;       // grid max of |Cesaro mean of e_0|
  double argmax_angle = 0.0;   // first grid index attaining it
  double closed_form = 0.0;    // 1 + (1/n) sum prod a_j
  double positive_sup = 0.0;   // grid max of |sigma_{n,phi}(e_0)|
};

std::vector<CesaroRow> cesaro_counterexample(const PointSequence& a,
                                             std::span<const std::size_t> orders,
                                             std::size_t resolution);

struct KernelSample {
  std::size_t n = 0;
  double x = 0.0;  // arg z
  double y = 0.0;  // arg t
  double value = 0.0;
};

/// Kernel on a samples x samples grid over [0, 2 pi)^2 for each order.
std::vector<KernelSample> kernel_surface(const PointSequence& a,
                                         std::span<const std::size_t> orders,
                                         std::size_t samples);

}  // namespace tmfejer
