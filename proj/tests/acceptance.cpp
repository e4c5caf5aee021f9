// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run one (exit status 1 on failure)

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tmfejer/analysis.hpp"
#include "tmfejer/errors.hpp"
#include "tmfejer/functions.hpp"
#include "tmfejer/operators.hpp"

using namespace tmfejer;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { notes.push_back("info " + what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Fixed ten-point sequence used where a criterion asks for "n <= 10".
const std::vector<Complex> kTenPoints{0.5,  0.3 * kI, -0.4, 0.1 + 0.6 * kI, -0.7 * kI,
                                      0.2,  -0.3 - 0.5 * kI, 0.8, 0.45 * kI, -0.6 + 0.1 * kI};

Outcome christoffel_darboux() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  oracle::Points rng(1);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.integer(1, 12);
    const auto pts = rng.sequence(n, 0.95);
    const TMBasis basis(PointSequence(pts), n);
    const Complex z = rng.in_disc(0.95);
    const Complex t = rng.in_disc(0.95);
    worst = std::max(worst, std::abs(cd_kernel(basis, z, t) - oracle::cd_explicit_sum(pts, n, z, t)));
  }
  const double elapsed = seconds_since(start);
  out.require(worst <= 1e-10, fmt("closed form vs explicit sum, max |diff| = %.3g (<= 1e-10)", worst));
  out.require(elapsed < 1.0, fmt("runtime %.3f s (< 1 s)", elapsed));
  return out;
}

Outcome kernel_laws() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  oracle::Points rng(2);
  double min_value = 1e300;
  double worst_mean = 0.0;
  double worst_diag = 0.0;
  double worst_forms = 0.0;
  for (int b = 0; b < 20; ++b) {
    const std::size_t n = rng.integer(1, 10);
    const auto pts = rng.sequence(n, 0.9);
    const PointSequence a(pts);
    const TMBasis basis(a, n);
    const std::size_t grid = default_resolution(n, a.max_modulus(n));
    std::vector<double> values(grid);
    for (int p = 0; p < 64; ++p) {
      const double x = rng.uniform(0.0, 2 * kPi);
      const Complex z = std::polar(1.0, x);
      for (std::size_t j = 0; j < grid; ++j) {
        values[j] = fejer_kernel(basis, BoundaryGridFunction::node(j, grid), z);
        min_value = std::min(min_value, values[j]);
      }
      worst_mean = std::max(worst_mean, std::abs(pairwise_sum(values) / grid - 1.0));
      worst_diag = std::max(worst_diag, std::abs(fejer_kernel(basis, z, z) -
                                                 std::abs(basis.blaschke(z).derivative)));
      for (int q = 0; q < 16; ++q) {
        const double y = rng.uniform(0.0, 2 * kPi);
        const Complex t = std::polar(1.0, y);
        const double quotient =
            std::norm((oracle::blaschke(pts, n, t) - oracle::blaschke(pts, n, z)) / (t - z)) /
            oracle::frostman_sum(pts, n, x);
        worst_forms = std::max(worst_forms, std::abs(fejer_kernel_angular(basis, y, x) - quotient) /
                                                std::max(1.0, quotient));
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.require(min_value >= -1e-12, fmt("min kernel value = %.3g (>= -1e-12)", min_value));
  out.require(worst_mean <= 1e-10, fmt("unit mean, max |mean - 1| = %.3g (<= 1e-10)", worst_mean));
  out.require(worst_diag <= 1e-9, fmt("diagonal = |B'|, max |diff| = %.3g (<= 1e-9)", worst_diag));
  out.require(worst_forms <= 1e-8, fmt("sin^2 form vs quotient form, max diff = %.3g (<= 1e-8)", worst_forms));
  out.require(elapsed < 10.0, fmt("runtime %.2f s (< 10 s)", elapsed));
  return out;
}

Outcome classical_reduction() {
  Outcome out;
  double worst_kernel = 0.0;
  double worst_sigma = 0.0;
  oracle::Points rng(3);
  for (std::size_t n = 1; n <= 16; ++n) {
    const TMBasis basis(PointSequence::zeros(n), n);
    for (int p = 0; p < 64; ++p) {
      const double x = rng.uniform(0.0, 2 * kPi);
      const double u = p == 0 ? 0.0 : rng.uniform(-kPi, kPi);
      worst_kernel = std::max(worst_kernel,
                              std::abs(fejer_kernel(basis, std::polar(1.0, x + u), std::polar(1.0, x)) -
                                       oracle::classical_fejer(n, u)));
    }
    for (std::size_t m = 0; m < n; ++m) {
      const SigmaPositive sigma(corpus::power(static_cast<int>(m)), basis);
      for (int p = 0; p < 8; ++p) {
        const Complex z = p < 4 ? rng.in_disc(1.0) : rng.on_circle();
        const Complex expected = (1.0 - static_cast<double>(m) / n) * std::pow(z, static_cast<int>(m));
        worst_sigma = std::max(worst_sigma, std::abs(sigma(z) - expected));
      }
    }
  }
  out.require(worst_kernel <= 1e-12, fmt("kernel vs (1/n)(sin(nu/2)/sin(u/2))^2, max diff = %.3g", worst_kernel));
  out.require(worst_sigma <= 1e-12, fmt("sigma+(z^m) vs (1 - m/n) z^m, max diff = %.3g", worst_sigma));
  return out;
}

Outcome exactness() {
  Outcome out;
  oracle::Points rng(4);
  double worst_e0 = 0.0;
  double worst_w0 = 0.0;
  double printed = 0.0;
  for (int b = 0; b < 10; ++b) {
    const std::size_t n = rng.integer(1, 10);
    const PointSequence a(rng.sequence(n, 0.9));
    const TMBasis basis(a, n);
    const SigmaPositive e0(corpus::constant(), basis);
    const SigmaPositive w0(corpus::mobius(0.0), basis);
    const Complex b0 = basis.blaschke(0.0).value;
    const Complex d0 = basis.blaschke(0.0).derivative;
    for (int p = 0; p < 64; ++p) {
      const Complex z = rng.in_disc(0.95);
      const Complex t = rng.on_circle();
      if (std::abs(basis.blaschke(z).derivative) < 1e-6) continue;
      worst_e0 = std::max({worst_e0, std::abs(e0(z) - 1.0), std::abs(e0(t) - 1.0)});
      worst_w0 = std::max(worst_w0, std::abs(w0(z) - sigma_positive_mobius(basis, 0.0, z)));
      const BlaschkeEval bz = basis.blaschke(z);
      const Complex ratio = bz.value / bz.derivative;
      worst_w0 = std::max(worst_w0, std::abs(w0(z) - (z - ratio * (1.0 - std::conj(b0) * bz.value))));
      printed = std::max(printed, std::abs(w0(z) - (z - ratio * (1.0 - std::conj(d0) * bz.value))));
    }
  }
  out.require(worst_e0 <= 1e-9, fmt("sigma+(e0) = e0, max |diff| = %.3g (<= 1e-9)", worst_e0));
  out.require(worst_w0 <= 1e-8,
              fmt("sigma+(w0) vs z - (B/B')(1 - conj(B(0)) B), max |diff| = %.3g (<= 1e-8)", worst_w0));
  out.info(fmt("variant with conj(B'(0)) in place of conj(B(0)) deviates by up to %.3g", printed));
  return out;
}

Outcome agreement_on_circle() {
  Outcome out;
  const std::size_t grid = 1024;
  const PointSequence a(kTenPoints);
  double worst = 0.0;
  for (const auto& f : corpus::rational_members()) {
    const auto samples = f.boundary_samples(grid);
    for (std::size_t n = 1; n <= 10; ++n) {
      const TMBasis basis(a, n);
      const FejerOperator op(basis, grid);
      const BoundaryGridFunction rusak = op.apply(samples);
      const SigmaPositive sigma(f, basis);
      for (std::size_t j = 0; j < grid; ++j) {
        worst = std::max(worst, std::abs(rusak[j] - sigma(BoundaryGridFunction::node(j, grid))));
      }
    }
  }
  out.require(worst < 1e-7, fmt("sup |sigma_rusak - sigma+| over %zu-point grid = %.3g (< 1e-7)", grid, worst));
  return out;
}

Outcome contraction() {
  Outcome out;
  const std::size_t grid = 1024;
  const auto members = corpus::full();
  oracle::Points rng(6);
  double excess[3] = {-1e300, -1e300, -1e300};
  std::string where[3];
  double min_positive = 1e300;
  std::vector<std::vector<Complex>> sequences{kTenPoints};
  for (int s = 0; s < 4; ++s) sequences.push_back(rng.sequence(10, 0.9));
  for (const auto& pts : sequences) {
    const PointSequence a(pts);
    for (std::size_t n = 1; n <= 10; ++n) {
      const TMBasis basis(a, n);
      const FejerOperator op(basis, grid);
      for (const auto& f : members) {
        const auto data = f.density_samples(grid);
        const NormReport in = norms(data);
        const NormReport outn = norms(op.apply(data));
        const double d[3] = {outn.sup_norm - in.sup_norm, outn.l1_norm - in.l1_norm,
                             outn.l2_norm - in.l2_norm};
        for (int k = 0; k < 3; ++k) {
          if (d[k] > excess[k]) {
            excess[k] = d[k];
            where[k] = fmt("%s, n = %zu, a_0 = %.3g%+.3gi", f.name().c_str(), n, pts[0].real(), pts[0].imag());
          }
        }
        // Nonnegative real data |f|^2.
        std::vector<Complex> sq(grid);
        for (std::size_t j = 0; j < grid; ++j) sq[j] = std::norm(data[j]);
        const auto applied = op.apply(BoundaryGridFunction(sq));
        for (std::size_t j = 0; j < grid; ++j) min_positive = std::min(min_positive, applied[j].real());
      }
    }
  }
  const char* names[3] = {"sup", "L1", "L2"};
  for (int k = 0; k < 3; ++k) {
    out.require(excess[k] <= 1e-9, fmt("||sigma f||_%s - ||f||_%s max = %.3g (<= 1e-9) at %s", names[k],
                                       names[k], excess[k], where[k].c_str()));
  }
  out.require(min_positive >= -1e-10, fmt("min sigma(|f|^2) = %.3g (>= -1e-10)", min_positive));
  return out;
}

Outcome interpolation() {
  Outcome out;
  const PointSequence a(kTenPoints);
  double worst = 0.0;
  for (const auto& f : corpus::rational_members()) {
    for (std::size_t n = 1; n <= 10; ++n) {
      const TMBasis basis(a, n);
      for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(delta(f, basis, a[j]) - f.derivative(a[j])));
      }
    }
  }
  out.require(worst <= 1e-8, fmt("max |delta(f)(a_j) - f'(a_j)| = %.3g (<= 1e-8)", worst));
  return out;
}

Outcome voronovskaya() {
  Outcome out;
  const PointSequence a(kTenPoints);
  const TMBasis basis(a, 6);
  oracle::Points rng(8);
  std::vector<Complex> probes{0.0, a[0], a[3]};
  while (probes.size() < 16) probes.push_back(rng.in_disc(0.9));
  std::vector<AnalyticTestFunction> densities;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) densities.push_back(corpus::random_density(seed, 6, 4096));
  double excess = -1e300;
  double worst_extremal = 0.0;
  for (const Complex& z : probes) {
    const double bound = voronovskaya_bound(basis, z);
    const DeltaEvaluator eval(basis, z);
    for (const auto& f : densities) excess = std::max(excess, std::abs(eval(f) - f.derivative(z)) - bound);
    for (double theta : {0.0, 1.0, 2.5}) {
      const auto star = extremal_voronovskaya(basis, z, theta);
      worst_extremal = std::max(worst_extremal, std::abs(std::abs(eval(star) - star.derivative(z)) - bound));
    }
  }
  out.require(excess <= 1e-7, fmt("max |delta f - f'| - |B|/(1-|z|^2) = %.3g (<= 1e-7)", excess));
  out.require(worst_extremal <= 1e-7, fmt("extremal equality, max |diff| = %.3g (<= 1e-7)", worst_extremal));
  return out;
}

Outcome counterexample() {
  Outcome out;
  const PointSequence half = PointSequence::constant(0.5, 8);
  std::vector<std::size_t> orders{1, 2, 3, 4, 5, 6, 7, 8};
  const auto rows = cesaro_counterexample(half, orders, 4096);
  for (const auto& r : rows) {
    const double stated = 1.0 + (1.0 - std::ldexp(1.0, -static_cast<int>(r.n))) / r.n;
    out.require(std::abs(r.sup_norm - stated) <= 1e-9,
                fmt("n = %zu: sup |Cesaro(e0)| = %.12f vs 1 + (1 - 2^-n)/n = %.12f", r.n, r.sup_norm, stated));
    out.require(r.sup_norm > 1.0, fmt("n = %zu: sup exceeds ||e0|| = 1", r.n));
  }
  out.require(std::abs(rows[1].sup_norm - 1.375) <= 1e-9, fmt("n = 2 value %.12f vs 1.375", rows[1].sup_norm));
  return out;
}

Outcome bracket_and_norms() {
  Outcome out;
  const std::size_t grid = 8192;
  oracle::Points rng(10);
  std::vector<std::vector<Complex>> sequences{
      {0.5, 0.3 * kI, -0.4}, kTenPoints, std::vector<Complex>(4, 0.5), std::vector<Complex>(3, 0.7),
      {0.9}, {0.9, 0.9}};
  std::vector<Complex> harmonic;
  for (int k = 0; k < 6; ++k) harmonic.push_back(1.0 - 1.0 / (k + 2.0));
  sequences.push_back(harmonic);
  for (int s = 0; s < 5; ++s) sequences.push_back(rng.sequence(rng.integer(1, 10), 0.9));

  double lower_gap = -1e300;
  double upper_gap = -1e300;
  std::string lower_where;
  double worst_frostman = 0.0;
  double worst_mean = 0.0;
  for (const auto& pts : sequences) {
    const std::size_t n = pts.size();
    const PointSequence a(pts);
    const std::vector<std::size_t> orders{n};
    for (NormKind kind : {NormKind::kSup, NormKind::kL1}) {
      const auto row = convergence_experiment(corpus::mobius(0.0), a, orders, kind, grid)[0];
      const double err = kind == NormKind::kSup ? row.error_sup : row.error_l1;
      if (row.lower - err > lower_gap) {
        lower_gap = row.lower - err;
        lower_where = fmt("%s norm, a = %.3g%+.3gi x%zu: error %.4g, lower %.4g", to_string(kind),
                          pts[0].real(), pts[0].imag(), n, err, row.lower);
      }
      upper_gap = std::max(upper_gap, err - row.bound);
    }
    // Independent sup of 1/|B'|: fine scan plus golden-section refinement of the Frostman sum.
    const std::size_t scan = 65536;
    std::size_t best = 0;
    for (std::size_t j = 1; j < scan; ++j) {
      if (oracle::frostman_sum(pts, n, 2 * kPi * j / scan) < oracle::frostman_sum(pts, n, 2 * kPi * best / scan)) best = j;
    }
    double lo = 2 * kPi * (best - 1.0) / scan;
    double hi = 2 * kPi * (best + 1.0) / scan;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    while (hi - lo > 1e-13) {
      const double m1 = hi - g * (hi - lo);
      const double m2 = lo + g * (hi - lo);
      if (oracle::frostman_sum(pts, n, m1) < oracle::frostman_sum(pts, n, m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    const double reference = 1.0 / oracle::frostman_sum(pts, n, 0.5 * (lo + hi));
    worst_frostman = std::max(worst_frostman,
                              std::abs(inverse_derivative_norm(a, n, NormKind::kSup, grid) - reference));
    std::vector<double> d(grid);
    for (std::size_t j = 0; j < grid; ++j) d[j] = boundary_derivative_modulus(a, n, BoundaryGridFunction::angle(j, grid));
    worst_mean = std::max(worst_mean, std::abs(pairwise_sum(d) / grid - static_cast<double>(n)));
  }
  out.require(lower_gap <= 1e-8, fmt("lower bound prod|a|^2 ||1/B'||, worst excess %.4g (<= 1e-8) at %s",
                                     lower_gap, lower_where.c_str()));
  out.require(upper_gap <= 1e-8, fmt("upper bound 2||1/B'||, worst excess %.3g (<= 1e-8)", upper_gap));
  out.require(worst_frostman <= 1e-9, fmt("||1/B'||_C vs 1/min Frostman sum, max diff = %.3g (<= 1e-9)", worst_frostman));
  out.require(worst_mean <= 1e-10, fmt("||B'||_1 = n, max diff = %.3g (<= 1e-10)", worst_mean));
  return out;
}

Outcome saturation() {
  Outcome out;
  oracle::Points rng(11);
  std::vector<PointSequence> sequences{PointSequence(kTenPoints), PointSequence::constant(0.5, 10)};
  for (int s = 0; s < 3; ++s) sequences.emplace_back(rng.sequence(10, 0.9));
  const std::vector<std::size_t> orders{1, 2, 3, 5, 8, 10};
  double excess = -1e300;
  for (const auto& a : sequences) {
    for (const auto& f : corpus::full()) {
      for (const auto& r : saturation_check(f, a, orders)) excess = std::max(excess, r.lower - r.error);
    }
  }
  out.require(excess <= 1e-8, fmt("max (lower - error) = %.3g (<= 1e-8)", excess));
  double worst_eq = 0.0;
  for (const auto& r : saturation_check(corpus::mobius(0.0), PointSequence::zeros(16), std::vector<std::size_t>{1, 2, 4, 8, 16})) {
    worst_eq = std::max({worst_eq, std::abs(r.error - 1.0 / r.n), std::abs(r.lower - 1.0 / r.n)});
  }
  out.require(worst_eq <= 1e-10, fmt("a = 0, f = w0: both sides 1/n, max diff = %.3g (<= 1e-10)", worst_eq));
  return out;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria{
    {"Christoffel-Darboux identity", christoffel_darboux},
    {"kernel positivity, unit mean, diagonal, two forms", kernel_laws},
    {"classical reduction", classical_reduction},
    {"exactness on e0 and w0", exactness},
    {"sigma_rusak = sigma+ on the circle", agreement_on_circle},
    {"contraction and positivity", contraction},
    {"interpolation of f' at the points", interpolation},
    {"Voronovskaya bound and extremal", voronovskaya},
    {"Cesaro counterexample", counterexample},
    {"w0 bracket and norm identities", bracket_and_norms},
    {"saturation", saturation},
};

bool run(std::size_t index) {
  Outcome result;
  try {
    result = kCriteria[index].second();
  } catch (const std::exception& e) {
    result.require(false, std::string("threw: ") + e.what());
  }
  std::printf("criterion %2zu: %s  %s\n", index + 1, result.pass ? "PASS" : "FAIL", kCriteria[index].first);
  for (const auto& note : result.notes) std::printf("    %s\n", note.c_str());
  std::fflush(stdout);
  return result.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::size_t criterion = 0;
  app.add_option("--criterion", criterion, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (criterion != 0 && criterion != i + 1) continue;
    all = run(i) && all;
  }
  return all ? 0 : 1;
}
