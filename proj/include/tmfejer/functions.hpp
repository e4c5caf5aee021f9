#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tmfejer/quadrature.hpp"
#include "tmfejer/tm_basis.hpp"

namespace tmfejer {

enum class FunctionKind { kRational, kCauchyTransform, kSchur, kBlaschkeMultiple };

const char* to_string(FunctionKind kind);

/// Holomorphic function on the closed disc with an exact derivative.
///
/// `density` is the boundary function whose Cauchy integral reproduces the
/// function; for bounded holomorphic members it is the boundary trace itself,
/// for Cauchy-transform members it is the (possibly non-analytic) density mu.
/// TM coefficients are always taken against the density.
class AnalyticTestFunction {
 public:
  using Map = std::function<Complex(Complex)>;

  AnalyticTestFunction(std::string name, FunctionKind kind, Map value, Map derivative,
                       Map density = {});

  const std::string& name() const noexcept { return name_; }
  FunctionKind kind() const noexcept { return kind_; }

  Complex value(Complex z) const { return value_(z); }
  Complex derivative(Complex z) const { return derivative_(z); }
  Complex density(Complex t) const { return density_ ? density_(t) : value_(t); }

  BoundaryGridFunction boundary_samples(std::size_t resolution) const;
  BoundaryGridFunction density_samples(std::size_t resolution) const;

 private:
  std::string name_;
  FunctionKind kind_;
  Map value_;
  Map derivative_;
  Map density_;
};

namespace corpus {

/// e_0 = c (default 1).
AnalyticTestFunction constant(Complex c = {1.0, 0.0});

/// z^m.
AnalyticTestFunction power(int m);

/// w_alpha(z) = (z - alpha)/(1 - z conj(alpha)); w_0 is the identity map.
AnalyticTestFunction mobius(Complex alpha);

/// p(z) + sum_i r_i/(1 - c_i z) with |c_i| < 1, so every pole lies outside the
/// closed disc. `poly` holds ascending coefficients.
AnalyticTestFunction rational(std::string name, std::vector<Complex> poly,
                              std::vector<Complex> inverse_poles, std::vector<Complex> residues);

/// Finite product of Mobius maps scaled by `scale` (Schur class when |scale| <= 1).
AnalyticTestFunction mobius_product(std::vector<Complex> alphas, Complex scale = {1.0, 0.0});

/// scale * B_n(z) * w_alpha(z) for a given basis.
AnalyticTestFunction blaschke_multiple(const TMBasis& basis, Complex scale, Complex alpha);

/// Cauchy transform of the trigonometric density mu(t) = sum_k c_k t^{k + lowest}.
/// Only the non-negative frequencies survive in the holomorphic function.
AnalyticTestFunction trig_density(std::string name, std::vector<Complex> coefficients,
                                  int lowest_degree);

/// Random trigonometric density of the given degree (frequencies -degree..degree),
/// scaled so that its sup over a `resolution`-point grid equals `sup_norm`.
AnalyticTestFunction random_density(std::uint64_t seed, int degree, std::size_t resolution,
                                    double sup_norm = 1.0);

/// Ten rational members bounded on the closed disc.
std::vector<AnalyticTestFunction> rational_members();

/// Members of the Schur class (sup over the disc <= 1).
std::vector<AnalyticTestFunction> schur_members();

/// Rational members plus Cauchy-transform members with unit-bounded densities.
std::vector<AnalyticTestFunction> full(std::uint64_t seed = 7);

/// Parses a function name as accepted by the CLI, e.g. `e0`, `w0`, `power(3)`,
/// `mobius(0.3+0.1i)`, `pole(0.6)`. Throws InvalidArgument otherwise.
AnalyticTestFunction by_name(const std::string& spec);

}  // namespace corpus

/// Parses `0.5`, `-0.3i`, `0.2+0.4i`, `i`, `(0.1, -0.2)`.
Complex parse_complex(const std::string& text);

}  // namespace tmfejer
