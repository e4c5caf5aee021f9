#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "tmfejer/errors.hpp"
#include "tmfejer/quadrature.hpp"
#include "tmfejer/tm_basis.hpp"

using tmfejer::Complex;
using tmfejer::PointSequence;
using tmfejer::TMBasis;

namespace {

const Complex kI{0.0, 1.0};

tmfejer::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const tmfejer::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return tmfejer::ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("first function at the origin") {
  const TMBasis basis(PointSequence({0.5}), 1);
  CHECK(std::abs(basis.phi(0, 0.0) - std::sqrt(0.75)) < 1e-15);
}

TEST_CASE("zero sequence gives monomials") {
  const TMBasis basis(PointSequence::zeros(6), 6);
  const Complex z{0.3, -0.4};
  for (int k = 0; k < 6; ++k) {
    CHECK(std::abs(basis.phi(k, z) - std::pow(z, k)) < 1e-15);
  }
  const Complex t = std::polar(1.0, 0.9);
  for (int k = 1; k <= 6; ++k) {
    CHECK(std::abs(basis.phi(-k, t) - std::pow(std::conj(t), k)) < 1e-14);
  }
}

TEST_CASE("index and domain errors") {
  const TMBasis basis(PointSequence({0.5, 0.2}), 2);
  CHECK(code_of([&] { basis.phi(2, 0.0); }) == tmfejer::ErrorCode::kIndexOutOfRange);
  CHECK(code_of([&] { basis.phi(-3, 1.0); }) == tmfejer::ErrorCode::kIndexOutOfRange);
  CHECK(code_of([&] { basis.phi(-1, 0.5); }) == tmfejer::ErrorCode::kExtendedOffCircle);
  CHECK_NOTHROW(basis.phi(-2, std::polar(1.0 + 1e-12, 0.4)));
  CHECK(code_of([&] { TMBasis(PointSequence({0.1}), 2); }) ==
        tmfejer::ErrorCode::kIndexOutOfRange);
  CHECK(TMBasis(PointSequence({0.1}), 0).order() == 0);
}

TEST_CASE("values agree with the explicit product") {
  oracle::Points rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.integer(1, 12);
    const auto pts = rng.sequence(n, 0.95);
    const TMBasis basis(PointSequence(pts), n);
    const Complex z = rng.in_disc(0.99);
    std::vector<Complex> values(n);
    std::vector<Complex> derivs(n);
    basis.eval_all(z, values, derivs);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex expected = oracle::phi(pts, k, z);
      CHECK(std::abs(basis.phi(static_cast<int>(k), z) - expected) < 1e-12);
      CHECK(std::abs(values[k] - expected) < 1e-12);
      const Complex fd = oracle::central_difference(
          [&](Complex s) { return oracle::phi(pts, k, s); }, z, 1e-6);
      CHECK(std::abs(derivs[k] - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
      CHECK(std::abs(basis.phi_derivative(k, z) - derivs[k]) < 1e-10 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("extended family is orthonormal on the circle") {
  const std::vector<Complex> pts{0.5, 0.3 * kI, -0.6 + 0.2 * kI};
  const TMBasis basis(PointSequence(pts), 3);
  const std::size_t grid = 1024;
  for (int j = -3; j < 3; ++j) {
    for (int k = -3; k < 3; ++k) {
      std::vector<Complex> prod(grid);
      for (std::size_t m = 0; m < grid; ++m) {
        const Complex t = tmfejer::BoundaryGridFunction::node(m, grid);
        prod[m] = basis.phi(j, t) * std::conj(basis.phi(k, t));
      }
      const Complex ip = tmfejer::pairwise_sum(prod) / static_cast<double>(grid);
      CHECK(std::abs(ip - (j == k ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("christoffel darboux closed form") {
  oracle::Points rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.integer(1, 12);
    const auto pts = rng.sequence(n, 0.95);
    const TMBasis basis(PointSequence(pts), n);
    const Complex z = rng.in_disc(0.95);
    const Complex t = rng.in_disc(0.95);
    const Complex expected = oracle::cd_explicit_sum(pts, n, z, t);
    CHECK(std::abs(tmfejer::cd_kernel(basis, z, t) - expected) < 1e-10);
  }
}

TEST_CASE("christoffel darboux diagonal") {
  const TMBasis basis(PointSequence({0.5}), 1);
  CHECK(std::abs(tmfejer::cd_kernel_diagonal(basis, 1.0) - 3.0) < 1e-14);
  CHECK(code_of([&] { tmfejer::cd_kernel(basis, 1.0, 1.0); }) ==
        tmfejer::ErrorCode::kDiagonalSingularity);

  oracle::Points rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.integer(1, 10);
    const auto pts = rng.sequence(n, 0.95);
    const TMBasis basis_n(PointSequence(pts), n);
    const double x = rng.uniform(0.0, 6.3);
    const double diag = tmfejer::cd_kernel_diagonal(basis_n, std::polar(1.0, x));
    CHECK(std::abs(diag - oracle::frostman_sum(pts, n, x)) < 1e-10 * diag);
    CHECK(std::abs(diag - std::abs(basis_n.blaschke(std::polar(1.0, x)).derivative)) <
          1e-9 * diag);
  }
}
