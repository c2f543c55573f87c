#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hardytk/estimate.hpp"
#include "hardytk/trials.hpp"

using namespace hardytk;
using namespace hardytk::trials;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("gaussian product closed forms and sampler moments") {
  const auto u = gaussian_product(3, 3);
  CHECK(u.closed_forms.at("mass1") == doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-14));
  CHECK(u.closed_forms.at("kinetic1") ==
        doctest::Approx(1.5 * std::pow(kPi, 1.5)).epsilon(1e-14));
  // pair integral: pi^d/(d-2) at unit scale
  CHECK(u.closed_forms.at("pair2") == doctest::Approx(std::pow(kPi, 3.0)).epsilon(1e-14));
  // quotient d(d-2)/(N-1)
  CHECK(u.closed_forms.at("quotient") == doctest::Approx(1.5).epsilon(1e-14));

  // scale covariance: the quotient is independent of s
  const auto u2 = gaussian_product(3, 3, 2.5);
  CHECK(u2.closed_forms.at("quotient") == doctest::Approx(1.5).epsilon(1e-13));

  // single-particle kinetic/mass ratio: d/2 at unit scale
  const auto u1 = gaussian_product(3, 1);
  CHECK(u1.closed_forms.at("kinetic1") / u1.closed_forms.at("mass1") == doctest::Approx(1.5));

  // sampler: per-coordinate variance s^2/2
  estimate::McOptions mc;
  mc.n = 40000;
  mc.seed = 3;
  const auto var = estimate::mc_mean(
      [](const Configuration& c) { return c.coords[0] * c.coords[0]; }, *u.sampler, 3, 3, mc);
  CHECK(std::abs(var.mean - 0.5) <= 3.0 * var.std_error);
}

TEST_CASE("closed forms match MC for mass-normalized moments") {
  // E[|grad u / u|^2] = T/mass for the product Gaussian = N d / (2 s^2) * ...
  // at s=1: N*d/2 per the kinetic1/mass1 ratio times N.
  const auto u = gaussian_product(3, 2);
  estimate::McOptions mc;
  mc.n = 60000;
  mc.seed = 5;
  const auto kin = estimate::mc_mean(
      [&](const Configuration& c) {
        std::vector<double> g;
        u.grad(c, g);
        const double v = u.eval(c);
        double s = 0.0;
        for (double x : g) s += x * x;
        return s / (v * v);
      },
      *u.sampler, 3, 2, mc);
  const double expected = u.closed_forms.at("T") / u.closed_forms.at("mass");
  CHECK(std::abs(kin.mean - expected) <= 3.0 * kin.std_error);
}

TEST_CASE("finite-difference gradient checks per family") {
  CHECK(fd_gradient_worst_error(gaussian_product(3, 3), 11, 100) <= 1e-6);
  CHECK(fd_gradient_worst_error(gaussian_product(2, 4, 1.3), 12, 50) <= 1e-6);
  CHECK(fd_gradient_worst_error(sharpness_1d(2, SharpnessParams{0.1}), 13, 100) <= 1e-6);
  CHECK(fd_gradient_worst_error(sharpness_1d(4, SharpnessParams{0.3}), 14, 50) <= 1e-6);
  CHECK(fd_gradient_worst_error(slater_gaussian(2, 2, default_slater_centers(2, 2)), 15, 100) <=
        1e-6);
  CHECK(fd_gradient_worst_error(slater_gaussian(3, 3, default_slater_centers(3, 3)), 16, 30) <=
        1e-6);
  CHECK(fd_gradient_worst_error(odd_gaussian(3), 17, 100) <= 1e-6);

  // O(h^2) decay: quarter the error at half the step
  const auto u = gaussian_product(3, 2);
  const double e1 = fd_gradient_worst_error(u, 18, 20, 1e-3);
  const double e2 = fd_gradient_worst_error(u, 18, 20, 5e-4);
  CHECK(e2 <= 0.3 * e1 + 1e-12);
}

TEST_CASE("sharpness family values") {
  const auto v = sharpness_1d(2, SharpnessParams{0.25});  // alpha = 1/2
  // v(0,1) = |0-1| e^{-1}
  Configuration c(1, 2, {0.0, 1.0});
  CHECK(v.eval(c) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  // diagonal evaluates to zero with zero gradient
  Configuration diag(1, 2, {0.7, 0.7});
  CHECK(v.eval(diag) == 0.0);
  std::vector<double> g;
  v.grad(diag, g);
  CHECK(g[0] == 0.0);
  CHECK(g[1] == 0.0);
  CHECK_THROWS(sharpness_1d(2, SharpnessParams{0.0}));
  CHECK_THROWS(sharpness_1d(1, SharpnessParams{0.1}));
}

TEST_CASE("slater determinant antisymmetry") {
  const auto u = slater_gaussian(3, 2, default_slater_centers(3, 2));
  CounterRng rng(19, 0);
  for (int t = 0; t < 100; ++t) {
    Configuration c(3, 2);
    for (double& x : c.coords) x = 1.5 * rng.normal();
    Configuration swapped(3, 2);
    for (int m = 0; m < 3; ++m) {
      swapped.point(0)[m] = c.point(1)[m];
      swapped.point(1)[m] = c.point(0)[m];
    }
    // sign flip, exact at the bit level for the pivoted evaluation order
    CHECK(u.eval(swapped) == -u.eval(c));
  }
  // Pauli: coincident particles give zero
  Configuration pauli(3, 2, {0.4, 0.1, -0.2, 0.4, 0.1, -0.2});
  CHECK(u.eval(pauli) == 0.0);
  CHECK_THROWS_AS(slater_gaussian(2, 2, std::vector<double>{1, 1, 1, 1}), DegenerateOrbitals);
}

TEST_CASE("slater adjacent transpositions flip the sign for N=3") {
  const auto u = slater_gaussian(2, 3, default_slater_centers(2, 3));
  CounterRng rng(20, 0);
  for (int t = 0; t < 40; ++t) {
    Configuration c(2, 3);
    for (double& x : c.coords) x = 1.2 * rng.normal();
    for (int sw = 0; sw < 2; ++sw) {  // adjacent pairs (0,1) and (1,2)
      Configuration s = c;
      for (int m = 0; m < 2; ++m) std::swap(s.point(sw)[m], s.point(sw + 1)[m]);
      CHECK(u.eval(s) == doctest::Approx(-u.eval(c)).epsilon(1e-12));
    }
  }
}

TEST_CASE("odd gaussian oddness and sampler") {
  const auto u = odd_gaussian(3);
  CounterRng rng(21, 0);
  for (int t = 0; t < 50; ++t) {
    Configuration c(3, 1);
    for (double& x : c.coords) x = rng.normal();
    Configuration neg(3, 1, {-c.coords[0], -c.coords[1], -c.coords[2]});
    CHECK(u.eval(neg) == -u.eval(c));
  }
  // sampler moments: E[x1^2] = 3/2 under x1^2 e^{-|x|^2} (chi^2_3/2),
  // E[x2^2] = 1/2
  estimate::McOptions mc;
  mc.n = 60000;
  mc.seed = 7;
  const auto m1 = estimate::mc_mean(
      [](const Configuration& c) { return c.coords[0] * c.coords[0]; }, *u.sampler, 3, 1, mc);
  CHECK(std::abs(m1.mean - 1.5) <= 3.0 * m1.std_error);
  const auto m2 = estimate::mc_mean(
      [](const Configuration& c) { return c.coords[1] * c.coords[1]; }, *u.sampler, 3, 1, mc);
  CHECK(std::abs(m2.mean - 0.5) <= 3.0 * m2.std_error);
  // the weighted quotient closed form
  CHECK(u.closed_forms.at("weighted_quotient") == doctest::Approx(3.75));
  CHECK_THROWS(odd_gaussian(1));
}

TEST_CASE("radial profiles") {
  const auto pe = RadialProfile::power_exp(2.0, 1.5);
  CHECK(pe.value(1.0) == doctest::Approx(std::exp(-1.5)).epsilon(1e-14));
  CHECK(pe.deriv(1.0) == doctest::Approx((2.0 - 1.5) * std::exp(-1.5)).epsilon(1e-13));
  CHECK(pe.value(0.0) == 0.0);

  const auto lp = RadialProfile::log_plateau(1.0, 10.0, 4.0);
  CHECK(lp.value(0.2) == 0.0);
  CHECK(lp.value(1.0) == doctest::Approx(1.0));
  CHECK(lp.value(5.0) == 1.0);
  CHECK(lp.deriv(5.0) == 0.0);
  CHECK(lp.value(40.0) == doctest::Approx(0.0));
  CHECK(lp.value(20.0) == doctest::Approx(std::log(2.0) / std::log(4.0)).epsilon(1e-13));
  CHECK_THROWS(RadialProfile::power_exp(0.0, 1.0));
  CHECK_THROWS(RadialProfile::log_plateau(2.0, 1.0, 4.0));
}
