#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hardytk/bounds.hpp"
#include "hardytk/rng.hpp"

using namespace hardytk::bounds;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("lower bound branches") {
  // (3,3): the quadratic branch, 1/(1 + sqrt(7)/2)
  const auto d33 = hardy_lower_bound_detail(3, 3);
  CHECK(d33.value == doctest::Approx(1.0 / (1.0 + std::sqrt(7.0) / 2.0)).epsilon(1e-15));
  CHECK(d33.value == doctest::Approx(0.430500).epsilon(2e-6));
  CHECK(d33.quadratic_branch_won);

  // (3,10): max(0.1, 1/(1+sqrt(28)))
  CHECK(hardy_lower_bound(3, 10) ==
        doctest::Approx(1.0 / (1.0 + std::sqrt(28.0))).epsilon(1e-15));
  CHECK(hardy_lower_bound(3, 10) == doctest::Approx(0.158945).epsilon(1e-5));

  // (10,2): both branches coincide at 1/2, value 64/2
  const auto d102 = hardy_lower_bound_detail(10, 2);
  CHECK(d102.value == 32.0);
  CHECK(d102.branch_one_over_n == doctest::Approx(d102.branch_quadratic));

  CHECK_THROWS_AS(hardy_lower_bound(2, 3), std::domain_error);
  CHECK_THROWS_AS(hardy_lower_bound(3, 1), std::domain_error);
}

TEST_CASE("elementary chaining constant") {
  CHECK(naive_bound(3, 2) == 0.5);
  CHECK(naive_bound(4, 3) == 1.0);
  CHECK(naive_bound(3, 100) == doctest::Approx(1.0 / 198.0).epsilon(1e-15));
  // weaker than the main bound for d=3 and large N
  CHECK(hardy_lower_bound(3, 100) > 2.0 * naive_bound(3, 100));
}

TEST_CASE("fermionic and one-dimensional constants") {
  CHECK(fermi_bound(1, 2) == 0.5);
  CHECK(fermi_bound(1, 2) == one_d_constant());
  CHECK(fermi_bound(2, 4) == 1.0);
  CHECK(fermi_bound(3, 9) == 1.0);
  // the sharp 1D constant beats pairwise chaining for N >= 3
  for (int n : {3, 5, 20}) CHECK(one_d_constant() > 1.0 / (2.0 * n - 2.0));
}

TEST_CASE("half-integer gamma recursion") {
  CHECK(gamma_half_integer(1) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK(gamma_half_integer(2) == 1.0);
  CHECK(gamma_half_integer(3) == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-15));
  CHECK(gamma_half_integer(4) == 1.0);
  CHECK(gamma_half_integer(6) == 2.0);
  CHECK(gamma_half_integer(7) == doctest::Approx(std::tgamma(3.5)).epsilon(1e-14));
}

TEST_CASE("reported Gaussian constants") {
  // assembled value (d/4) pi^{d/2} Gamma(d/2)
  CHECK(gaussian_Dd(3) == doctest::Approx(3.0 * kPi * kPi / 8.0).epsilon(1e-15));
  CHECK(gaussian_Dd(4) == doctest::Approx(kPi * kPi).epsilon(1e-15));
  CHECK(gaussian_upper_bound(3, 3) == doctest::Approx(3.0 * kPi * kPi / 8.0).epsilon(1e-15));
  CHECK(gaussian_upper_bound(3, 2) == doctest::Approx(3.0 * kPi * kPi / 4.0).epsilon(1e-15));
  // bracket consistency on a sweep
  for (int n = 2; n <= 10000; n = 2 * n + 1)
    CHECK(gaussian_upper_bound(3, n) >= hardy_lower_bound(3, n));
}

TEST_CASE("magnetic constant, exact rational path") {
  CHECK(magnetic_constant(2, RationalFlux(1, 2)) == 0.25);
  CHECK(magnetic_constant(3, RationalFlux(1, 3)) == doctest::Approx(1.0 / 36.0).epsilon(1e-15));
  for (long long a : {-2LL, 0LL, 3LL}) CHECK(magnetic_constant(5, RationalFlux(a, 1)) == 0.0);
  // zero iff the reduced denominator is at most N-1
  CHECK(magnetic_constant(3, RationalFlux(1, 2)) == 0.0);
  CHECK(magnetic_constant(2, RationalFlux(2, 3)) > 0.0);
  CHECK(magnetic_constant(4, RationalFlux(2, 3)) == 0.0);
}

TEST_CASE("magnetic constant float path agrees with the exact one") {
  hardytk::CounterRng rng(99, 0);
  for (int t = 0; t < 500; ++t) {
    const long long q = 1 + static_cast<long long>(rng.uniform_index(1000000));
    const long long p = static_cast<long long>(rng.uniform_index(2 * q + 1)) - q;
    const int n = 2 + static_cast<int>(rng.uniform_index(9));
    const RationalFlux flux(p, q);
    const double exact = magnetic_constant(n, flux);
    const double scan = magnetic_constant(n, flux.value());
    CHECK(std::abs(exact - scan) <= 1e-12 * std::max(1.0, exact));
    // shifting the flux by an integer leaves the constant unchanged
    CHECK(magnetic_constant(n, RationalFlux(flux.p + flux.q, flux.q)) == exact);
  }
}

TEST_CASE("rational flux parsing and reduction") {
  const auto f = RationalFlux::parse("6/4");
  CHECK(f.p == 3);
  CHECK(f.q == 2);
  CHECK(RationalFlux::parse("-2/6").p == -1);
  CHECK(RationalFlux::parse("5").q == 1);
  CHECK_THROWS(RationalFlux(1, 0));
}

TEST_CASE("asymptotic curvature bound and the quadratic branch") {
  CHECK(k_asymptotic_bound(3, 0.0) == 0.5);
  CHECK(k_asymptotic_bound(3, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(k_asymptotic_bound(3, 1.0) <= 0.5);

  CHECK(case_b_bound(5, 0.0) == doctest::Approx(4.5).epsilon(1e-15));  // (d-2)^2/2
  CHECK(case_b_bound(3, 0.75) ==
        doctest::Approx(1.0 / (1.0 + std::sqrt(7.0) / 2.0)).epsilon(1e-15));
  // solves X^2 - 2XT/(d-2)^2 - ell T^2/(d-2)^2 = 0 at X/T = 1/value
  for (int d : {3, 4, 7}) {
    for (double ell : {0.1, 1.0, 12.0}) {
      const double v = case_b_bound(d, ell);
      const double dm2sq = double(d - 2) * (d - 2);
      const double x = 1.0 / v;
      CHECK(std::abs(x * x - 2.0 * x / dm2sq - ell / dm2sq) <= 1e-12 * x * x);
    }
  }
  // with the three-particle ell it reproduces the quadratic branch
  for (int d : {3, 4, 6}) {
    for (int n : {3, 5, 9}) {
      const double ell = 3.0 * (n - 1.0) * (n - 2.0) / (2.0 * (d - 1.0) * (d - 1.0));
      CHECK(case_b_bound(d, ell) ==
            doctest::Approx(hardy_lower_bound_detail(d, n).branch_quadratic).epsilon(1e-14));
    }
  }
}

TEST_CASE("bound reports carry parameters") {
  const auto r = report_hardy_lower(3, 3);
  CHECK(r.name == "hardy_lower");
  CHECK(r.kind == BoundKind::kLower);
  CHECK(r.params.at("d") == 3.0);
  CHECK(r.params.at("quadratic_branch") == 1.0);
  const auto m = report_magnetic(2, RationalFlux(1, 2));
  CHECK(m.value == 0.25);
  CHECK(m.params.at("alpha") == 0.5);
}
