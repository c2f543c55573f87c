#ifndef HARDYTK_BOUNDS_HPP
#define HARDYTK_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace hardytk::bounds {

/// Reduced rational flux p/q; exact arithmetic matters because the magnetic
/// constant is discontinuous in the flux.
struct RationalFlux {
  long long p = 0;
  long long q = 1;

  RationalFlux() = default;
  RationalFlux(long long num, long long den);
  static RationalFlux parse(const std::string& text);  // "p/q" or an integer
  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

enum class BoundKind { kLower, kUpper, kExact };

struct BoundReport {
  std::string name;
  double value = 0.0;
  BoundKind kind = BoundKind::kLower;
  std::string formula;                    // human-readable identity of the constant
  std::map<std::string, double> params;   // d, N, alpha, K as applicable
};

std::string to_string(BoundKind k);

struct HardyLowerDetail {
  double value;
  double branch_one_over_n;  // (d-2)^2 / N
  double branch_quadratic;   // (d-2)^2 / (1 + sqrt(1 + 3(d-2)^2(N-1)(N-2)/(2(d-1)^2)))
  bool quadratic_branch_won;
};

/// max of the two lower-bound branches; requires d >= 3, N >= 2.
double hardy_lower_bound(int d, int n);
HardyLowerDetail hardy_lower_bound_detail(int d, int n);

/// (d-2)^2/(2N-2); the elementary pairwise chaining constant. d >= 3, N >= 2.
double naive_bound(int d, int n);

/// d^2/N, valid for antisymmetric functions in every dimension. N >= 2.
double fermi_bound(int d, int n);

/// The sharp one-dimensional constant.
constexpr double one_d_constant() { return 0.5; }

/// Gamma(d/2) for integer d via the half-integer recursion (bit-stable).
double gamma_half_integer(int d);

/// The reported Gaussian value (d/4)*pi^{d/2}*Gamma(d/2) assembled from the
/// closed-form single-particle integrals as printed; see README for the
/// discrepancy against the directly integrated pair term. d >= 3.
double gaussian_Dd(int d);

/// 2*gaussian_Dd(d)/(N-1). d >= 3, N >= 2.
double gaussian_upper_bound(int d, int n);

/// min over l=1..N-1 of (min_k |k - l*alpha| / l)^2, exact for rational flux.
double magnetic_constant(int n, const RationalFlux& alpha);
/// Float scan fallback for irrational flux values.
double magnetic_constant(int n, double alpha);

/// (d-2)^2/(2+K). K >= 0.
double k_asymptotic_bound(int d, double k_value);

/// (d-2)^2/(1 + sqrt(1 + ell*(d-2)^2)); solves the quadratic trade-off between
/// the pair and curvature terms. d >= 3, ell >= 0.
double case_b_bound(int d, double ell);

// BoundReport builders used by the CLI table.
BoundReport report_hardy_lower(int d, int n);
BoundReport report_naive(int d, int n);
BoundReport report_fermi(int d, int n);
BoundReport report_gaussian_upper(int d, int n);
BoundReport report_magnetic(int n, const RationalFlux& alpha);
BoundReport report_magnetic(int n, double alpha);  // float-scan path for decimals
BoundReport report_k_asymptotic(int d, double k_value);

}  // namespace hardytk::bounds

#endif
