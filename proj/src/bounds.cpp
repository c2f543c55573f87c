#include "hardytk/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hardytk::bounds {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_domain(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

RationalFlux::RationalFlux(long long num, long long den) : p(num), q(den) {
  if (den <= 0) throw std::invalid_argument("RationalFlux: denominator must be positive");
  const long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
}

RationalFlux RationalFlux::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return RationalFlux(std::stoll(text), 1);
  const long long num = std::stoll(text.substr(0, slash));
  const long long den = std::stoll(text.substr(slash + 1));
  return RationalFlux(num, den);
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kLower: return "lower";
    case BoundKind::kUpper: return "upper";
    case BoundKind::kExact: return "exact";
  }
  return "?";
}

HardyLowerDetail hardy_lower_bound_detail(int d, int n) {
  require_domain(d >= 3, "hardy_lower_bound: requires d >= 3");
  require_domain(n >= 2, "hardy_lower_bound: requires N >= 2");
  const double dm2sq = static_cast<double>(d - 2) * (d - 2);
  const double ell = 3.0 * dm2sq * (n - 1.0) * (n - 2.0) / (2.0 * (d - 1.0) * (d - 1.0));
  HardyLowerDetail out{};
  out.branch_one_over_n = dm2sq / n;
  out.branch_quadratic = dm2sq / (1.0 + std::sqrt(1.0 + ell));
  out.quadratic_branch_won = out.branch_quadratic > out.branch_one_over_n;
  out.value = std::max(out.branch_one_over_n, out.branch_quadratic);
  return out;
}

double hardy_lower_bound(int d, int n) { return hardy_lower_bound_detail(d, n).value; }

double naive_bound(int d, int n) {
  require_domain(d >= 3, "naive_bound: requires d >= 3");
  require_domain(n >= 2, "naive_bound: requires N >= 2");
  return static_cast<double>(d - 2) * (d - 2) / (2.0 * n - 2.0);
}

double fermi_bound(int d, int n) {
  require_domain(d >= 1, "fermi_bound: requires d >= 1");
  require_domain(n >= 2, "fermi_bound: requires N >= 2");
  return static_cast<double>(d) * d / n;
}

double gamma_half_integer(int d) {
  require_domain(d >= 1, "gamma_half_integer: requires d >= 1");
  // Gamma(d/2) by multiplying up from Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
  double g = (d % 2 == 1) ? std::sqrt(kPi) : 1.0;
  for (double x = (d % 2 == 1) ? 0.5 : 1.0; x < d / 2.0; x += 1.0) g *= x;
  return g;
}

double gaussian_Dd(int d) {
  require_domain(d >= 3, "gaussian_Dd: requires d >= 3");
  return 0.25 * d * std::pow(kPi, d / 2.0) * gamma_half_integer(d);
}

double gaussian_upper_bound(int d, int n) {
  require_domain(n >= 2, "gaussian_upper_bound: requires N >= 2");
  return 2.0 * gaussian_Dd(d) / (n - 1.0);
}

double magnetic_constant(int n, const RationalFlux& alpha) {
  require_domain(n >= 2, "magnetic_constant: requires N >= 2");
  // Exact: min_k |k - l p/q| = min(m, q-m)/q with m = (l p) mod q. Track the
  // minimum of num/(l q) across l by cross-multiplication in 128-bit.
  long long best_num = -1, best_den = 1;
  for (long long l = 1; l <= n - 1; ++l) {
    long long m = (l % alpha.q) * (alpha.p % alpha.q) % alpha.q;
    if (m < 0) m += alpha.q;
    const long long num = std::min(m, alpha.q - m);
    const long long den = l * alpha.q;
    if (best_num < 0 || static_cast<__int128>(num) * best_den < static_cast<__int128>(best_num) * den) {
      best_num = num;
      best_den = den;
    }
  }
  const double frac = static_cast<double>(best_num) / static_cast<double>(best_den);
  return frac * frac;
}

double magnetic_constant(int n, double alpha) {
  require_domain(n >= 2, "magnetic_constant: requires N >= 2");
  double best = std::numeric_limits<double>::infinity();
  for (int l = 1; l <= n - 1; ++l) {
    const double t = l * alpha;
    const double k0 = std::floor(t);
    double dmin = std::numeric_limits<double>::infinity();
    for (long long k = static_cast<long long>(k0) - 1; k <= static_cast<long long>(k0) + 2; ++k)
      dmin = std::min(dmin, std::abs(k - t));
    best = std::min(best, (dmin / l) * (dmin / l));
  }
  return best;
}

double k_asymptotic_bound(int d, double k_value) {
  require_domain(d >= 3, "k_asymptotic_bound: requires d >= 3");
  require_domain(k_value >= 0.0, "k_asymptotic_bound: requires K >= 0");
  return static_cast<double>(d - 2) * (d - 2) / (2.0 + k_value);
}

double case_b_bound(int d, double ell) {
  require_domain(d >= 3, "case_b_bound: requires d >= 3");
  require_domain(ell >= 0.0, "case_b_bound: requires ell >= 0");
  const double dm2sq = static_cast<double>(d - 2) * (d - 2);
  return dm2sq / (1.0 + std::sqrt(1.0 + ell * dm2sq));
}

BoundReport report_hardy_lower(int d, int n) {
  const auto detail = hardy_lower_bound_detail(d, n);
  BoundReport r;
  r.name = "hardy_lower";
  r.value = detail.value;
  r.kind = BoundKind::kLower;
  r.formula = "(d-2)^2 * max(1/N, 1/(1+sqrt(1+3(d-2)^2(N-1)(N-2)/(2(d-1)^2))))";
  r.params = {{"d", static_cast<double>(d)},
              {"N", static_cast<double>(n)},
              {"quadratic_branch", detail.quadratic_branch_won ? 1.0 : 0.0}};
  return r;
}

BoundReport report_naive(int d, int n) {
  return BoundReport{"naive_lower", naive_bound(d, n), BoundKind::kLower, "(d-2)^2/(2N-2)",
                     {{"d", static_cast<double>(d)}, {"N", static_cast<double>(n)}}};
}

BoundReport report_fermi(int d, int n) {
  return BoundReport{"fermi_lower", fermi_bound(d, n), BoundKind::kLower, "d^2/N",
                     {{"d", static_cast<double>(d)}, {"N", static_cast<double>(n)}}};
}

BoundReport report_gaussian_upper(int d, int n) {
  return BoundReport{"gaussian_upper", gaussian_upper_bound(d, n), BoundKind::kUpper,
                     "2*(d/4)*pi^(d/2)*Gamma(d/2)/(N-1)",
                     {{"d", static_cast<double>(d)}, {"N", static_cast<double>(n)}}};
}

BoundReport report_magnetic(int n, const RationalFlux& alpha) {
  return BoundReport{"magnetic_D", magnetic_constant(n, alpha), BoundKind::kExact,
                     "min_{l=1..N-1} (min_k |k - l*alpha| / l)^2",
                     {{"N", static_cast<double>(n)}, {"alpha", alpha.value()}}};
}

BoundReport report_magnetic(int n, double alpha) {
  return BoundReport{"magnetic_D", magnetic_constant(n, alpha), BoundKind::kExact,
                     "min_{l=1..N-1} (min_k |k - l*alpha| / l)^2 (float scan)",
                     {{"N", static_cast<double>(n)}, {"alpha", alpha}}};
}

BoundReport report_k_asymptotic(int d, double k_value) {
  return BoundReport{"k_asymptotic_lower", k_asymptotic_bound(d, k_value), BoundKind::kLower,
                     "(d-2)^2/(2+K)",
                     {{"d", static_cast<double>(d)}, {"K", k_value}}};
}

}  // namespace hardytk::bounds
