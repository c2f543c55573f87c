#include "hardytk/fields.hpp"

#include <cmath>
#include <complex>

#include "hardytk/geometry.hpp"

namespace hardytk::fields {

namespace {

double pair_r2_checked(const Configuration& c, int i, int j) {
  const double r2 = c.dist_sq(i, j);
  if (r2 == 0.0) throw CoincidentPoints("field kernel: coincident points");
  return r2;
}

double rho_sq_checked(const Configuration& c) {
  const double rho2 = c.dist_sq(0, 1) + c.dist_sq(0, 2) + c.dist_sq(1, 2);
  if (rho2 == 0.0) throw CoincidentPoints("field_G: all three points coincide");
  return rho2;
}

}  // namespace

FieldValue field_F3(const Configuration& c, double eps) {
  const int d = c.dim, n = c.count;
  FieldValue f(static_cast<std::size_t>(d) * n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const double w = 1.0 / (pair_r2_checked(c, j, k) + eps * eps);
      for (int m = 0; m < d; ++m) {
        const double diff = (c.point(j)[m] - c.point(k)[m]) * w;
        f[static_cast<std::size_t>(j) * d + m] += diff;
        f[static_cast<std::size_t>(k) * d + m] -= diff;
      }
    }
  return f;
}

double field_F3_div(const Configuration& c, double eps) {
  const int d = c.dim;
  const double e2 = eps * eps;
  double s = 0.0;
  for (int j = 0; j < c.count; ++j)
    for (int k = j + 1; k < c.count; ++k) {
      const double r2 = pair_r2_checked(c, j, k);
      const double den = r2 + e2;
      s += 2.0 * ((d - 2) * r2 + d * e2) / (den * den);
    }
  return s;
}

double field_F3_norm_sq(const Configuration& c) {
  return 2.0 * geometry::pair_density(c) + geometry::triple_density(c);
}

FieldValue field_G(const Configuration& c, double eps) {
  if (c.count != 3) throw std::invalid_argument("field_G: expects a three-particle configuration");
  const int d = c.dim;
  const double w = 1.0 / (rho_sq_checked(c) + eps * eps);
  FieldValue f(static_cast<std::size_t>(d) * 3, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int m = 0; m < d; ++m) {
      double v = 2.0 * c.point(i)[m];
      for (int j = 0; j < 3; ++j)
        if (j != i) v -= c.point(j)[m];
      f[static_cast<std::size_t>(i) * d + m] = v * w;
    }
  return f;
}

double field_G_div(const Configuration& c, double eps) {
  if (c.count != 3) throw std::invalid_argument("field_G_div: expects three particles");
  const double rho2 = rho_sq_checked(c);
  const double den = rho2 + eps * eps;
  return (6.0 * (c.dim - 1) * rho2 + 6.0 * c.dim * eps * eps) / (den * den);
}

double field_G_norm_sq(const Configuration& c, double eps) {
  if (c.count != 3) throw std::invalid_argument("field_G_norm_sq: expects three particles");
  const double rho2 = rho_sq_checked(c);
  const double den = rho2 + eps * eps;
  return 3.0 * rho2 / (den * den);
}

FieldValue field_pair(const Configuration& c, int j, int k, double eps) {
  if (j == k || j < 0 || k < 0 || j >= c.count || k >= c.count)
    throw std::invalid_argument("field_pair: invalid particle indices");
  const int d = c.dim;
  FieldValue f(static_cast<std::size_t>(d) * c.count, 0.0);
  const double w = 1.0 / (pair_r2_checked(c, j, k) + eps * eps);
  for (int m = 0; m < d; ++m) {
    const double diff = (c.point(j)[m] - c.point(k)[m]) * w;
    f[static_cast<std::size_t>(j) * d + m] = diff;
    f[static_cast<std::size_t>(k) * d + m] = -diff;
  }
  return f;
}

double field_pair_div(const Configuration& c, int j, int k, double eps) {
  const double r2 = pair_r2_checked(c, j, k);
  const double den = r2 + eps * eps;
  return 2.0 * ((c.dim - 2) * r2 + c.dim * eps * eps) / (den * den);
}

FieldValue field_center(const Configuration& c, double eps) {
  const int d = c.dim, n = c.count;
  std::vector<double> s(d, 0.0);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < d; ++m) s[m] += c.point(j)[m];
  double s2 = 0.0;
  for (int m = 0; m < d; ++m) s2 += s[m] * s[m];
  s2 += eps * eps;
  if (s2 == 0.0) throw CoincidentPoints("field_center: coordinate sum vanishes");
  FieldValue f(static_cast<std::size_t>(d) * n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < d; ++m) f[static_cast<std::size_t>(j) * d + m] = s[m] / (n * s2);
  return f;
}

double field_center_div(const Configuration& c, double eps) {
  const int d = c.dim, n = c.count;
  std::vector<double> s(d, 0.0);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < d; ++m) s[m] += c.point(j)[m];
  double s2 = 0.0;
  for (int m = 0; m < d; ++m) s2 += s[m] * s[m];
  const double den = s2 + eps * eps;
  if (den == 0.0) throw CoincidentPoints("field_center_div: coordinate sum vanishes");
  // sum_j div_j [s/(n*(|s|^2+eps^2))] = (d*(|s|^2+eps^2) - 2|s|^2)/(|s|^2+eps^2)^2
  return ((d - 2) * s2 + d * eps * eps) / (den * den);
}

double field_center_norm_sq(const Configuration& c, double eps) {
  const int d = c.dim, n = c.count;
  std::vector<double> s(d, 0.0);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < d; ++m) s[m] += c.point(j)[m];
  double s2 = 0.0;
  for (int m = 0; m < d; ++m) s2 += s[m] * s[m];
  const double den = s2 + eps * eps;
  if (den == 0.0) throw CoincidentPoints("field_center_norm_sq: coordinate sum vanishes");
  return s2 / (n * den * den);
}

FieldValue ab_field(const Configuration& c, double alpha) {
  if (c.dim != 2) throw std::invalid_argument("ab_field: requires planar configurations");
  const FieldValue base = field_F3(c);
  FieldValue f(base.size(), 0.0);
  for (int j = 0; j < c.count; ++j) {
    f[2 * static_cast<std::size_t>(j)] = -alpha * base[2 * static_cast<std::size_t>(j) + 1];
    f[2 * static_cast<std::size_t>(j) + 1] = alpha * base[2 * static_cast<std::size_t>(j)];
  }
  return f;
}

std::pair<double, double> complex_sum_identity(const Configuration& c) {
  if (c.dim != 2) throw std::invalid_argument("complex_sum_identity: requires planar configurations");
  const int n = c.count;
  double lhs = 0.0;
  for (int j = 0; j < n; ++j) {
    std::complex<double> acc(0.0, 0.0);
    const std::complex<double> zj(c.point(j)[0], c.point(j)[1]);
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      const std::complex<double> zk(c.point(k)[0], c.point(k)[1]);
      const std::complex<double> diff = zj - zk;
      if (diff == std::complex<double>(0.0, 0.0))
        throw CoincidentPoints("complex_sum_identity: coincident points");
      acc += 1.0 / diff;
    }
    lhs += std::norm(acc);
  }
  const double rhs = 2.0 * geometry::pair_density(c) + geometry::triple_density(c);
  return {lhs, rhs};
}

double fd_divergence(const FieldFn& field, const Configuration& c, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_divergence: step must be positive");
  Configuration probe = c;
  double div = 0.0;
  for (std::size_t m = 0; m < c.coords.size(); ++m) {
    const double x0 = c.coords[m];
    probe.coords[m] = x0 + h;
    const double fp = field(probe)[m];
    probe.coords[m] = x0 - h;
    const double fm = field(probe)[m];
    probe.coords[m] = x0;
    div += (fp - fm) / (2.0 * h);
  }
  return div;
}

double direct_norm_sq(const FieldValue& f) {
  double s = 0.0;
  for (double v : f) s += v * v;
  return s;
}

}  // namespace hardytk::fields
