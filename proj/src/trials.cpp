#include "hardytk/trials.hpp"

#include <algorithm>
#include <cmath>

namespace hardytk::trials {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Determinant by partial-pivoted elimination in a fixed row order, so the sign
// handling is reproducible bit-for-bit.
double det_pivoted(std::vector<double> a, int n) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      det = -det;
    }
    det *= a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

// Cofactor C_{rk} = (-1)^{r+k} det(minor_{rk}).
double cofactor(const std::vector<double>& a, int n, int row, int col) {
  std::vector<double> minor((n - 1) * (n - 1));
  int rr = 0;
  for (int r = 0; r < n; ++r) {
    if (r == row) continue;
    int cc = 0;
    for (int c = 0; c < n; ++c) {
      if (c == col) continue;
      minor[rr * (n - 1) + cc] = a[r * n + c];
      ++cc;
    }
    ++rr;
  }
  const double sign = ((row + col) % 2 == 0) ? 1.0 : -1.0;
  return (n == 1) ? sign : sign * det_pivoted(std::move(minor), n - 1);
}

}  // namespace

TrialFunction gaussian_product(int d, int n, double scale, const std::vector<double>& centers) {
  if (d < 1 || n < 1) throw std::invalid_argument("gaussian_product: bad shape");
  if (!(scale > 0.0)) throw std::invalid_argument("gaussian_product: scale must be positive");
  std::vector<double> cs = centers;
  if (cs.empty()) cs.assign(static_cast<std::size_t>(d) * n, 0.0);
  if (cs.size() != static_cast<std::size_t>(d) * n)
    throw std::invalid_argument("gaussian_product: centers must be N x d");
  const bool centered = std::all_of(cs.begin(), cs.end(), [](double v) { return v == 0.0; });

  TrialFunction u;
  u.family = "gaussian";
  u.dim = d;
  u.count = n;
  u.params = {{"d", double(d)}, {"N", double(n)}, {"s", scale}};
  const double inv_s2 = 1.0 / (scale * scale);

  u.eval = [cs, inv_s2](const Configuration& c) {
    double e = 0.0;
    for (std::size_t m = 0; m < c.coords.size(); ++m) {
      const double t = c.coords[m] - cs[m];
      e += t * t;
    }
    return std::exp(-0.5 * e * inv_s2);
  };
  u.grad = [cs, inv_s2, eval = u.eval](const Configuration& c, std::vector<double>& g) {
    const double v = eval(c);
    g.resize(c.coords.size());
    for (std::size_t m = 0; m < c.coords.size(); ++m)
      g[m] = -(c.coords[m] - cs[m]) * inv_s2 * v;
  };
  u.log_density = [cs, inv_s2](const Configuration& c) {
    double e = 0.0;
    for (std::size_t m = 0; m < c.coords.size(); ++m) {
      const double t = c.coords[m] - cs[m];
      e += t * t;
    }
    return -e * inv_s2;
  };
  // |u|^2 is a product of normals with per-coordinate variance s^2/2.
  const double sd = scale / std::sqrt(2.0);
  u.sampler = estimate::exact_sampler([cs, sd](CounterRng& rng, Configuration& c) {
    for (std::size_t m = 0; m < c.coords.size(); ++m) c.coords[m] = cs[m] + sd * rng.normal();
  });
  u.chain_init = Configuration(d, n, cs);

  if (centered) {
    const double mass1 = std::pow(kPi, d / 2.0) * std::pow(scale, d);
    const double kinetic1 = 0.5 * d * inv_s2 * mass1;
    u.closed_forms["mass1"] = mass1;
    u.closed_forms["kinetic1"] = kinetic1;
    u.closed_forms["mass"] = std::pow(mass1, n);
    u.closed_forms["T"] = n * kinetic1 * std::pow(mass1, n - 1);
    if (d >= 3) {
      // int int e^{-(|x|^2+|y|^2)/s^2} / |x-y|^2 = s^{2d-2} pi^d / (d-2).
      const double pair2 = std::pow(scale, 2 * d - 2) * std::pow(kPi, d) / (d - 2.0);
      u.closed_forms["pair2"] = pair2;
      if (n >= 2) {
        u.closed_forms["X"] = 0.5 * n * (n - 1.0) * pair2 * std::pow(mass1, n - 2);
        u.closed_forms["quotient"] = u.closed_forms["T"] / u.closed_forms["X"];
      }
    }
  }
  return u;
}

TrialFunction sharpness_1d(int n, const SharpnessParams& params) {
  if (n < 2) throw std::invalid_argument("sharpness_1d: requires N >= 2");
  if (!(params.delta > 0.0)) throw std::invalid_argument("sharpness_1d: delta must be positive");
  const double alpha = params.alpha();

  TrialFunction u;
  u.family = "sharpness1d";
  u.dim = 1;
  u.count = n;
  u.params = {{"N", double(n)}, {"delta", params.delta}, {"alpha", alpha}};

  u.eval = [n, alpha](const Configuration& c) {
    double logprod = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double r = std::abs(c.coords[i] - c.coords[j]);
        if (r == 0.0) return 0.0;  // diagonal: measure-zero zero set
        logprod += std::log(r);
      }
    return std::exp(2.0 * alpha * logprod - norm(c.coords));
  };
  u.grad = [n, alpha, eval = u.eval](const Configuration& c, std::vector<double>& g) {
    g.assign(c.coords.size(), 0.0);
    const double v = eval(c);
    if (v == 0.0) return;  // gradient treated as 0 on the zero set
    const double nx = norm(c.coords);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (c.coords[i] - c.coords[j]);
      g[i] = v * (2.0 * alpha * s - c.coords[i] / nx);
    }
  };
  u.log_density = [n, alpha](const Configuration& c) {
    double logprod = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double r = std::abs(c.coords[i] - c.coords[j]);
        if (r == 0.0) return -std::numeric_limits<double>::infinity();
        logprod += std::log(r);
      }
    return 4.0 * alpha * logprod - 2.0 * norm(c.coords);
  };
  Configuration init(1, n);
  for (int i = 0; i < n; ++i) init.coords[i] = i - 0.5 * (n - 1);
  u.chain_init = std::move(init);
  return u;
}

TrialFunction slater_gaussian(int d, int n, const std::vector<double>& centers) {
  if (d < 1 || n < 2) throw std::invalid_argument("slater_gaussian: bad shape");
  if (centers.size() != static_cast<std::size_t>(d) * n)
    throw std::invalid_argument("slater_gaussian: centers must be N x d");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double r2 = 0.0;
      for (int m = 0; m < d; ++m) {
        const double t = centers[a * d + m] - centers[b * d + m];
        r2 += t * t;
      }
      if (r2 == 0.0)
        throw DegenerateOrbitals("slater_gaussian: coincident centers give a vanishing determinant");
    }

  TrialFunction u;
  u.family = "slater";
  u.dim = d;
  u.count = n;
  u.params = {{"d", double(d)}, {"N", double(n)}};

  auto orbital_matrix = [d, n, centers](const Configuration& c) {
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        double e = 0.0;
        for (int m = 0; m < d; ++m) {
          const double t = c.point(i)[m] - centers[k * d + m];
          e += t * t;
        }
        a[i * n + k] = std::exp(-0.5 * e);
      }
    return a;
  };

  u.eval = [n, orbital_matrix](const Configuration& c) {
    return det_pivoted(orbital_matrix(c), n);
  };
  u.grad = [d, n, centers, orbital_matrix](const Configuration& c, std::vector<double>& g) {
    const std::vector<double> a = orbital_matrix(c);
    g.assign(c.coords.size(), 0.0);
    // d(det)/dx_{i,m} = sum_k C_{ik} * dA_{ik}/dx_{i,m}, cofactor expansion.
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const double cof = cofactor(a, n, i, k);
        for (int m = 0; m < d; ++m) {
          const double dphi = -(c.point(i)[m] - centers[k * d + m]) * a[i * n + k];
          g[static_cast<std::size_t>(i) * d + m] += cof * dphi;
        }
      }
  };
  u.log_density = [n, orbital_matrix](const Configuration& c) {
    const double v = det_pivoted(orbital_matrix(c), n);
    if (v == 0.0) return -std::numeric_limits<double>::infinity();
    return 2.0 * std::log(std::abs(v));
  };
  u.chain_init = Configuration(d, n, centers);
  return u;
}

TrialFunction odd_gaussian(int d) {
  if (d < 2) throw std::invalid_argument("odd_gaussian: requires d >= 2");
  TrialFunction u;
  u.family = "odd";
  u.dim = d;
  u.count = 1;
  u.params = {{"d", double(d)}};

  u.eval = [](const Configuration& c) {
    double e = 0.0;
    for (double x : c.coords) e += x * x;
    return c.coords[0] * std::exp(-0.5 * e);
  };
  u.grad = [d](const Configuration& c, std::vector<double>& g) {
    double e = 0.0;
    for (double x : c.coords) e += x * x;
    const double w = std::exp(-0.5 * e);
    g.assign(c.coords.size(), 0.0);
    for (int m = 0; m < d; ++m) g[m] = -c.coords[0] * c.coords[m] * w;
    g[0] += w;
  };
  u.log_density = [](const Configuration& c) {
    double e = 0.0;
    for (double x : c.coords) e += x * x;
    if (c.coords[0] == 0.0) return -std::numeric_limits<double>::infinity();
    return 2.0 * std::log(std::abs(c.coords[0])) - e;
  };
  // |u|^2 ~ x_1^2 e^{-|x|^2}: coordinates 2..d are N(0,1/2); |x_1| is the norm
  // of a 3-vector of N(0,1/2) draws (chi-decomposition), sign is a fair coin.
  u.sampler = estimate::exact_sampler([d](CounterRng& rng, Configuration& c) {
    const double inv_sqrt2 = 0.70710678118654752440;
    double s = 0.0;
    for (int t = 0; t < 3; ++t) {
      const double z = inv_sqrt2 * rng.normal();
      s += z * z;
    }
    const double sign = (rng.next_u64() & 1ULL) ? 1.0 : -1.0;
    c.coords[0] = sign * std::sqrt(s);
    for (int m = 1; m < d; ++m) c.coords[m] = inv_sqrt2 * rng.normal();
  });
  Configuration init(d, 1);
  init.coords[0] = 1.0;
  u.chain_init = std::move(init);

  // Closed forms for the |x|^{-2}-weighted quotient (Gaussian moments).
  u.closed_forms["weighted_quotient"] = d * (d + 2.0) / 4.0;
  return u;
}

std::vector<double> default_slater_centers(int d, int n, double spacing) {
  std::vector<double> cs(static_cast<std::size_t>(d) * n, 0.0);
  for (int k = 0; k < n; ++k) cs[static_cast<std::size_t>(k) * d] = spacing * (k - 0.5 * (n - 1));
  return cs;
}

// ---------------------------------------------------------------------------
// Radial profiles
// ---------------------------------------------------------------------------

RadialProfile RadialProfile::power_exp(double beta, double gamma) {
  if (!(beta > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("power_exp: beta and gamma must be positive");
  RadialProfile p;
  p.kind = Kind::kPowerExp;
  p.beta = beta;
  p.gamma = gamma;
  return p;
}

RadialProfile RadialProfile::log_plateau(double r0, double r1, double sharp) {
  if (!(r0 > 0.0) || !(r1 > r0) || !(sharp > 1.0))
    throw std::invalid_argument("log_plateau: need 0 < r0 < r1 and sharp > 1");
  RadialProfile p;
  p.kind = Kind::kLogPlateau;
  p.r0 = r0;
  p.r1 = r1;
  p.sharp = sharp;
  return p;
}

double RadialProfile::value(double r) const {
  if (kind == Kind::kPowerExp) return std::pow(r, beta) * std::exp(-gamma * r);
  const double a = r0 / sharp, b = r1 * sharp, lc = std::log(sharp);
  if (r <= a || r >= b) return 0.0;
  if (r < r0) return std::log(r / a) / lc;
  if (r <= r1) return 1.0;
  return std::log(b / r) / lc;
}

double RadialProfile::deriv(double r) const {
  if (kind == Kind::kPowerExp) {
    if (r == 0.0) return beta == 1.0 ? 1.0 : 0.0;  // quadrature nodes are interior anyway
    return (beta / r - gamma) * value(r);
  }
  const double a = r0 / sharp, b = r1 * sharp, lc = std::log(sharp);
  if (r <= a || r >= b) return 0.0;
  if (r < r0) return 1.0 / (r * lc);
  if (r <= r1) return 0.0;
  return -1.0 / (r * lc);
}

double RadialProfile::support_max() const {
  if (kind == Kind::kPowerExp) return (beta + 60.0) / gamma;  // e^{-gamma r} below 1e-26
  return r1 * sharp;
}

bool RadialProfile::valid(int m) const {
  if (kind == Kind::kPowerExp) return beta > 0.0 && gamma > 0.0;  // f(0) = 0 holds
  (void)m;
  return r0 > 0.0 && r1 > r0 && sharp > 1.0;
}

AbMode ab_mode(int m, const RadialProfile& profile) {
  if (!profile.valid(m)) throw std::invalid_argument("ab_mode: profile not integrable");
  return AbMode{m, profile};
}

double fd_gradient_worst_error(const TrialFunction& u, std::uint64_t seed, int n_points, double h,
                               double spread) {
  CounterRng rng(seed, 0xFD);
  std::vector<double> g;
  double worst = 0.0;
  for (int t = 0; t < n_points; ++t) {
    Configuration c(u.dim, u.count);
    if (u.chain_init) c = *u.chain_init;
    for (double& x : c.coords) x += spread * rng.normal();
    if (u.family == "sharpness1d" && c.min_dist_sq() < 1e-4) {
      --t;  // keep away from the zero set where v and grad v both vanish
      continue;
    }
    u.grad(c, g);
    double gnorm = 0.0;
    for (double v : g) gnorm += v * v;
    gnorm = std::sqrt(gnorm);
    Configuration probe = c;
    for (std::size_t m = 0; m < c.coords.size(); ++m) {
      const double x0 = c.coords[m];
      probe.coords[m] = x0 + h;
      const double fp = u.eval(probe);
      probe.coords[m] = x0 - h;
      const double fm = u.eval(probe);
      probe.coords[m] = x0;
      const double fd = (fp - fm) / (2.0 * h);
      const double err = std::abs(fd - g[m]) / std::max(gnorm, 1e-12);
      worst = std::max(worst, err);
    }
  }
  return worst;
}

}  // namespace hardytk::trials
