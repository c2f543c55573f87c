#include "hardytk/functionals.hpp"

#include <cmath>

#include "hardytk/bounds.hpp"
#include "hardytk/fields.hpp"
#include "hardytk/geometry.hpp"

namespace hardytk::functionals {

namespace {

constexpr double kRejectRadiusSq = 1e-24;  // (1e-12)^2, relative to unit extent

// Near-coincidence guard: configurations this close to the singular set are
// rejected (NaN) and counted by the MC layer rather than averaged.
bool near_singular(const Configuration& c) {
  if (c.count < 2) return false;
  const double scale = std::max(1.0, c.extent_sq());
  return c.min_dist_sq() < kRejectRadiusSq * scale;
}

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

MCEstimate ratio_from_moments(const estimate::McMoments& m, std::size_t i, std::size_t j) {
  const double num = m.mean[i], den = m.mean[j];
  const double g0 = 1.0 / den, g1 = -num / (den * den);
  const double var = g0 * g0 * m.cov_of_mean[i][i] + 2.0 * g0 * g1 * m.cov_of_mean[i][j] +
                     g1 * g1 * m.cov_of_mean[j][j];
  return MCEstimate{num / den, std::sqrt(std::max(0.0, var)), m.n_samples, m.seed, m.n_rejected};
}

}  // namespace

estimate::Sampler sampling_route(const TrialFunction& u) {
  if (u.sampler) return *u.sampler;
  if (!u.log_density || !u.chain_init)
    throw std::invalid_argument("trial function has neither sampler nor Metropolis target");
  estimate::MetropolisOptions mopts;
  return estimate::metropolis_sampler(*u.log_density, *u.chain_init, mopts);
}

estimate::Integrand kinetic_integrand(const TrialFunction& u) {
  return [u](const Configuration& c) {
    if (near_singular(c)) return quiet_nan();
    const double v = u.eval(c);
    if (v == 0.0) return quiet_nan();
    std::vector<double> g;
    u.grad(c, g);
    double s = 0.0;
    for (double x : g) s += x * x;
    return s / (v * v);
  };
}

estimate::Integrand pair_integrand(const TrialFunction& u) {
  (void)u;
  return [](const Configuration& c) {
    if (near_singular(c)) return quiet_nan();
    return geometry::pair_density(c);
  };
}

QuotientResult hardy_quotient(const TrialFunction& u, const McOptions& opts) {
  if (u.count < 2) throw std::invalid_argument("hardy_quotient: needs N >= 2");
  const auto sampler = sampling_route(u);
  const auto ratio =
      estimate::mc_ratio(kinetic_integrand(u), pair_integrand(u), sampler, u.dim, u.count, opts);
  QuotientResult out;
  out.family = u.family;
  out.T = ratio.numerator;
  out.X = ratio.denominator;
  out.quotient = ratio.ratio;
  if (u.dim >= 3) {
    out.bound_applicable = true;
    out.bound_name = "hardy_lower";
    out.bound_value = bounds::hardy_lower_bound(u.dim, u.count);
  } else if (u.dim == 1 && u.family == "sharpness1d") {
    // vanishes on the diagonals, so the sharp one-dimensional constant applies
    out.bound_applicable = true;
    out.bound_name = "one_d_constant";
    out.bound_value = bounds::one_d_constant();
  }
  if (out.bound_applicable)
    out.margin_sigma = (out.quotient.mean - out.bound_value) /
                       std::max(out.quotient.std_error, 1e-300);
  return out;
}

std::pair<MCEstimate, MCEstimate> div_lemma_bound(const TrialFunction& u, const FieldSpec& field,
                                                  const McOptions& opts) {
  // Closed-form div F and |F|^2 per field kind.
  auto div_fn = [field](const Configuration& c) -> double {
    switch (field.kind) {
      case FieldKind::kF3: return fields::field_F3_div(c, field.eps);
      case FieldKind::kG: return fields::field_G_div(c, field.eps);
      case FieldKind::kPair: return fields::field_pair_div(c, field.j, field.k, field.eps);
      case FieldKind::kCenter: return fields::field_center_div(c, field.eps);
      case FieldKind::kPointHardy: {
        double s2 = 0.0;
        for (double x : c.coords) s2 += x * x;
        const int m = c.dim * c.count;
        const double den = s2 + field.eps * field.eps;
        return ((m - 2) * s2 + m * field.eps * field.eps) / (den * den);
      }
    }
    return 0.0;
  };
  auto norm_fn = [field](const Configuration& c) -> double {
    switch (field.kind) {
      case FieldKind::kF3:
        return field.eps == 0.0 ? fields::field_F3_norm_sq(c)
                                : fields::direct_norm_sq(fields::field_F3(c, field.eps));
      case FieldKind::kG: return fields::field_G_norm_sq(c, field.eps);
      case FieldKind::kPair:
        return fields::direct_norm_sq(fields::field_pair(c, field.j, field.k, field.eps));
      case FieldKind::kCenter: return fields::field_center_norm_sq(c, field.eps);
      case FieldKind::kPointHardy: {
        double s2 = 0.0;
        for (double x : c.coords) s2 += x * x;
        const double den = s2 + field.eps * field.eps;
        return s2 / (den * den);
      }
    }
    return 0.0;
  };

  const auto sampler = sampling_route(u);
  estimate::Integrand f_kin = kinetic_integrand(u);
  estimate::Integrand f_div = [div_fn](const Configuration& c) {
    if (near_singular(c)) return quiet_nan();
    return div_fn(c);
  };
  estimate::Integrand f_norm = [norm_fn](const Configuration& c) {
    if (near_singular(c)) return quiet_nan();
    return norm_fn(c);
  };

  const auto m = estimate::mc_moments({f_kin, f_div, f_norm}, sampler, u.dim, u.count, opts);
  const MCEstimate t = m.component(0);
  // rhs = E[div]^2 / (4 E[|F|^2]); delta method with grad (E[div]/(2E), -E[div]^2/(4E^2)).
  const double ed = m.mean[1], en = m.mean[2];
  const double rhs = ed * ed / (4.0 * en);
  const double g1 = ed / (2.0 * en), g2 = -ed * ed / (4.0 * en * en);
  const double var = g1 * g1 * m.cov_of_mean[1][1] + 2.0 * g1 * g2 * m.cov_of_mean[1][2] +
                     g2 * g2 * m.cov_of_mean[2][2];
  const MCEstimate rhs_est{rhs, std::sqrt(std::max(0.0, var)), m.n_samples, m.seed, m.n_rejected};
  return {rhs_est, t};
}

QuotientResult divmain_check(const TrialFunction& u, const McOptions& opts) {
  if (u.count < 2) throw std::invalid_argument("divmain_check: needs N >= 2");
  const auto sampler = sampling_route(u);
  estimate::Integrand f_z = [](const Configuration& c) {
    if (near_singular(c)) return quiet_nan();
    return geometry::triple_density(c);
  };
  const auto m = estimate::mc_moments({kinetic_integrand(u), pair_integrand(u), f_z}, sampler,
                                      u.dim, u.count, opts);
  QuotientResult out;
  out.family = u.family;
  out.T = m.component(0);
  out.X = m.component(1);
  out.Z = m.component(2);
  out.quotient = ratio_from_moments(m, 0, 1);

  // Margin of M = T(2X+Z) - (d-2)^2 X^2 in sigma units via the delta method.
  const double dm2sq = static_cast<double>(u.dim - 2) * (u.dim - 2);
  const double t = m.mean[0], x = m.mean[1], z = m.mean[2];
  const double margin = t * (2.0 * x + z) - dm2sq * x * x;
  const double gt = 2.0 * x + z, gx = 2.0 * t - 2.0 * dm2sq * x, gz = t;
  double var = 0.0;
  const double grad[3] = {gt, gx, gz};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) var += grad[i] * grad[j] * m.cov_of_mean[i][j];
  out.bound_applicable = u.dim >= 3;
  out.bound_name = "divmain";
  out.bound_value = 0.0;
  out.margin_sigma = margin / std::max(std::sqrt(std::max(0.0, var)), 1e-300);
  return out;
}

QuotientResult fermi_quotient(const TrialFunction& u, const McOptions& opts) {
  // Antisymmetry gate: u(... x_i ... x_j ...) = -u(... x_j ... x_i ...).
  CounterRng rng(opts.seed ^ 0xA5A5A5A5ULL, 0xFE);
  for (int t = 0; t < 20; ++t) {
    Configuration c(u.dim, u.count);
    for (double& x : c.coords) x = 2.0 * rng.normal();
    const int i = static_cast<int>(rng.uniform_index(u.count));
    int j = static_cast<int>(rng.uniform_index(u.count - 1));
    if (j >= i) ++j;
    Configuration swapped = c;
    for (int m = 0; m < u.dim; ++m)
      std::swap(swapped.point(i)[m], swapped.point(j)[m]);
    const double a = u.eval(c), b = u.eval(swapped);
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    if (std::abs(a + b) > 1e-9 * scale)
      throw NotAntisymmetric("fermi_quotient: trial function is not antisymmetric");
  }
  QuotientResult out = hardy_quotient(u, opts);
  out.bound_applicable = true;
  out.bound_name = "fermi_lower";
  out.bound_value = bounds::fermi_bound(u.dim, u.count);
  out.margin_sigma =
      (out.quotient.mean - out.bound_value) / std::max(out.quotient.std_error, 1e-300);
  return out;
}

double odd_quotient(const TrialFunction& u) {
  if (u.count != 1 || u.dim < 2) throw NotOdd("odd_quotient: expects a single d>=2 particle");
  CounterRng rng(0xDD, 1);
  for (int t = 0; t < 32; ++t) {
    Configuration c(u.dim, 1);
    for (double& x : c.coords) x = 1.5 * rng.normal();
    Configuration neg = c;
    for (double& x : neg.coords) x = -x;
    const double a = u.eval(c), b = u.eval(neg);
    if (std::abs(a + b) > 1e-10 * std::max({std::abs(a), std::abs(b), 1e-300}))
      throw NotOdd("odd_quotient: u(-x) != -u(x)");
  }
  if (u.family != "odd")
    throw NotOdd("odd_quotient: no radial reduction available for this family");

  // u = x_1 g(r), g = exp(-r^2/2): angular averages of x_1^2 give the pair of
  // radial integrals below; |S^{d-1}| cancels in the quotient.
  const int d = u.dim;
  const auto grid = estimate::QuadratureGrid::gauss_legendre(16);
  auto g = [](double r) { return std::exp(-0.5 * r * r); };
  auto gp = [](double r) { return -r * std::exp(-0.5 * r * r); };
  const double t_val =
      estimate::radial_quadrature(
          [&](double r) {
            const double gr = g(r), gpr = gp(r);
            return gr * gr * std::pow(r, d - 1) + (2.0 / d) * gr * gpr * std::pow(r, d) +
                   (1.0 / d) * gpr * gpr * std::pow(r, d + 1);
          },
          grid, 1e-12)
          .value;
  const double w_val =
      estimate::radial_quadrature(
          [&](double r) { return (1.0 / d) * g(r) * g(r) * std::pow(r, d - 1); }, grid, 1e-12)
          .value;
  return t_val / w_val;
}

double ab_mode_quotient(double alpha, const AbMode& mode) {
  const auto grid = estimate::QuadratureGrid::gauss_legendre(16);
  const double rmax = mode.profile.support_max();
  // Piecewise integration with graded meshes toward 0 handles r^{2b-1} and the
  // log-ramp kinks.
  auto f2_over_r = [&](double r) {
    const double v = mode.profile.value(r);
    return v * v / r;
  };
  auto fp2_r = [&](double r) {
    const double dv = mode.profile.deriv(r);
    return dv * dv * r;
  };

  double mass_w = 0.0, kin_r = 0.0;
  if (mode.profile.kind == trials::RadialProfile::Kind::kPowerExp) {
    mass_w = estimate::integrate_graded(f2_over_r, 0.0, rmax, true, grid, 1e-11).value;
    kin_r = estimate::integrate_graded(fp2_r, 0.0, rmax, true, grid, 1e-11).value;
  } else {
    const double a = mode.profile.r0 / mode.profile.sharp;
    const double b = mode.profile.r1 * mode.profile.sharp;
    auto piecewise = [&](const estimate::Fn1D& fn) {
      double s = 0.0;
      s += estimate::integrate_bounded(fn, a, mode.profile.r0, grid, 1e-11).value;
      s += estimate::integrate_bounded(fn, mode.profile.r0, mode.profile.r1, grid, 1e-11).value;
      s += estimate::integrate_bounded(fn, mode.profile.r1, b, grid, 1e-11).value;
      return s;
    };
    mass_w = piecewise(f2_over_r);
    kin_r = piecewise(fp2_r);
  }
  if (!(mass_w > 0.0)) throw std::invalid_argument("ab_mode_quotient: profile has zero mass");
  const double am = alpha - mode.m;
  return (kin_r + am * am * mass_w) / mass_w;
}

double nn_identity_residual(const Configuration& xi) {
  const int n = xi.count, d = xi.dim;
  double lhs = 0.0;
  for (double v : xi.coords) lhs += v * v;
  lhs *= n;
  double pairs = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) pairs += xi.dist_sq(j, k);
  std::vector<double> s(d, 0.0);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < d; ++m) s[m] += xi.point(j)[m];
  double sum_sq = 0.0;
  for (double v : s) sum_sq += v * v;
  return lhs - pairs - sum_sq;
}

std::vector<std::pair<double, double>> scaling_demo(const TrialFunction& u, double coupling,
                                                    const std::vector<double>& lambdas) {
  const auto t_it = u.closed_forms.find("T");
  const auto x_it = u.closed_forms.find("X");
  const auto m_it = u.closed_forms.find("mass");
  if (t_it == u.closed_forms.end() || x_it == u.closed_forms.end() || m_it == u.closed_forms.end())
    throw std::invalid_argument("scaling_demo: closed forms T, X, mass required");
  const double base = (t_it->second - coupling * x_it->second) / m_it->second;
  std::vector<std::pair<double, double>> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) out.emplace_back(l, l * l * base);
  return out;
}

}  // namespace hardytk::functionals
