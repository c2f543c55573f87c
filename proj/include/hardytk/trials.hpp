#ifndef HARDYTK_TRIALS_HPP
#define HARDYTK_TRIALS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardytk/estimate.hpp"
#include "hardytk/types.hpp"

namespace hardytk::trials {

/// An evaluable scalar function on R^{dN} with analytic gradient. Immutable
/// after construction; samplers take explicit RNG streams, so sharing across
/// threads is safe.
struct TrialFunction {
  std::string family;  // "gaussian", "sharpness1d", "slater", "odd"
  int dim = 0;
  int count = 0;
  std::map<std::string, double> params;

  std::function<double(const Configuration&)> eval;
  // Gradient as an N*d row-major block vector.
  std::function<void(const Configuration&, std::vector<double>&)> grad;

  /// Exact draw from |u|^2 / int |u|^2, when one exists.
  std::optional<estimate::Sampler> sampler;
  /// log |u(x)|^2 up to an additive constant, for Metropolis targets.
  std::optional<estimate::LogDensity> log_density;
  /// Suggested Metropolis start away from the zero set.
  std::optional<Configuration> chain_init;

  /// Named closed-form integrals where available: "mass1", "kinetic1", "pair2"
  /// (single-particle mass/kinetic and the two-particle interaction integral),
  /// plus assembled totals "mass", "T", "X" and "quotient" = T/X.
  std::map<std::string, double> closed_forms;
};

struct SharpnessParams {
  double delta = 0.1;          // > 0
  double alpha() const { return 0.25 + delta; }
};

/// Product of isotropic Gaussians exp(-|x_i - c_i|^2 / (2 s^2)). Centers
/// default to the origin; closed forms require centered particles and d >= 3
/// for the pair term. Exact sampler: independent normals.
TrialFunction gaussian_product(int d, int n, double scale = 1.0,
                               const std::vector<double>& centers = {});

/// prod_{i<j} |x_i - x_j|^{2 alpha} * exp(-|x|) on R^N with alpha = 1/4 + delta.
/// Vanishes on the diagonals; sampled by Metropolis.
TrialFunction sharpness_1d(int n, const SharpnessParams& params);

/// Determinant of shifted Gaussians exp(-|x - c_k|^2/2); antisymmetric under
/// particle exchange. centers is N x d row-major with pairwise distinct rows.
TrialFunction slater_gaussian(int d, int n, const std::vector<double>& centers);

/// Single particle u = x_1 exp(-|x|^2/2), odd under x -> -x, with an exact
/// sampler via the chi-decomposition of the x_1^2-weighted marginal. d >= 2.
TrialFunction odd_gaussian(int d);

/// Evenly spaced centers along the first axis, the default Slater geometry.
std::vector<double> default_slater_centers(int d, int n, double spacing = 2.0);

// ---------------------------------------------------------------------------
// Planar flux modes
// ---------------------------------------------------------------------------

/// Radial profiles for single-mode planar functions f(r) e^{i m theta}.
struct RadialProfile {
  enum class Kind { kPowerExp, kLogPlateau };
  Kind kind = Kind::kPowerExp;

  // kPowerExp: f = r^beta exp(-gamma r), beta > 0, gamma > 0.
  double beta = 1.0;
  double gamma = 1.0;

  // kLogPlateau: ramps between 0 and 1 linearly in log r; support
  // [r0/sharp, r1*sharp], plateau [r0, r1], sharp > 1.
  double r0 = 1.0;
  double r1 = 10.0;
  double sharp = 8.0;

  static RadialProfile power_exp(double beta, double gamma);
  static RadialProfile log_plateau(double r0, double r1, double sharp);

  double value(double r) const;
  double deriv(double r) const;
  double support_max() const;  // beyond this the profile is negligible/zero
  bool valid(int m) const;     // integrability against r dr and dr/r; f(0)=0 if m != 0
};

struct AbMode {
  int m = 0;
  RadialProfile profile;
};

/// Single-mode planar function; the quotient machinery only needs (m, f).
AbMode ab_mode(int m, const RadialProfile& profile);

/// n random finite-difference gradient checks; returns the worst relative
/// error. Test helper shared by every family.
double fd_gradient_worst_error(const TrialFunction& u, std::uint64_t seed, int n_points,
                               double h = 1e-5, double spread = 1.0);

}  // namespace hardytk::trials

#endif
