#ifndef HARDYTK_FUNCTIONALS_HPP
#define HARDYTK_FUNCTIONALS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardytk/estimate.hpp"
#include "hardytk/trials.hpp"
#include "hardytk/types.hpp"

namespace hardytk::functionals {

using estimate::MCEstimate;
using estimate::McOptions;
using trials::AbMode;
using trials::TrialFunction;

/// Rayleigh-quotient evaluation: T (kinetic), X (pair term), Z (curvature
/// term) as expectations under |u|^2, the quotient T/X with delta-method
/// error, and the named bound it was checked against, with the margin in
/// standard-error units (positive margin = satisfied).
struct QuotientResult {
  MCEstimate T;
  MCEstimate X;
  std::optional<MCEstimate> Z;
  MCEstimate quotient;
  std::string bound_name;
  double bound_value = 0.0;
  double margin_sigma = 0.0;
  bool bound_applicable = false;
  std::string family;
};

/// T/X on shared samples from |u|^2 (exact sampler when present, Metropolis
/// target otherwise). For d >= 3 the quotient is checked against the
/// closed-form lower bound.
QuotientResult hardy_quotient(const TrialFunction& u, const McOptions& opts);

enum class FieldKind { kF3, kG, kPair, kCenter, kPointHardy };

struct FieldSpec {
  FieldKind kind = FieldKind::kF3;
  double eps = 0.0;
  int j = 0, k = 1;  // for kPair
};

/// Both sides of the divergence inequality
///   T >= (1/4) E[div F]^2 / E[|F|^2]   (expectations under |u|^2),
/// returned as (rhs, T) with delta-method errors.
std::pair<MCEstimate, MCEstimate> div_lemma_bound(const TrialFunction& u, const FieldSpec& field,
                                                  const McOptions& opts);

/// Joint (T, X, Z) estimate plus the margin of
///   T (2X + Z) - (d-2)^2 X^2 >= 0
/// in delta-method sigma units. The inequality direction applies for d >= 3;
/// quantities are reported for every d.
QuotientResult divmain_check(const TrialFunction& u, const McOptions& opts);

/// hardy_quotient with an antisymmetry pre-check (20 random transpositions);
/// checks against d^2/N. Throws NotAntisymmetric.
QuotientResult fermi_quotient(const TrialFunction& u, const McOptions& opts);

/// Quotient int |grad u|^2 / int |u|^2/|x|^2 for the odd single-particle
/// family, via radial quadrature; verifies u(-x) = -u(x) at random points.
double odd_quotient(const TrialFunction& u);

/// [int f'^2 r dr + (alpha - m)^2 int f^2/r dr] / int f^2/r dr.
double ab_mode_quotient(double alpha, const AbMode& mode);

/// N sum |xi_j|^2 - sum_{j<k} |xi_j - xi_k|^2 - |sum xi_j|^2; zero identically.
double nn_identity_residual(const Configuration& xi);

/// Scaling family u_lambda(x) = u(lambda x): returns (lambda, lambda^2 (T - cX)/mass)
/// from the closed forms; demonstrates unboundedness when T - cX < 0.
std::vector<std::pair<double, double>> scaling_demo(const TrialFunction& u, double coupling,
                                                    const std::vector<double>& lambdas);

/// The sampling route used by the MC quotient ops for this trial function.
estimate::Sampler sampling_route(const TrialFunction& u);

/// Integrand |grad u / u|^2 with the near-diagonal rejection guard.
estimate::Integrand kinetic_integrand(const TrialFunction& u);
/// Integrand sum 1/r_ij^2 with the same guard.
estimate::Integrand pair_integrand(const TrialFunction& u);

}  // namespace hardytk::functionals

#endif
