#ifndef HARDYTK_OPTIMIZE_HPP
#define HARDYTK_OPTIMIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hardytk/estimate.hpp"
#include "hardytk/functionals.hpp"

namespace hardytk::optimize {

/// Atomic probability measure: n atoms in R^d with nonnegative weights
/// summing to 1.
struct WeightedMeasure {
  int dim = 0;
  std::vector<double> atoms;    // n x d row-major
  std::vector<double> weights;  // n entries, >= 0, sum 1

  int n_atoms() const { return static_cast<int>(weights.size()); }
};

/// Curvature-to-pair-energy ratio over ordered index sums:
///   [sum_{i,j,k distinct} w_i w_j w_k / R^2] / [sum_{i != j} w_i w_j / r_ij^2].
/// Repeated-index triples contribute 0 (the R = infinity reading); coincident
/// distinct atoms are an error. Scale- and rotation-invariant, degree 0.
double k_objective(const WeightedMeasure& mu);

struct KSearchResult {
  WeightedMeasure best;
  double value = 0.0;
  std::vector<double> trace;  // best-so-far per accepted step, nondecreasing
  std::uint64_t seed = 0;
  int best_restart = 0;
};

/// Gradient ascent on atom positions and softmax weight logits with
/// finite-difference gradients, adaptive step and random restarts. The result
/// is a feasible measure, so its value is a certified lower bound for K.
KSearchResult maximize_K(int d, int n_atoms, int iters, int restarts, std::uint64_t seed);

/// beta(delta) = 1 / (8 alpha^2 E[pair_density]) under the sharpness-family
/// squared density, estimated by Metropolis.
estimate::MCEstimate beta_delta(int n, double delta, const estimate::McOptions& opts);

struct MinimizeResult {
  std::vector<double> best_params;
  functionals::QuotientResult quotient;
  int evaluations = 0;
};

/// Derivative-free Nelder-Mead over a trial-family parametrization with
/// common-random-number MC objectives. Currently supported family: "gaussian"
/// with per-particle centers (the isotropic point is the start, so the result
/// never exceeds it by more than noise). budget counts objective evaluations.
MinimizeResult minimize_quotient(const std::string& family, int d, int n, int budget,
                                 std::uint64_t seed, const estimate::McOptions& opts);

}  // namespace hardytk::optimize

#endif
