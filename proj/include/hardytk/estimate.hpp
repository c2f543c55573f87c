#ifndef HARDYTK_ESTIMATE_HPP
#define HARDYTK_ESTIMATE_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hardytk/rng.hpp"
#include "hardytk/types.hpp"

namespace hardytk::estimate {

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::size_t n_rejected = 0;
};

/// Integrands return a value per configuration; a non-finite value marks the
/// sample as rejected (singularity guard) and is counted, not averaged.
using Integrand = std::function<double(const Configuration&)>;

/// A ChunkDraw produces consecutive samples of one chunk; a Sampler builds an
/// independent ChunkDraw for every (seed, chunk) pair. Exact samplers just wrap
/// a CounterRng; Metropolis runs its per-chunk burn-in inside the factory, so
/// results never depend on how chunks are distributed over workers.
using ChunkDraw = std::function<void(Configuration&)>;
using Sampler = std::function<ChunkDraw(std::uint64_t seed, std::uint64_t chunk_index)>;

struct McOptions {
  std::size_t n = 100000;
  std::uint64_t seed = 0;
  std::size_t chunk = 16384;
  int workers = 1;
};

/// Joint estimate of several integrand means on shared samples.
/// cov_of_mean is the covariance matrix of the sample means.
struct McMoments {
  std::vector<double> mean;
  std::vector<std::vector<double>> cov_of_mean;
  std::vector<double> min_value;  // per integrand, over accepted samples
  std::size_t n_samples = 0;
  std::size_t n_rejected = 0;
  std::uint64_t seed = 0;

  double std_error(std::size_t i) const;
  MCEstimate component(std::size_t i) const;
};

McMoments mc_moments(const std::vector<Integrand>& fs, const Sampler& sampler, int dim, int count,
                     const McOptions& opts);

MCEstimate mc_mean(const Integrand& f, const Sampler& sampler, int dim, int count,
                   const McOptions& opts);

struct McRatio {
  MCEstimate numerator;
  MCEstimate denominator;
  MCEstimate ratio;  // delta-method standard error
};

/// Ratio of means on shared samples with delta-method error propagation.
/// Throws DenominatorNearZero when |den| < 5 * stderr(den) and the denominator
/// samples take non-positive values; a strictly positive denominator is bounded
/// away from zero even when a heavy upper tail inflates its sigma estimate.
McRatio mc_ratio(const Integrand& numerator, const Integrand& denominator, const Sampler& sampler,
                 int dim, int count, const McOptions& opts);

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

/// Independent draws: fill(rng, config) generates one exact sample.
Sampler exact_sampler(std::function<void(CounterRng&, Configuration&)> fill);

using LogDensity = std::function<double(const Configuration&)>;

struct MetropolisOptions {
  double step = 1.0;
  std::size_t burn_in = 4000;
  std::size_t thinning = 5;
  bool auto_tune = true;  // adjusts the step during burn-in toward ~0.2-0.5 acceptance
};

struct AcceptanceStats {
  std::atomic<std::uint64_t> proposed{0};
  std::atomic<std::uint64_t> accepted{0};
  double rate() const {
    const auto p = proposed.load();
    return p ? static_cast<double>(accepted.load()) / static_cast<double>(p) : 0.0;
  }
};

/// Random-walk Metropolis with isotropic Gaussian proposals targeting
/// exp(log_density). Zero-density proposals are always rejected; throws
/// ZeroDensityInit if the chain cannot start. `stats`, when given, accumulates
/// post-burn-in acceptance counts across chunks.
Sampler metropolis_sampler(LogDensity log_density, Configuration init, MetropolisOptions opts = {},
                           std::shared_ptr<AcceptanceStats> stats = nullptr);

// ---------------------------------------------------------------------------
// Deterministic quadrature
// ---------------------------------------------------------------------------

struct QuadratureGrid {
  int order = 16;
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // positive, summing to 2

  static QuadratureGrid gauss_legendre(int order);
};

struct QuadResult {
  double value = 0.0;
  double last_delta = 0.0;  // relative change of the final refinement
  int levels = 0;
};

using Fn1D = std::function<double(double)>;

/// Composite rule on [a,b], panels doubled until the relative change of two
/// successive refinements is <= rtol. Throws NonConvergent past max_levels.
QuadResult integrate_bounded(const Fn1D& f, double a, double b, const QuadratureGrid& grid,
                             double rtol = 1e-10, int max_levels = 22);

/// Dyadically graded mesh toward one endpoint; handles integrable endpoint
/// singularities (powers, logs) at spectral cost.
QuadResult integrate_graded(const Fn1D& f, double a, double b, bool singular_at_a,
                            const QuadratureGrid& grid, double rtol = 1e-10);

/// Integral over (0, inf) for integrands decaying at infinity: geometric
/// panels [0,1],[1,2],[2,4],... until the tail stops contributing.
QuadResult radial_quadrature(const Fn1D& f, const QuadratureGrid& grid, double rtol = 1e-10);

using FnND = std::function<double(const std::vector<double>&)>;

/// Tensor-product rule over the box [lo,hi]^dims for dims <= 4, refined by
/// doubling panels per axis until successive values agree to rtol.
QuadResult tensor_quadrature(const FnND& f, int dims, double lo, double hi,
                             const QuadratureGrid& grid, double rtol = 1e-8, int max_levels = 10);

}  // namespace hardytk::estimate

#endif
