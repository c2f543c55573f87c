#include "hardytk/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numeric>

namespace hardytk::estimate {

// ---------------------------------------------------------------------------
// Monte Carlo core
// ---------------------------------------------------------------------------

double McMoments::std_error(std::size_t i) const { return std::sqrt(std::max(0.0, cov_of_mean[i][i])); }

MCEstimate McMoments::component(std::size_t i) const {
  return MCEstimate{mean[i], std_error(i), n_samples, seed, n_rejected};
}

namespace {

struct ChunkAccum {
  std::vector<double> sum;        // per integrand
  std::vector<double> cross;      // upper-triangular sums of products
  std::vector<double> min_value;  // per integrand
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

ChunkAccum run_chunk(const std::vector<Integrand>& fs, const Sampler& sampler, int dim, int count,
                     std::uint64_t seed, std::uint64_t chunk_index, std::size_t chunk_samples) {
  const std::size_t m = fs.size();
  ChunkAccum acc;
  acc.sum.assign(m, 0.0);
  acc.cross.assign(m * (m + 1) / 2, 0.0);
  acc.min_value.assign(m, std::numeric_limits<double>::infinity());
  ChunkDraw draw = sampler(seed, chunk_index);
  Configuration c(dim, count);
  std::vector<double> vals(m);
  for (std::size_t s = 0; s < chunk_samples; ++s) {
    draw(c);
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      vals[i] = fs[i](c);
      if (!std::isfinite(vals[i])) ok = false;
    }
    if (!ok) {
      ++acc.rejected;
      continue;
    }
    ++acc.accepted;
    std::size_t t = 0;
    for (std::size_t i = 0; i < m; ++i) {
      acc.sum[i] += vals[i];
      acc.min_value[i] = std::min(acc.min_value[i], vals[i]);
      for (std::size_t j = i; j < m; ++j) acc.cross[t++] += vals[i] * vals[j];
    }
  }
  return acc;
}

}  // namespace

McMoments mc_moments(const std::vector<Integrand>& fs, const Sampler& sampler, int dim, int count,
                     const McOptions& opts) {
  if (opts.n < 2) throw std::invalid_argument("mc_moments: need n >= 2");
  if (fs.empty()) throw std::invalid_argument("mc_moments: no integrands");
  const std::size_t m = fs.size();
  const std::size_t chunk = std::max<std::size_t>(1, opts.chunk);
  const std::size_t n_chunks = (opts.n + chunk - 1) / chunk;

  std::vector<ChunkAccum> parts(n_chunks);
  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    for (std::size_t ci = 0; ci < n_chunks; ++ci) {
      const std::size_t take = std::min(chunk, opts.n - ci * chunk);
      parts[ci] = run_chunk(fs, sampler, dim, count, opts.seed, ci, take);
    }
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          const std::size_t ci = next.fetch_add(1);
          if (ci >= n_chunks) return;
          const std::size_t take = std::min(chunk, opts.n - ci * chunk);
          parts[ci] = run_chunk(fs, sampler, dim, count, opts.seed, ci, take);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  // Fixed-order reduction over chunks keeps results independent of `workers`.
  std::vector<double> sum(m, 0.0), cross(m * (m + 1) / 2, 0.0);
  std::vector<double> min_value(m, std::numeric_limits<double>::infinity());
  std::size_t n_ok = 0, n_rej = 0;
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < m; ++i) {
      sum[i] += part.sum[i];
      min_value[i] = std::min(min_value[i], part.min_value[i]);
    }
    for (std::size_t t = 0; t < cross.size(); ++t) cross[t] += part.cross[t];
    n_ok += part.accepted;
    n_rej += part.rejected;
  }
  if (n_ok == 0) throw AllRejected("mc_moments: every sample hit the rejection guard");

  McMoments out;
  out.n_samples = n_ok;
  out.n_rejected = n_rej;
  out.seed = opts.seed;
  out.min_value = std::move(min_value);
  out.mean.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.mean[i] = sum[i] / static_cast<double>(n_ok);
  out.cov_of_mean.assign(m, std::vector<double>(m, 0.0));
  if (n_ok > 1) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        const double cij =
            (cross[t++] - static_cast<double>(n_ok) * out.mean[i] * out.mean[j]) / (n_ok - 1.0);
        out.cov_of_mean[i][j] = out.cov_of_mean[j][i] = cij / static_cast<double>(n_ok);
      }
  }
  return out;
}

MCEstimate mc_mean(const Integrand& f, const Sampler& sampler, int dim, int count,
                   const McOptions& opts) {
  return mc_moments({f}, sampler, dim, count, opts).component(0);
}

McRatio mc_ratio(const Integrand& numerator, const Integrand& denominator, const Sampler& sampler,
                 int dim, int count, const McOptions& opts) {
  const McMoments m = mc_moments({numerator, denominator}, sampler, dim, count, opts);
  McRatio out;
  out.numerator = m.component(0);
  out.denominator = m.component(1);
  const double num = m.mean[0], den = m.mean[1];
  if (m.min_value[1] <= 0.0 && std::abs(den) < 5.0 * m.std_error(1))
    throw DenominatorNearZero("mc_ratio: denominator mean indistinguishable from zero");
  const double r = num / den;
  // Delta method: var(r) = grad^T Cov grad with grad = (1/den, -num/den^2).
  const double g0 = 1.0 / den, g1 = -num / (den * den);
  const double var = g0 * g0 * m.cov_of_mean[0][0] + 2.0 * g0 * g1 * m.cov_of_mean[0][1] +
                     g1 * g1 * m.cov_of_mean[1][1];
  out.ratio = MCEstimate{r, std::sqrt(std::max(0.0, var)), m.n_samples, m.seed, m.n_rejected};
  return out;
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

Sampler exact_sampler(std::function<void(CounterRng&, Configuration&)> fill) {
  return [fill = std::move(fill)](std::uint64_t seed, std::uint64_t chunk_index) -> ChunkDraw {
    CounterRng rng(seed, chunk_index);
    return [fill, rng](Configuration& c) mutable { fill(rng, c); };
  };
}

Sampler metropolis_sampler(LogDensity log_density, Configuration init, MetropolisOptions opts,
                           std::shared_ptr<AcceptanceStats> stats) {
  const double lp0 = log_density(init);
  if (!std::isfinite(lp0)) throw ZeroDensityInit("metropolis_sampler: zero density at init");
  if (!(opts.step > 0.0)) throw std::invalid_argument("metropolis_sampler: step must be positive");

  return [log_density = std::move(log_density), init = std::move(init), opts,
          stats](std::uint64_t seed, std::uint64_t chunk_index) -> ChunkDraw {
    struct Chain {
      LogDensity target;
      Configuration state;
      double lp;
      double step;
      std::size_t thinning;
      CounterRng rng;
      std::shared_ptr<AcceptanceStats> stats;

      bool advance() {
        Configuration prop = state;
        for (double& x : prop.coords) x += step * rng.normal();
        const double lpp = target(prop);
        // log(u) < lpp - lp, with -inf density always rejected
        if (std::isfinite(lpp) && std::log(rng.uniform01()) < lpp - lp) {
          state = std::move(prop);
          lp = lpp;
          return true;
        }
        return false;
      }
    };

    Chain chain{log_density, init, log_density(init), opts.step, opts.thinning,
                CounterRng(seed, chunk_index * 0x9E3779B9ULL + 1), stats};

    // Burn-in with optional step tuning in blocks of 200 proposals.
    std::size_t accepted = 0;
    const std::size_t block = 200;
    for (std::size_t i = 0; i < opts.burn_in; ++i) {
      if (chain.advance()) ++accepted;
      if (opts.auto_tune && (i + 1) % block == 0) {
        const double rate = static_cast<double>(accepted) / block;
        if (rate < 0.2)
          chain.step /= 1.3;
        else if (rate > 0.5)
          chain.step *= 1.3;
        accepted = 0;
      }
    }

    return [chain = std::move(chain)](Configuration& out) mutable {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < chain.thinning; ++t)
        if (chain.advance()) ++acc;
      if (chain.stats) {
        chain.stats->proposed += chain.thinning;
        chain.stats->accepted += acc;
      }
      out = chain.state;
    };
  };
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

QuadratureGrid QuadratureGrid::gauss_legendre(int order) {
  if (order < 2 || order > 64) throw std::invalid_argument("gauss_legendre: order in [2,64]");
  QuadratureGrid g;
  g.order = order;
  g.nodes.resize(order);
  g.weights.resize(order);
  const double pi = 3.14159265358979323846264338327950288;
  for (int i = 0; i < order; ++i) {
    // Newton on P_n from the Chebyshev initial guess.
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    g.nodes[i] = x;
    g.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return g;
}

namespace {

double panel_sum(const Fn1D& f, double a, double b, const QuadratureGrid& g, std::size_t panels) {
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (int i = 0; i < g.order; ++i) s += g.weights[i] * f(mid + 0.5 * h * g.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

}  // namespace

QuadResult integrate_bounded(const Fn1D& f, double a, double b, const QuadratureGrid& grid,
                             double rtol, int max_levels) {
  QuadResult r;
  double prev = panel_sum(f, a, b, grid, 1);
  for (int lvl = 1; lvl <= max_levels; ++lvl) {
    const double cur = panel_sum(f, a, b, grid, std::size_t{1} << lvl);
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    r.last_delta = std::abs(cur - prev) / scale;
    r.levels = lvl;
    prev = cur;
    if (r.last_delta <= rtol) {
      r.value = cur;
      return r;
    }
  }
  throw NonConvergent("integrate_bounded: refinement stalled above rtol");
}

QuadResult integrate_graded(const Fn1D& f, double a, double b, bool singular_at_a,
                            const QuadratureGrid& grid, double rtol) {
  // Dyadic panels shrinking toward the singular endpoint; each panel is
  // analytic for algebraic/log singularities, so fixed-order GL suffices.
  QuadResult r;
  const double len = b - a;
  double total = 0.0;
  double frac = 1.0;
  for (int k = 0; k < 900; ++k) {
    const double lo_frac = frac * 0.5;
    double pa, pb;
    if (singular_at_a) {
      pa = a + lo_frac * len;
      pb = a + frac * len;
    } else {
      pa = b - frac * len;
      pb = b - lo_frac * len;
    }
    double s = 0.0;
    for (int i = 0; i < grid.order; ++i)
      s += grid.weights[i] * f(0.5 * (pa + pb) + 0.5 * (pb - pa) * grid.nodes[i]);
    s *= 0.5 * (pb - pa);
    total += s;
    r.levels = k + 1;
    r.last_delta = std::abs(s) / std::max(std::abs(total), 1e-300);
    frac = lo_frac;
    if (r.last_delta <= rtol && k >= 8) break;
    if (frac * len < 1e-300) break;
  }
  r.value = total;
  return r;
}

QuadResult radial_quadrature(const Fn1D& f, const QuadratureGrid& grid, double rtol) {
  QuadResult r;
  double total = 0.0;
  double lo = 0.0, hi = 1.0;
  int quiet = 0;
  for (int k = 0; k < 64; ++k) {
    const QuadResult piece = integrate_bounded(f, lo, hi, grid, rtol, 22);
    total += piece.value;
    r.levels = std::max(r.levels, piece.levels);
    const double rel = std::abs(piece.value) / std::max(std::abs(total), 1e-300);
    r.last_delta = rel;
    quiet = (rel <= rtol) ? quiet + 1 : 0;
    if (quiet >= 2 && k >= 4) break;
    lo = hi;
    hi *= 2.0;
  }
  if (quiet < 2) throw NonConvergent("radial_quadrature: tail keeps contributing");
  r.value = total;
  return r;
}

QuadResult tensor_quadrature(const FnND& f, int dims, double lo, double hi,
                             const QuadratureGrid& grid, double rtol, int max_levels) {
  if (dims < 1 || dims > 4) throw std::invalid_argument("tensor_quadrature: dims in [1,4]");
  auto evaluate = [&](std::size_t panels) {
    const double h = (hi - lo) / static_cast<double>(panels);
    const std::size_t pts = panels * static_cast<std::size_t>(grid.order);
    std::vector<double> xs(pts), ws(pts);
    for (std::size_t p = 0; p < panels; ++p) {
      const double mid = lo + (p + 0.5) * h;
      for (int i = 0; i < grid.order; ++i) {
        xs[p * grid.order + i] = mid + 0.5 * h * grid.nodes[i];
        ws[p * grid.order + i] = 0.5 * h * grid.weights[i];
      }
    }
    std::vector<std::size_t> idx(dims, 0);
    std::vector<double> x(dims);
    double total = 0.0;
    for (;;) {
      double w = 1.0;
      for (int a = 0; a < dims; ++a) {
        x[a] = xs[idx[a]];
        w *= ws[idx[a]];
      }
      total += w * f(x);
      int a = 0;
      for (; a < dims; ++a) {
        if (++idx[a] < pts) break;
        idx[a] = 0;
      }
      if (a == dims) break;
    }
    return total;
  };

  QuadResult r;
  double prev = evaluate(1);
  for (int lvl = 1; lvl <= max_levels; ++lvl) {
    const double cur = evaluate(std::size_t{1} << lvl);
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    r.last_delta = std::abs(cur - prev) / scale;
    r.levels = lvl;
    prev = cur;
    if (r.last_delta <= rtol) {
      r.value = cur;
      return r;
    }
  }
  throw NonConvergent("tensor_quadrature: refinement stalled above rtol");
}

}  // namespace hardytk::estimate
