#include "hardytk/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "hardytk/geometry.hpp"
#include "hardytk/trials.hpp"

namespace hardytk::optimize {

double k_objective(const WeightedMeasure& mu) {
  const int n = mu.n_atoms(), d = mu.dim;
  if (n < 3) return 0.0;  // no nondegenerate triple
  auto atom = [&](int i) {
    return std::span<const double>(mu.atoms.data() + static_cast<std::size_t>(i) * d,
                                   static_cast<std::size_t>(d));
  };
  double den = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double r2 = dist_sq(atom(i), atom(j));
      if (r2 == 0.0) throw CoincidentAtoms("k_objective: coincident atoms");
      den += 2.0 * mu.weights[i] * mu.weights[j] / r2;
    }
  double num = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        num += 6.0 * mu.weights[i] * mu.weights[j] * mu.weights[k] *
               geometry::circumradius_inv_sq(atom(i), atom(j), atom(k));
  return num / den;
}

namespace {

// Positions plus softmax logits; the simplex constraint is kept implicitly.
struct KParams {
  int d = 0;
  int n = 0;
  std::vector<double> theta;  // n*d coords then n logits

  WeightedMeasure to_measure() const {
    WeightedMeasure mu;
    mu.dim = d;
    mu.atoms.assign(theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(n) * d);
    mu.weights.resize(n);
    double mx = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) mx = std::max(mx, theta[static_cast<std::size_t>(n) * d + i]);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
      mu.weights[i] = std::exp(theta[static_cast<std::size_t>(n) * d + i] - mx);
      z += mu.weights[i];
    }
    for (double& w : mu.weights) w /= z;
    return mu;
  }
};

double k_value_safe(const KParams& p) {
  try {
    return k_objective(p.to_measure());
  } catch (const CoincidentAtoms&) {
    return -std::numeric_limits<double>::infinity();
  }
}

}  // namespace

namespace {

struct RestartOutcome {
  KParams params;
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> trace;
};

// One ascent run; fully determined by (seed, restart index).
RestartOutcome run_restart(int d, int n_atoms, int iters, std::uint64_t seed, int restart) {
  CounterRng rng(seed, static_cast<std::uint64_t>(restart) + 1);
  KParams p{d, n_atoms, {}};
  p.theta.resize(static_cast<std::size_t>(n_atoms) * d + n_atoms);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_atoms) * d; ++i) p.theta[i] = rng.normal();
  // logits start at 0 = uniform weights

  RestartOutcome out;
  double f = k_value_safe(p);
  double step = 0.05;
  out.trace.reserve(iters);
  std::vector<double> grad(p.theta.size());
  for (int it = 0; it < iters; ++it) {
    const double h =
        1e-6 * std::max(1.0, std::abs(*std::max_element(
                                 p.theta.begin(), p.theta.end(),
                                 [](double a, double b) { return std::abs(a) < std::abs(b); })));
    for (std::size_t i = 0; i < p.theta.size(); ++i) {
      KParams plus = p, minus = p;
      plus.theta[i] += h;
      minus.theta[i] -= h;
      grad[i] = (k_value_safe(plus) - k_value_safe(minus)) / (2.0 * h);
    }
    KParams cand = p;
    for (std::size_t i = 0; i < p.theta.size(); ++i) cand.theta[i] += step * grad[i];
    const double fc = k_value_safe(cand);
    if (fc > f) {
      p = std::move(cand);
      f = fc;
      step *= 1.2;
    } else {
      step *= 0.5;
      if (step < 1e-14) break;
    }
    out.trace.push_back(f);
  }
  out.params = std::move(p);
  out.value = f;
  return out;
}

}  // namespace

KSearchResult maximize_K(int d, int n_atoms, int iters, int restarts, std::uint64_t seed) {
  if (n_atoms < 3) throw std::invalid_argument("maximize_K: needs at least 3 atoms");
  if (restarts < 1 || iters < 0) throw std::invalid_argument("maximize_K: bad budget");

  // Restarts are independent substreams; selection below is by value then
  // restart index, so the result does not depend on scheduling.
  std::vector<std::future<RestartOutcome>> futs;
  futs.reserve(restarts);
  for (int restart = 0; restart < restarts; ++restart)
    futs.push_back(std::async(std::launch::async, run_restart, d, n_atoms, iters, seed, restart));

  KSearchResult out;
  out.seed = seed;
  out.value = -std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < restarts; ++restart) {
    RestartOutcome r = futs[static_cast<std::size_t>(restart)].get();
    if (r.value > out.value) {
      out.value = r.value;
      out.best = r.params.to_measure();
      out.trace = std::move(r.trace);
      out.best_restart = restart;
    }
  }
  return out;
}

estimate::MCEstimate beta_delta(int n, double delta, const estimate::McOptions& opts) {
  const auto v = trials::sharpness_1d(n, trials::SharpnessParams{delta});
  const auto sampler = functionals::sampling_route(v);
  const auto pair = estimate::mc_mean(functionals::pair_integrand(v), sampler, 1, n, opts);
  const double alpha = 0.25 + delta;
  const double scale = 8.0 * alpha * alpha;
  // beta = 1/(scale * E[pair]); first-order error propagation of the reciprocal.
  estimate::MCEstimate out;
  out.mean = 1.0 / (scale * pair.mean);
  out.std_error = out.mean * (pair.std_error / pair.mean);
  out.n_samples = pair.n_samples;
  out.n_rejected = pair.n_rejected;
  out.seed = pair.seed;
  return out;
}

namespace {

struct Simplex {
  std::vector<std::vector<double>> pts;
  std::vector<double> vals;
};

}  // namespace

MinimizeResult minimize_quotient(const std::string& family, int d, int n, int budget,
                                 std::uint64_t seed, const estimate::McOptions& opts) {
  if (family != "gaussian")
    throw std::invalid_argument("minimize_quotient: unsupported family " + family);
  if (d < 3) throw std::invalid_argument("minimize_quotient: gaussian quotient needs d >= 3");

  const std::size_t dims = static_cast<std::size_t>(d) * n;  // per-particle centers
  estimate::McOptions eval_opts = opts;
  eval_opts.seed = seed;  // common random numbers: the objective is deterministic

  int evals = 0;
  auto objective = [&](const std::vector<double>& centers) {
    ++evals;
    const auto u = trials::gaussian_product(d, n, 1.0, centers);
    return functionals::hardy_quotient(u, eval_opts).quotient.mean;
  };

  std::vector<double> start(dims, 0.0);  // the isotropic point
  MinimizeResult out;
  out.best_params = start;
  double best_val = objective(start);

  if (budget > 0) {
    // Nelder-Mead with the standard 1/2/0.5/0.5 coefficients.
    Simplex s;
    s.pts.push_back(start);
    s.vals.push_back(best_val);
    for (std::size_t i = 0; i < dims; ++i) {
      auto p = start;
      p[i] += 0.5;
      s.pts.push_back(p);
      s.vals.push_back(objective(p));
    }
    while (evals < budget) {
      std::vector<std::size_t> order(s.pts.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return s.vals[a] < s.vals[b]; });
      const std::size_t best = order.front(), worst = order.back();
      const std::size_t second_worst = order[order.size() - 2];

      std::vector<double> centroid(dims, 0.0);
      for (std::size_t i = 0; i < s.pts.size(); ++i) {
        if (i == worst) continue;
        for (std::size_t k = 0; k < dims; ++k) centroid[k] += s.pts[i][k];
      }
      for (double& c : centroid) c /= static_cast<double>(s.pts.size() - 1);

      auto blend = [&](double t) {
        std::vector<double> p(dims);
        for (std::size_t k = 0; k < dims; ++k)
          p[k] = centroid[k] + t * (s.pts[worst][k] - centroid[k]);
        return p;
      };
      const auto refl = blend(-1.0);
      const double f_refl = objective(refl);
      if (f_refl < s.vals[best]) {
        const auto expa = blend(-2.0);
        const double f_expa = objective(expa);
        if (f_expa < f_refl) {
          s.pts[worst] = expa;
          s.vals[worst] = f_expa;
        } else {
          s.pts[worst] = refl;
          s.vals[worst] = f_refl;
        }
      } else if (f_refl < s.vals[second_worst]) {
        s.pts[worst] = refl;
        s.vals[worst] = f_refl;
      } else {
        const auto contr = blend(0.5);
        const double f_contr = objective(contr);
        if (f_contr < s.vals[worst]) {
          s.pts[worst] = contr;
          s.vals[worst] = f_contr;
        } else {
          for (std::size_t i = 0; i < s.pts.size(); ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < dims; ++k)
              s.pts[i][k] = 0.5 * (s.pts[i][k] + s.pts[best][k]);
            s.vals[i] = objective(s.pts[i]);
            if (evals >= budget) break;
          }
        }
      }
    }
    const auto it = std::min_element(s.vals.begin(), s.vals.end());
    if (*it < best_val) {
      best_val = *it;
      out.best_params = s.pts[static_cast<std::size_t>(it - s.vals.begin())];
    }
  }

  const auto u = trials::gaussian_product(d, n, 1.0, out.best_params);
  out.quotient = functionals::hardy_quotient(u, eval_opts);
  out.evaluations = evals;
  return out;
}

}  // namespace hardytk::optimize
