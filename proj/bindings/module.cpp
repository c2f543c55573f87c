// Python bindings for the main operations: geometric kernels, closed-form
// constants, field identities, Rayleigh-quotient estimates and the curvature
// ratio search. Configurations cross the boundary as (N, d) numpy arrays.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardytk/bounds.hpp"
#include "hardytk/fields.hpp"
#include "hardytk/functionals.hpp"
#include "hardytk/geometry.hpp"
#include "hardytk/optimize.hpp"
#include "hardytk/trials.hpp"
#include "hardytk/verify.hpp"

namespace py = pybind11;
using namespace hardytk;

namespace {

Configuration to_config(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected an (N, d) array");
  const int n = static_cast<int>(a.shape(0));
  const int d = static_cast<int>(a.shape(1));
  Configuration c(d, n);
  std::copy(a.data(), a.data() + static_cast<std::size_t>(n) * d, c.coords.begin());
  if (!c.all_finite()) throw std::invalid_argument("coordinates must be finite");
  return c;
}

py::array_t<double> to_array(int n, int d, const std::vector<double>& v) {
  py::array_t<double> out({n, d});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::dict mc_dict(const estimate::MCEstimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["stderr"] = e.std_error;
  d["n_samples"] = e.n_samples;
  d["n_rejected"] = e.n_rejected;
  d["seed"] = e.seed;
  return d;
}

py::dict quotient_dict(const functionals::QuotientResult& q) {
  py::dict d;
  d["family"] = q.family;
  d["T"] = mc_dict(q.T);
  d["X"] = mc_dict(q.X);
  if (q.Z) d["Z"] = mc_dict(*q.Z);
  d["quotient"] = mc_dict(q.quotient);
  if (q.bound_applicable) {
    d["bound_name"] = q.bound_name;
    d["bound_value"] = q.bound_value;
    d["margin_sigma"] = q.margin_sigma;
  }
  return d;
}

bounds::RationalFlux parse_flux(const py::object& alpha) {
  if (py::isinstance<py::str>(alpha)) return bounds::RationalFlux::parse(alpha.cast<std::string>());
  if (py::isinstance<py::int_>(alpha)) return bounds::RationalFlux(alpha.cast<long long>(), 1);
  throw std::invalid_argument("alpha must be 'p/q' or an integer; use magnetic_constant_float");
}

trials::TrialFunction make_trial(const std::string& family, int d, int n, double scale,
                                 double delta, double spacing) {
  if (family == "gaussian") return trials::gaussian_product(d, n, scale);
  if (family == "sharpness1d") return trials::sharpness_1d(n, trials::SharpnessParams{delta});
  if (family == "slater")
    return trials::slater_gaussian(d, n, trials::default_slater_centers(d, n, spacing));
  if (family == "odd") return trials::odd_gaussian(d);
  throw std::invalid_argument("unknown family: " + family);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Many-particle Hardy inequality toolkit: geometric kernels, closed-form "
            "constants, Monte Carlo Rayleigh quotients and the curvature ratio search.";

  // geometry ---------------------------------------------------------------
  m.def("pair_density", [](const py::array_t<double>& a) {
    return geometry::pair_density(to_config(a));
  }, py::arg("points"), "Sum over pairs of 1/r_ij^2 for an (N, d) array.");
  m.def("triple_density", [](const py::array_t<double>& a) {
    return geometry::triple_density(to_config(a));
  }, py::arg("points"), "Sum over triples of the inverse squared circumradius.");
  m.def("circumradius_inv_sq", [](const std::vector<double>& p1, const std::vector<double>& p2,
                                  const std::vector<double>& p3) {
    return geometry::circumradius_inv_sq(p1, p2, p3);
  });
  m.def("menger_b", [](const std::vector<double>& p1, const std::vector<double>& p2,
                       const std::vector<double>& p3) { return geometry::menger_b(p1, p2, p3); });
  m.def("triangle_chain", [](const std::vector<double>& p1, const std::vector<double>& p2,
                             const std::vector<double>& p3) {
    return geometry::triangle_chain(p1, p2, p3);
  });

  // fields -----------------------------------------------------------------
  m.def("field_pairwise", [](const py::array_t<double>& a, double eps) {
    const Configuration c = to_config(a);
    return to_array(c.count, c.dim, fields::field_F3(c, eps));
  }, py::arg("points"), py::arg("eps") = 0.0);
  m.def("field_pairwise_div", [](const py::array_t<double>& a, double eps) {
    return fields::field_F3_div(to_config(a), eps);
  }, py::arg("points"), py::arg("eps") = 0.0);
  m.def("field_pairwise_norm_sq", [](const py::array_t<double>& a) {
    return fields::field_F3_norm_sq(to_config(a));
  }, py::arg("points"));
  m.def("flux_field", [](const py::array_t<double>& a, double alpha) {
    const Configuration c = to_config(a);
    return to_array(c.count, c.dim, fields::ab_field(c, alpha));
  }, py::arg("points"), py::arg("alpha"));
  m.def("complex_sum_identity", [](const py::array_t<double>& a) {
    return fields::complex_sum_identity(to_config(a));
  }, py::arg("points"), "Returns (lhs, rhs) of the planar sum identity.");
  m.def("gradient_split_residual", [](const py::array_t<double>& a) {
    return functionals::nn_identity_residual(to_config(a));
  }, py::arg("xi"));

  // bounds -----------------------------------------------------------------
  m.def("hardy_lower_bound", &bounds::hardy_lower_bound, py::arg("d"), py::arg("N"));
  m.def("naive_bound", &bounds::naive_bound, py::arg("d"), py::arg("N"));
  m.def("fermi_bound", &bounds::fermi_bound, py::arg("d"), py::arg("N"));
  m.def("one_d_constant", []() { return bounds::one_d_constant(); });
  m.def("gaussian_upper_bound", &bounds::gaussian_upper_bound, py::arg("d"), py::arg("N"));
  m.def("k_asymptotic_bound", &bounds::k_asymptotic_bound, py::arg("d"), py::arg("K"));
  m.def("case_b_bound", &bounds::case_b_bound, py::arg("d"), py::arg("ell"));
  m.def("magnetic_constant", [](int n, const py::object& alpha) {
    return bounds::magnetic_constant(n, parse_flux(alpha));
  }, py::arg("N"), py::arg("alpha"), "Exact value for rational flux 'p/q' or integer flux.");
  m.def("magnetic_constant_float", [](int n, double alpha) {
    return bounds::magnetic_constant(n, alpha);
  }, py::arg("N"), py::arg("alpha"));

  // quotients ---------------------------------------------------------------
  m.def("hardy_quotient",
        [](const std::string& family, int d, int n, std::size_t samples, std::uint64_t seed,
           double scale, double delta, double spacing) {
          estimate::McOptions mc;
          mc.n = samples;
          mc.seed = seed;
          const auto u = make_trial(family, d, n, scale, delta, spacing);
          const auto q = family == "slater" ? functionals::fermi_quotient(u, mc)
                                            : functionals::hardy_quotient(u, mc);
          return quotient_dict(q);
        },
        py::arg("family"), py::arg("d"), py::arg("N"), py::arg("samples") = 100000,
        py::arg("seed") = 0, py::arg("scale") = 1.0, py::arg("delta") = 0.1,
        py::arg("spacing") = 2.0,
        "Monte Carlo Rayleigh quotient T/X for a named trial family.");
  m.def("odd_quotient", [](int d) {
    return functionals::odd_quotient(trials::odd_gaussian(d));
  }, py::arg("d"));
  m.def("ab_mode_quotient", [](double alpha, int mode_m, const std::string& kind, double a,
                               double b, double c) {
    trials::RadialProfile prof = kind == "power_exp"
                                     ? trials::RadialProfile::power_exp(a, b)
                                     : trials::RadialProfile::log_plateau(a, b, c);
    return functionals::ab_mode_quotient(alpha, trials::ab_mode(mode_m, prof));
  }, py::arg("alpha"), py::arg("m"), py::arg("kind") = "power_exp", py::arg("a") = 1.0,
     py::arg("b") = 1.0, py::arg("c") = 8.0);
  m.def("gaussian_closed_forms", [](int d, int n, double scale) {
    return trials::gaussian_product(d, n, scale).closed_forms;
  }, py::arg("d"), py::arg("N"), py::arg("scale") = 1.0);

  // optimization -------------------------------------------------------------
  m.def("k_objective", [](const py::array_t<double>& atoms, const std::vector<double>& weights) {
    const Configuration c = to_config(atoms);
    optimize::WeightedMeasure mu;
    mu.dim = c.dim;
    mu.atoms = c.coords;
    mu.weights = weights;
    return optimize::k_objective(mu);
  }, py::arg("atoms"), py::arg("weights"));
  m.def("maximize_K", [](int d, int n_atoms, int iters, int restarts, std::uint64_t seed) {
    const auto r = optimize::maximize_K(d, n_atoms, iters, restarts, seed);
    py::dict out;
    out["value"] = r.value;
    out["atoms"] = to_array(n_atoms, d, r.best.atoms);
    out["weights"] = r.best.weights;
    out["trace"] = r.trace;
    out["best_restart"] = r.best_restart;
    return out;
  }, py::arg("d"), py::arg("n_atoms"), py::arg("iters") = 2000, py::arg("restarts") = 8,
     py::arg("seed") = 0);
  m.def("beta_delta", [](int n, double delta, std::size_t samples, std::uint64_t seed) {
    estimate::McOptions mc;
    mc.n = samples;
    mc.seed = seed;
    return mc_dict(optimize::beta_delta(n, delta, mc));
  }, py::arg("N"), py::arg("delta"), py::arg("samples") = 100000, py::arg("seed") = 0);

  // verification --------------------------------------------------------------
  m.def("verify_suite", [](const std::string& name, std::uint64_t seed, std::size_t samples) {
    verify::SuiteOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    const auto checks = verify::run_suite(name, opts);
    py::list out;
    for (const auto& c : checks) {
      py::dict d;
      d["name"] = c.name;
      d["pass"] = c.pass;
      d["value"] = c.value;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  }, py::arg("name"), py::arg("seed") = 42, py::arg("samples") = 50000);

  py::register_exception<CoincidentPoints>(m, "CoincidentPointsError");
  py::register_exception<NotAntisymmetric>(m, "NotAntisymmetricError");
}
