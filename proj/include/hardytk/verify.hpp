#ifndef HARDYTK_VERIFY_HPP
#define HARDYTK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hardytk/rng.hpp"
#include "hardytk/types.hpp"

namespace hardytk::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;  // residual, margin or measured quantity backing the verdict
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 200000;  // MC budget per stochastic check
  int n_triangles = 10000;       // per dimension
  int n_configs = 1000;          // per (d, N) combination
  int n_identity = 10000;
};

std::vector<CheckResult> suite_geometry(const SuiteOptions& opts);
std::vector<CheckResult> suite_fields(const SuiteOptions& opts);
std::vector<CheckResult> suite_identities(const SuiteOptions& opts);
std::vector<CheckResult> suite_hardy(const SuiteOptions& opts);
std::vector<CheckResult> suite_sharpness(const SuiteOptions& opts);
std::vector<CheckResult> suite_fermion(const SuiteOptions& opts);
std::vector<CheckResult> suite_magnetic(const SuiteOptions& opts);

/// Known suite names for the CLI; "all" concatenates everything.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts);

bool all_pass(const std::vector<CheckResult>& checks);

// Shared generators ---------------------------------------------------------

/// Gaussian triangle with bounded aspect (all sides within 3x of each other,
/// circumradius at most 3x the longest side), so the curvature identities are
/// conditioned to well below the test tolerances.
void random_nondegenerate_triangle(CounterRng& rng, int d, std::vector<double>& p1,
                                   std::vector<double>& p2, std::vector<double>& p3);

/// Gaussian cloud with min pair separation >= min_sep (singularities are
/// measure zero; finite-difference oracles need a smoothness scale).
Configuration random_separated_config(CounterRng& rng, int d, int n, double min_sep = 0.2);

}  // namespace hardytk::verify

#endif
