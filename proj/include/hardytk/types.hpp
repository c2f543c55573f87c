#ifndef HARDYTK_TYPES_HPP
#define HARDYTK_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardytk {

// N points in R^d, row-major (particle index slowest). This is one point of
// R^{dN} and the argument of all geometric kernels and trial functions.
struct Configuration {
  int dim = 0;
  int count = 0;
  std::vector<double> coords;  // count * dim

  Configuration() = default;
  Configuration(int d, int n)
      : dim(d), count(n), coords(static_cast<std::size_t>(d) * static_cast<std::size_t>(n), 0.0) {
    if (d < 1 || n < 1) throw std::invalid_argument("Configuration: dim and count must be >= 1");
  }
  Configuration(int d, int n, std::vector<double> xs) : dim(d), count(n), coords(std::move(xs)) {
    if (d < 1 || n < 1) throw std::invalid_argument("Configuration: dim and count must be >= 1");
    if (coords.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(n))
      throw std::invalid_argument("Configuration: coords size mismatch");
  }

  std::span<const double> point(int i) const {
    return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
  }
  std::span<double> point(int i) {
    return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
  }

  double dist_sq(int i, int j) const {
    const double* a = coords.data() + static_cast<std::size_t>(i) * dim;
    const double* b = coords.data() + static_cast<std::size_t>(j) * dim;
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double t = a[k] - b[k];
      s += t * t;
    }
    return s;
  }

  double min_dist_sq() const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) m = std::min(m, dist_sq(i, j));
    return m;
  }

  double extent_sq() const {
    double m = 0.0;
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) m = std::max(m, dist_sq(i, j));
    return m;
  }

  bool all_finite() const {
    for (double v : coords)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline double dist_sq(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

// Error taxonomy shared across modules.
struct CoincidentPoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CoincidentAtoms : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateOrbitals : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAntisymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotOdd : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AllRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroDensityInit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DenominatorNearZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConvergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hardytk

#endif
