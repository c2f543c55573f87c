#include "hardytk/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hardytk::geometry {

namespace {

// Squared sides opposite to each vertex; throws on a coincident pair.
std::array<double, 3> side_sq_checked(Point p1, Point p2, Point p3) {
  const double a2 = dist_sq(p2, p3);
  const double b2 = dist_sq(p1, p3);
  const double c2 = dist_sq(p1, p2);
  if (a2 == 0.0 || b2 == 0.0 || c2 == 0.0)
    throw CoincidentPoints("triangle kernel: two points coincide");
  return {a2, b2, c2};
}

double inv_circum_sq_from_sides(double a2, double b2, double c2) {
  // 16*Area^2 via Heron in squared side lengths.
  const double heron16 = 2.0 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2);
  const double max_sq = std::max({a2, b2, c2});
  const double inv = heron16 / (a2 * b2 * c2);
  if (!(inv > 1e-14 / max_sq)) return 0.0;  // collinear within rounding
  return inv;
}

}  // namespace

double pair_density(const Configuration& c) {
  if (c.count < 2) throw std::invalid_argument("pair_density: need at least two points");
  double s = 0.0;
  for (int i = 0; i < c.count; ++i)
    for (int j = i + 1; j < c.count; ++j) {
      const double r2 = c.dist_sq(i, j);
      if (r2 == 0.0) throw CoincidentPoints("pair_density: coincident points");
      s += 1.0 / r2;
    }
  return s;
}

double circumradius_inv_sq(Point p1, Point p2, Point p3) {
  const auto [a2, b2, c2] = side_sq_checked(p1, p2, p3);
  return inv_circum_sq_from_sides(a2, b2, c2);
}

double menger_b(Point p1, Point p2, Point p3) {
  const auto [a2, b2, c2] = side_sq_checked(p1, p2, p3);
  if (p1.size() == 1) return 0.0;  // curvature of collinear points
  const std::size_t d = p1.size();
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    t1 += (p1[k] - p2[k]) * (p1[k] - p3[k]);
    t2 += (p2[k] - p1[k]) * (p2[k] - p3[k]);
    t3 += (p3[k] - p1[k]) * (p3[k] - p2[k]);
  }
  return t1 / (c2 * b2) + t2 / (c2 * a2) + t3 / (b2 * a2);
}

double triple_density(const Configuration& c) {
  if (c.count < 2) throw std::invalid_argument("triple_density: need at least two points");
  if (c.dim == 1) {
    // Still surface coincidences as errors before returning the 1D value.
    for (int i = 0; i < c.count; ++i)
      for (int j = i + 1; j < c.count; ++j)
        if (c.dist_sq(i, j) == 0.0) throw CoincidentPoints("triple_density: coincident points");
    return 0.0;
  }
  double s = 0.0;
  for (int i = 0; i < c.count; ++i)
    for (int j = i + 1; j < c.count; ++j)
      for (int k = j + 1; k < c.count; ++k)
        s += circumradius_inv_sq(c.point(i), c.point(j), c.point(k));
  return s;
}

double rho_sq(Point p1, Point p2, Point p3) {
  return dist_sq(p1, p2) + dist_sq(p1, p3) + dist_sq(p2, p3);
}

std::array<double, 3> triangle_chain(Point p1, Point p2, Point p3) {
  const auto [a2, b2, c2] = side_sq_checked(p1, p2, p3);
  const double inv_r2 = inv_circum_sq_from_sides(a2, b2, c2);
  const double nine_over_rho = 9.0 / (a2 + b2 + c2);
  const double side_sum = 1.0 / a2 + 1.0 / b2 + 1.0 / c2;
  return {inv_r2, nine_over_rho, side_sum};
}

double mm_identity_residual(Point p1, Point p2, Point p3) {
  const std::size_t d = p1.size();
  double lhs = dist_sq(p1, p2) + dist_sq(p1, p3) + dist_sq(p2, p3);
  double inner = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    inner += (p1[k] - p2[k]) * (p1[k] - p3[k]);
    inner += (p2[k] - p1[k]) * (p2[k] - p3[k]);
    inner += (p3[k] - p1[k]) * (p3[k] - p2[k]);
  }
  return lhs - 2.0 * inner;
}

TriangleMetrics triangle_metrics(Point p1, Point p2, Point p3) {
  TriangleMetrics m{};
  m.side_sq = side_sq_checked(p1, p2, p3);
  m.inv_circum_sq = inv_circum_sq_from_sides(m.side_sq[0], m.side_sq[1], m.side_sq[2]);
  m.menger_b = menger_b(p1, p2, p3);
  return m;
}

}  // namespace hardytk::geometry
