#ifndef HARDYTK_GEOMETRY_HPP
#define HARDYTK_GEOMETRY_HPP

#include <array>
#include <span>

#include "hardytk/types.hpp"

namespace hardytk::geometry {

using Point = std::span<const double>;

struct TriangleMetrics {
  std::array<double, 3> side_sq;  // a^2 = |p2-p3|^2, b^2 = |p1-p3|^2, c^2 = |p1-p2|^2
  double inv_circum_sq;           // 1/R^2, 0 for collinear triples
  double menger_b;                // b = 1/(2R^2) for dim >= 2, 0 in 1D
};

/// Sum over pairs of 1/r_ij^2. Throws CoincidentPoints if any pair coincides.
double pair_density(const Configuration& c);

/// 1/R^2 of the triangle p1 p2 p3, computed from squared side lengths
/// (16*Area^2/(a^2 b^2 c^2), Heron in squared sides). Collinear triples give 0;
/// values below 1e-14/max(side^2) are clamped to 0. Coincident points throw.
double circumradius_inv_sq(Point p1, Point p2, Point p3);

/// The three-inner-product curvature kernel. Equals circumradius_inv_sq/2 for
/// dim >= 2 and is identically 0 in one dimension.
double menger_b(Point p1, Point p2, Point p3);

/// Sum over unordered triples of 1/R_ijk^2; identically 0 for dim == 1.
double triple_density(const Configuration& c);

/// r12^2 + r13^2 + r23^2.
double rho_sq(Point p1, Point p2, Point p3);

/// The ordered chain (1/R^2, 9/rho^2, sum 1/side^2); each entry bounds the next
/// from below, with equality exactly at the equilateral triangle.
std::array<double, 3> triangle_chain(Point p1, Point p2, Point p3);

/// LHS - RHS of the squared-sides/inner-products identity; zero up to rounding.
double mm_identity_residual(Point p1, Point p2, Point p3);

TriangleMetrics triangle_metrics(Point p1, Point p2, Point p3);

}  // namespace hardytk::geometry

#endif
