#ifndef HARDYTK_FIELDS_HPP
#define HARDYTK_FIELDS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hardytk/types.hpp"

namespace hardytk::fields {

/// A vector field value on R^{dN}, stored like Configuration::coords
/// (one d-block per particle, row-major).
using FieldValue = std::vector<double>;

using FieldFn = std::function<FieldValue(const Configuration&)>;

/// Block j = sum_{k != j} (x_j - x_k) / (r_jk^2 + eps^2).
FieldValue field_F3(const Configuration& c, double eps = 0.0);

/// Closed-form divergence of the pairwise-difference field. At eps = 0 this is
/// 2(d-2) * pair_density; the regularized form is exact for any eps.
double field_F3_div(const Configuration& c, double eps = 0.0);

/// Closed form 2*pair_density + triple_density (eps = 0 only).
double field_F3_norm_sq(const Configuration& c);

/// Three-particle field with blocks (2x_1-x_2-x_3, ...)/(rho^2 + eps^2).
FieldValue field_G(const Configuration& c, double eps = 0.0);
double field_G_div(const Configuration& c, double eps = 0.0);   // 6(d-1)/rho^2 at eps = 0
double field_G_norm_sq(const Configuration& c, double eps = 0.0);  // 3/rho^2 at eps = 0

/// Single-pair field: +/- (x_j - x_k)/r_jk^2 in blocks j and k, zero elsewhere.
FieldValue field_pair(const Configuration& c, int j, int k, double eps = 0.0);
double field_pair_div(const Configuration& c, int j, int k, double eps = 0.0);  // 2(d-2)/r_jk^2 at eps = 0

/// Averaged center-of-mass field: every block equals s/(N*|s|^2) with
/// s = sum_j x_j, so the total divergence is (d-2)/|s|^2. Translation-sensitive.
FieldValue field_center(const Configuration& c, double eps = 0.0);
double field_center_div(const Configuration& c, double eps = 0.0);
double field_center_norm_sq(const Configuration& c, double eps = 0.0);

/// Planar flux field: block j is alpha times the 90-degree rotation of the
/// pairwise-difference block. Requires dim == 2.
FieldValue ab_field(const Configuration& c, double alpha);

/// Both sides of the planar sum identity:
/// lhs = sum_j |sum_{k != j} 1/(z_j - z_k)|^2 from complex arithmetic,
/// rhs = 2*pair_density + triple_density.
std::pair<double, double> complex_sum_identity(const Configuration& c);

/// Central-difference divergence over all N*d coordinates; O(h^2).
double fd_divergence(const FieldFn& field, const Configuration& c, double h);

double direct_norm_sq(const FieldValue& f);

}  // namespace hardytk::fields

#endif
