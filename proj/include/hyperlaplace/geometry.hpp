#pragma once

#include <vector>

namespace hyperlaplace {

/// Angular part of a point in ultraspherical coordinates.
///
/// `theta` holds the polar angles in chain order (theta_d, ..., theta_3), each
/// in [0, pi]; `phi` is the azimuth in [0, 2 pi). The dimension is
/// `theta.size() + 2`.
struct Angles {
  std::vector<double> theta;
  double phi = 0.0;

  int dimension() const { return static_cast<int>(theta.size()) + 2; }
};

/// Radius plus angle chain for a point in d dimensions.
struct UltrasphericalPoint {
  double r = 0.0;
  Angles angles;

  int dimension() const { return angles.dimension(); }
};

/// Cartesian coordinates stored as (x_1, ..., x_d). x_d is the polar axis of
/// theta_d and (x_1, x_2) is the plane of phi.
struct CartesianPoint {
  std::vector<double> x;

  int dimension() const { return static_cast<int>(x.size()); }
};

/// Throws std::invalid_argument unless the angles are inside their ranges and
/// the dimension is at least 3.
void validate(const Angles& angles);
void validate(const UltrasphericalPoint& p);

CartesianPoint to_cartesian(const UltrasphericalPoint& p);

/// Inverse of to_cartesian. Angles left undetermined by a vanishing
/// intermediate radius are set to 0, so the origin maps to r = 0 with all
/// angles zero.
UltrasphericalPoint to_ultraspherical(const CartesianPoint& x);

/// Surface measure of the unit (d-1)-sphere, 2 pi^{d/2} / Gamma(d/2).
double solid_angle(int d);

/// Cosine of the angle between two directions, from the recursion
/// cos g_d = cos t_d cos t'_d + sin t_d sin t'_d cos g_{d-1},
/// cos g_2 = cos(phi - phi'). Clamped to [-1, 1].
double cos_gamma(const Angles& a, const Angles& b);

}  // namespace hyperlaplace
