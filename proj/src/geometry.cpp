#include "hyperlaplace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperlaplace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_azimuth(double phi) {
  if (phi < 0.0) phi += kTwoPi;
  // -tiny + 2 pi rounds to 2 pi, which is outside [0, 2 pi).
  if (phi >= kTwoPi) phi = 0.0;
  return phi;
}

}  // namespace

void validate(const Angles& angles) {
  if (angles.dimension() < 3) {
    throw std::invalid_argument("ultraspherical angles need d >= 3 (at least one polar angle)");
  }
  for (double t : angles.theta) {
    if (!(t >= 0.0 && t <= std::numbers::pi)) {
      throw std::invalid_argument("polar angle " + std::to_string(t) + " outside [0, pi]");
    }
  }
  if (!(angles.phi >= 0.0 && angles.phi < kTwoPi)) {
    throw std::invalid_argument("azimuth " + std::to_string(angles.phi) + " outside [0, 2pi)");
  }
}

void validate(const UltrasphericalPoint& p) {
  if (!(p.r >= 0.0)) throw std::invalid_argument("radius must be nonnegative");
  validate(p.angles);
}

CartesianPoint to_cartesian(const UltrasphericalPoint& p) {
  validate(p);
  const int d = p.dimension();
  CartesianPoint out;
  out.x.assign(static_cast<std::size_t>(d), 0.0);
  double rj = p.r;
  // theta[k] is theta_{d-k}; it places x_{d-k}, i.e. out.x[d-k-1].
  for (int k = 0; k < d - 2; ++k) {
    const double t = p.angles.theta[static_cast<std::size_t>(k)];
    out.x[static_cast<std::size_t>(d - k - 1)] = rj * std::cos(t);
    rj *= std::sin(t);
  }
  out.x[0] = rj * std::cos(p.angles.phi);
  out.x[1] = rj * std::sin(p.angles.phi);
  return out;
}

UltrasphericalPoint to_ultraspherical(const CartesianPoint& x) {
  const int d = x.dimension();
  if (d < 3) throw std::invalid_argument("cartesian point needs d >= 3");

  // partial[j] = r_{j+1} = |(x_1, ..., x_{j+1})|, built with hypot for range safety.
  std::vector<double> partial(static_cast<std::size_t>(d));
  partial[0] = std::abs(x.x[0]);
  for (int j = 1; j < d; ++j) {
    partial[static_cast<std::size_t>(j)] =
        std::hypot(partial[static_cast<std::size_t>(j - 1)], x.x[static_cast<std::size_t>(j)]);
  }

  UltrasphericalPoint p;
  p.r = partial[static_cast<std::size_t>(d - 1)];
  p.angles.theta.assign(static_cast<std::size_t>(d - 2), 0.0);
  for (int k = 0; k < d - 2; ++k) {
    const auto j = static_cast<std::size_t>(d - k - 1);  // x_{d-k} lives at x[j]
    if (partial[j] > 0.0) {
      p.angles.theta[static_cast<std::size_t>(k)] = std::atan2(partial[j - 1], x.x[j]);
    }
  }
  p.angles.phi = partial[1] > 0.0 ? wrap_azimuth(std::atan2(x.x[1], x.x[0])) : 0.0;
  return p;
}

double solid_angle(int d) {
  if (d < 2) throw std::invalid_argument("solid angle needs d >= 2");
  const double half = 0.5 * d;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double cos_gamma(const Angles& a, const Angles& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("cos_gamma: dimension mismatch");
  }
  validate(a);
  validate(b);
  double c = std::cos(a.phi - b.phi);
  for (std::size_t k = a.theta.size(); k-- > 0;) {
    const double ta = a.theta[k];
    const double tb = b.theta[k];
    c = std::cos(ta) * std::cos(tb) + std::sin(ta) * std::sin(tb) * c;
  }
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace hyperlaplace
