#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// these oracles are used to check.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hyperlaplace/geometry.hpp"

namespace oracle {

// Fornberg's finite-difference weights for the m-th derivative at z over the
// given nodes. A 9-point stencil differentiates polynomials of degree <= 8
// exactly, so the only error left is roundoff.
inline std::vector<double> fd_weights(double z, const std::vector<double>& x, int m) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> c(n, std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - z;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min(static_cast<int>(i), m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][static_cast<std::size_t>(m)];
  return w;
}

template <typename F>
double fd_derivative(F&& f, double x, int m, double h = 0.1) {
  std::vector<double> nodes;
  for (int k = -4; k <= 4; ++k) nodes.push_back(x + k * h);
  const auto w = fd_weights(x, nodes, m);
  double s = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) s += w[j] * f(nodes[j]);
  return s;
}

// int_0^pi sin^a(t) dt by the reduction I(a) = (a-1)/a I(a-2), I(0) = pi, I(1) = 2.
inline double sine_power(int a) {
  double v = (a % 2 == 0) ? std::numbers::pi : 2.0;
  for (int k = (a % 2 == 0) ? 2 : 3; k <= a; k += 2) v *= (k - 1.0) / k;
  return v;
}

// int_0^pi sin^a cos^k by I(a,k) = (k-1)/(a+k) I(a,k-2).
inline double sine_cosine_moment(int a, int k) {
  if (k % 2 == 1) return 0.0;
  double v = sine_power(a);
  for (int j = 2; j <= k; j += 2) v *= (j - 1.0) / (a + j);
  return v;
}

// Composite Simpson on [0, pi]; used where a quadrature independent of the
// Gauss rules is wanted.
template <typename F>
double simpson(F&& f, int panels = 4000) {
  const double h = std::numbers::pi / panels;
  double s = f(0.0) + f(std::numbers::pi);
  for (int i = 1; i < panels; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

inline hyperlaplace::Angles random_angles(int d, std::mt19937_64& rng, double margin = 0.0) {
  std::uniform_real_distribution<double> theta(margin, std::numbers::pi - margin);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
  hyperlaplace::Angles a;
  for (int k = 0; k < d - 2; ++k) a.theta.push_back(theta(rng));
  a.phi = phi(rng);
  return a;
}

// Unit vector for a set of angles, built with the polar-axis recursion
// written out independently of to_cartesian.
inline std::vector<double> unit_vector(const hyperlaplace::Angles& a) {
  const int d = a.dimension();
  std::vector<double> x(static_cast<std::size_t>(d));
  double scale = 1.0;
  for (int j = d; j >= 3; --j) {
    const double t = a.theta[static_cast<std::size_t>(d - j)];
    x[static_cast<std::size_t>(j - 1)] = scale * std::cos(t);
    scale *= std::sin(t);
  }
  x[0] = scale * std::cos(a.phi);
  x[1] = scale * std::sin(a.phi);
  return x;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace oracle
