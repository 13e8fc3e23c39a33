#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/summation.hpp"

namespace hyperlaplace {

/// Gauss rule for int_0^pi sin^alpha(theta) f(cos theta) dtheta.
struct ThetaRule {
  int alpha = 0;
  std::vector<double> nodes;    // theta values, strictly increasing in (0, pi)
  std::vector<double> weights;  // positive

  std::size_t size() const { return nodes.size(); }
};

/// int_0^pi sin^alpha(theta) dtheta = sqrt(pi) Gamma((alpha+1)/2) / Gamma(alpha/2 + 1).
double sine_power_integral(int alpha);

/// n-point Gauss rule for the weight (1 - x^2)^{(alpha-1)/2} on x = cos theta,
/// exact for polynomials in cos theta of degree <= 2n - 1. Nodes are roots of
/// the orthonormal Gegenbauer polynomial, located by bracketing and refined by
/// safeguarded Newton to 1e-14 in x; weights come from the Christoffel function.
ThetaRule theta_rule(int alpha, int n);

/// Tensor-product rule for the measure
///   dOmega_d = sin^{d-2} t_d ... sin t_3 dt_d ... dt_3 dphi.
/// The theta_j rule uses alpha = j - 2 with lmax + 2 nodes, the phi rule is the
/// uniform rule with 2 lmax + 2 nodes. Any product of two harmonics of level
/// <= lmax integrates exactly to roundoff.
///
/// Nodes are not materialized; for_each_node walks them with theta_d varying
/// slowest and phi fastest. That walk order is the storage order of GridSamples.
class SphereGrid {
 public:
  SphereGrid(int d, int lmax);

  int dimension() const { return d_; }
  int lmax() const { return lmax_; }
  int phi_count() const { return n_phi_; }
  /// theta_rules()[k] is the rule for theta_{d-k}.
  const std::vector<ThetaRule>& theta_rules() const { return theta_rules_; }

  std::size_t size() const;
  double total_weight() const;

  /// Calls visit(angles, weight) once per node, in storage order.
  void for_each_node(const std::function<void(const Angles&, double)>& visit) const;

 private:
  int d_;
  int lmax_;
  int n_phi_;
  std::vector<ThetaRule> theta_rules_;
};

SphereGrid sphere_grid(int d, int lmax);

using AngularFunction = std::function<std::complex<double>(const Angles&)>;

/// Complex-valued function sampled at the nodes of a grid, in storage order.
struct GridSamples {
  SphereGrid grid;
  std::vector<std::complex<double>> values;
};

GridSamples sample(const SphereGrid& grid, const AngularFunction& f);

/// sum_nodes w f conj(g), reduced pairwise in node order.
std::complex<double> inner_product(const AngularFunction& f, const AngularFunction& g,
                                   const SphereGrid& grid);

/// Same, with f given by samples on the grid.
std::complex<double> inner_product(const GridSamples& f, const AngularFunction& g);

}  // namespace hyperlaplace
