#pragma once

#include <complex>
#include <map>
#include <vector>

#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/harmonics.hpp"
#include "hyperlaplace/quadrature.hpp"

namespace hyperlaplace {

using Complex = std::complex<double>;

/// Radial coefficients of one harmonic: F(r) = A r^l + B r^{-(l+d-2)}.
struct RadialCoefficients {
  Complex a{};
  Complex b{};

  bool operator==(const RadialCoefficients&) const = default;
};

/// Phi(r, Omega) = sum_idx (A r^l + B r^{-(l+d-2)}) Y_idx(Omega).
/// Absent keys are (0, 0).
class HarmonicExpansion {
 public:
  HarmonicExpansion(int d, int lmax);

  int dimension() const { return d_; }
  int lmax() const { return lmax_; }
  const std::map<MultiIndex, RadialCoefficients>& coefficients() const { return coeffs_; }

  /// Inserts or replaces. Throws if idx is invalid, of the wrong dimension, or above lmax.
  void set(const MultiIndex& idx, RadialCoefficients c);
  RadialCoefficients get(const MultiIndex& idx) const;

 private:
  int d_;
  int lmax_;
  std::map<MultiIndex, RadialCoefficients> coeffs_;
};

/// A r^l + B r^{-(l+d-2)}. Throws std::domain_error for r = 0 with B != 0.
Complex radial_eval(Complex a, Complex b, int l, int d, double r);

Complex eval_expansion(const HarmonicExpansion& expansion, double r, const Angles& angles);
Complex eval_expansion(const HarmonicExpansion& expansion, const CartesianPoint& x);

/// c_idx = <data, Y_idx> over the sample grid, for every idx with l <= lmax.
std::map<MultiIndex, Complex> project_boundary(const GridSamples& data, int lmax);

enum class DomainKind { Interior, Exterior, Annulus };

/// Dirichlet data on one bounding sphere.
struct BoundarySphere {
  double radius = 0.0;
  GridSamples data;
};

/// `boundaries` holds one sphere for interior/exterior problems and two for the
/// annulus, in any order; fit_annulus sorts them by radius.
struct BoundaryProblem {
  int d = 3;
  DomainKind kind = DomainKind::Interior;
  int lmax = 0;
  std::vector<BoundarySphere> boundaries;
};

/// Throws std::invalid_argument on nonpositive radii, a wrong number of
/// spheres, equal annulus radii, or grids that do not match d / lmax.
void validate(const BoundaryProblem& problem);

/// Regular at the origin: B = 0, A = c / R^l.
HarmonicExpansion fit_interior(const BoundaryProblem& problem);

/// Decaying at infinity: A = 0, B = c R^{l+d-2}.
HarmonicExpansion fit_exterior(const BoundaryProblem& problem);

/// Solves A R_i^l + B R_i^{-(l+d-2)} = c_idx(R_i) per index by Cramer's rule.
/// Indices whose determinant is below 1e-12 of its scale are appended to
/// `ill_conditioned` when provided.
HarmonicExpansion fit_annulus(const BoundaryProblem& problem,
                              std::vector<MultiIndex>* ill_conditioned = nullptr);

/// Dispatches on problem.kind.
HarmonicExpansion fit(const BoundaryProblem& problem,
                      std::vector<MultiIndex>* ill_conditioned = nullptr);

/// Truncated expansion of |xa - xb|^{-(d-2)}:
///   sum_{l <= lmax} r_<^l / r_>^{l+d-2} P_{l,d}(cos gamma).
/// Throws std::domain_error when |xa| == |xb|.
double green_expansion(const CartesianPoint& xa, const CartesianPoint& xb, int lmax);

/// |xa - xb|^{-(d-2)} evaluated directly.
double green_kernel(const CartesianPoint& xa, const CartesianPoint& xb);

}  // namespace hyperlaplace
