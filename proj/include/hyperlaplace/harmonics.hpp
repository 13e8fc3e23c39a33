#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperlaplace/geometry.hpp"

namespace hyperlaplace {

/// Label (l; m_{d-2}, ..., m_2, m_1) of one ultraspherical harmonic, with
///   l >= m_{d-2} >= ... >= m_2 >= |m_1| >= 0.
/// `m` is stored in that order, so m.back() is m_1 and d = m.size() + 2.
/// Ordering is lexicographic on (l, m...), which is also enumeration order.
struct MultiIndex {
  int l = 0;
  std::vector<int> m;

  int dimension() const { return static_cast<int>(m.size()) + 2; }
  int m1() const { return m.back(); }

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;
};

/// Throws std::invalid_argument when the chain inequalities fail.
void validate(const MultiIndex& idx);

/// "(l,m_{d-2},...,m_2;m_1)", e.g. "(2,1;-1)" for d = 4 and "(1;0)" for d = 3.
std::string to_string(const MultiIndex& idx);

/// Inverse of to_string. Whitespace is ignored. Throws std::invalid_argument.
MultiIndex parse_multi_index(const std::string& text);

/// Number of independent harmonics of level l in d dimensions,
///   (d + 2l - 2) (d + l - 3)! / ((d - 2)! l!).
std::uint64_t count(int d, int l);

/// All indices of level l, m_{d-2} outermost ascending and m_1 innermost
/// running from -m_2 to m_2.
std::vector<MultiIndex> enumerate(int d, int l);

/// All indices with level <= lmax, levels ascending.
std::vector<MultiIndex> enumerate_up_to(int d, int lmax);

/// Product eigenfunction
///   P^{m_{d-2}}_{l,d}(cos t_d) P^{m_{d-3}}_{m_{d-2},d-1}(cos t_{d-1}) ... P^{m_1}_{m_2,3}(cos t_3) e^{i m_1 phi}.
/// Requires m_1 >= 0.
std::complex<double> eval_psi(const MultiIndex& idx, const Angles& angles);

/// Normalization making the harmonics orthonormal on the (d-1)-sphere:
/// (2 pi)^{-1/2} N^{(d)}_{l m_{d-2}} N^{(d-1)}_{m_{d-2} m_{d-3}} ... N^{(3)}_{m_2 |m_1|}.
/// The product of N factors alone normalizes the theta integrals only; the
/// (2 pi)^{-1/2} takes care of the azimuth.
double norm_coeff(const MultiIndex& idx);

/// Y = norm_coeff * Psi for m_1 >= 0, and norm_coeff * conj(Psi_{|m_1|}) for m_1 < 0.
std::complex<double> eval_harmonic(const MultiIndex& idx, const Angles& angles);

/// ((d-2) Omega_d / (2l + d - 2)) sum_{level l} Y(a) conj(Y(b)), which equals
/// P_{l,d}(cos gamma). Returned complex so the caller can see that the
/// imaginary part cancels. Summed pairwise in enumeration order.
std::complex<double> addition_sum(int d, int l, const Angles& a, const Angles& b);

/// Reduced addition theorem over the top angle only:
///   K_{l,d} sum_m (2m + d - 3) (N^{(d)}_{lm})^2 P^m_{l,d}(cos t_a) P^m_{l,d}(cos t_b) P_{m,d-1}(cos g_{d-1}),
///   K_{l,d} = (Omega_d / Omega_{d-1}) (d - 2) / ((2l + d - 2)(d - 3)).
/// K is undefined for d = 3, which is rejected.
double addition_reduced(int d, int l, double theta_a, double theta_b, double cos_gamma_lower);

enum class RadialBranch { Interior, Exterior };

/// Finite-difference Laplacian of the solid harmonic r^l Y (interior) or
/// r^{-(l+d-2)} Y (exterior) at the point (r, angles), using central second
/// differences with step h along each Cartesian axis. Returns |Delta_h u|
/// divided by |u| / r^2 + sum_i |delta_i^2 u| / h^2 (the local second-derivative
/// scale), or the raw value when that scale is zero.
/// Throws std::domain_error when the point sits within sin(theta_j) < 1e-6 of
/// an axis of the chart.
double harmonicity_residual(const MultiIndex& idx, double r, const Angles& angles, double h,
                            RadialBranch branch = RadialBranch::Interior);

}  // namespace hyperlaplace
