#pragma once

namespace hyperlaplace {

// Ultraspherical polynomials P_{l,d}: the coefficients of r^l in
//   (1 + r^2 - 2 r x)^{-(d-2)/2} = sum_l r^l P_{l,d}(x),  r < 1.
// For d = 3 these are the Legendre polynomials.

/// P_{l,d}(x) by the three-term recurrence
///   l P_l = (2l + d - 4) x P_{l-1} - (l + d - 4) P_{l-2},  P_0 = 1, P_1 = (d-2) x.
double poly(int l, int d, double x);

/// P_{l,d}(x) expanded straight from the generating function with the
/// generalized binomial series sum_k C(lambda+k-1, k) r^k (2x - r)^k,
/// lambda = (d-2)/2. Independent of the recurrence; accumulated in long double.
double poly_reference(int l, int d, double x);

/// alpha(m, d) = (d-2) d (d+2) ... (d+2m-4), with alpha(0, d) = 1.
double alpha_factor(int m, int d);

/// m-th derivative of P_{l,d} at x, via d^m P_{l,d}/dx^m = alpha(m,d) P_{l-m,d+2m}(x).
/// Zero when m > l.
double poly_deriv(int l, int m, int d, double x);

/// n-th derivative of P_{l,d} at x = 1:
///   alpha(n,d) (d+n+l-3)! / ((l-n)! (d+2n-3)!) = alpha(n,d) C(d+n+l-3, l-n).
/// Zero when n > l.
double deriv_at_one(int l, int n, int d);

/// Associated function P^m_{l,d}(cos theta) = sin^m theta * d^m P_{l,d}/dx^m.
double assoc(int l, int m, int d, double theta);

/// Normalization N^{(d)}_{l n} making N^2 * int_0^pi sin^{d-2} (P^n_{l,d})^2 = 1.
double norm_factor(int l, int n, int d);

/// Left side of the associated ultraspherical equation
///   (1/sin^{d-2}) (sin^{d-2} F')' + (l(l+d-2) - m(m+d-3)/sin^2) F
/// for F = P^m_{l,d}(cos theta), with analytic derivatives. Throws
/// std::domain_error within 1e-3 of theta = 0 or pi.
double ode_residual(int l, int m, int d, double theta);

/// Sum of the magnitudes of the individual terms of ode_residual; the natural
/// scale for judging how close the residual is to zero.
double ode_term_scale(int l, int m, int d, double theta);

}  // namespace hyperlaplace
