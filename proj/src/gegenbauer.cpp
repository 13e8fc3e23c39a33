#include "hyperlaplace/gegenbauer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperlaplace/combinatorics.hpp"
#include "hyperlaplace/geometry.hpp"

namespace hyperlaplace {

namespace {

void require_degree(int l) {
  if (l < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
}

void require_dimension(int d) {
  if (d < 3) throw std::invalid_argument("ultraspherical functions need d >= 3");
}

// The four terms of the associated equation, in order:
// F'', (d-2) cot F', l(l+d-2) F, -m(m+d-3)/sin^2 F.
std::array<double, 4> ode_terms(int l, int m, int d, double theta) {
  require_degree(l);
  require_dimension(d);
  if (m < 0) throw std::invalid_argument("associated order must be nonnegative");
  if (theta < 1e-3 || theta > std::numbers::pi - 1e-3) {
    throw std::domain_error("ode_residual: theta too close to a singular endpoint");
  }
  if (m > l) return {0.0, 0.0, 0.0, 0.0};

  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double x = c;
  const double g = poly_deriv(l, m, d, x);
  const double gx = poly_deriv(l, m + 1, d, x);
  const double gxx = poly_deriv(l, m + 2, d, x);

  const double sm = std::pow(s, m);
  const double sm1 = m >= 1 ? std::pow(s, m - 1) : 0.0;
  const double sm2 = m >= 2 ? std::pow(s, m - 2) : 0.0;

  const double f = sm * g;
  // F = s^m G(cos t):  F' = m s^{m-1} c G - s^{m+1} G_x
  const double df = m * sm1 * c * g - sm * s * gx;
  // F'' = m(m-1) s^{m-2} c^2 G - m s^m G - (2m+1) s^m c G_x + s^{m+2} G_xx
  const double d2f = m * (m - 1) * sm2 * c * c * g - m * sm * g -
                     (2 * m + 1) * sm * c * gx + sm * s * s * gxx;

  const double ll = static_cast<double>(l) * (l + d - 2);
  const double mm = static_cast<double>(m) * (m + d - 3);
  return {d2f, (d - 2) * (c / s) * df, ll * f, -mm / (s * s) * f};
}

}  // namespace

double poly(int l, int d, double x) {
  require_degree(l);
  require_dimension(d);
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = (d - 2) * x;
  for (int k = 2; k <= l; ++k) {
    const double next = ((2 * k + d - 4) * x * cur - (k + d - 4) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double poly_reference(int l, int d, double x) {
  require_degree(l);
  require_dimension(d);
  // Coefficient of r^l in sum_k C(lambda+k-1, k) r^k (2x - r)^k: the terms with
  // k + j = l where j counts the (-r) factors, so j = l - k and k >= l/2.
  const long double lambda = (d - 2) / 2.0L;
  const long double two_x = 2.0L * x;
  long double total = 0.0L;
  for (int k = (l + 1) / 2; k <= l; ++k) {
    long double gen_binom = 1.0L;  // C(lambda + k - 1, k)
    for (int i = 0; i < k; ++i) gen_binom *= (lambda + i) / (i + 1);
    const int j = l - k;
    long double binom = 1.0L;  // C(k, j)
    for (int i = 0; i < j; ++i) binom = binom * (k - i) / (i + 1);
    long double term = gen_binom * binom * std::pow(two_x, 2 * k - l);
    if (j % 2 == 1) term = -term;
    total += term;
  }
  return static_cast<double>(total);
}

double alpha_factor(int m, int d) {
  if (m < 0) throw std::invalid_argument("alpha_factor: m must be nonnegative");
  require_dimension(d);
  double a = 1.0;
  for (int i = 0; i < m; ++i) a *= d - 2 + 2 * i;
  return a;
}

double poly_deriv(int l, int m, int d, double x) {
  require_degree(l);
  require_dimension(d);
  if (m < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (m > l) return 0.0;
  return alpha_factor(m, d) * poly(l - m, d + 2 * m, x);
}

double deriv_at_one(int l, int n, int d) {
  require_degree(l);
  require_dimension(d);
  if (n < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (n > l) return 0.0;
  return alpha_factor(n, d) * binomial(d + n + l - 3, l - n);
}

double assoc(int l, int m, int d, double theta) {
  require_degree(l);
  require_dimension(d);
  if (m < 0) throw std::invalid_argument("associated order must be nonnegative");
  if (m > l) return 0.0;
  const double deriv = poly_deriv(l, m, d, std::cos(theta));
  return m == 0 ? deriv : std::pow(std::sin(theta), m) * deriv;
}

double norm_factor(int l, int n, int d) {
  require_degree(l);
  require_dimension(d);
  if (n < 0 || n > l) throw std::invalid_argument("norm_factor needs 0 <= n <= l");
  const double omega_ratio = solid_angle(d - 1) / solid_angle(d);
  const double fact_ratio = factorial(d - 3) * factorial(l - n) / factorial(d + l + n - 3);
  return std::sqrt((2.0 * l + d - 2) / (d - 2) * omega_ratio * fact_ratio);
}

double ode_residual(int l, int m, int d, double theta) {
  const auto t = ode_terms(l, m, d, theta);
  return ((t[0] + t[1]) + t[2]) + t[3];
}

double ode_term_scale(int l, int m, int d, double theta) {
  const auto t = ode_terms(l, m, d, theta);
  return std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]) + std::abs(t[3]);
}

}  // namespace hyperlaplace
