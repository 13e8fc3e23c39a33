#include "hyperlaplace/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperlaplace {

namespace {

struct OrthonormalValues {
  double p = 0.0;           // p_n(x)
  double dp = 0.0;          // p_n'(x)
  double christoffel = 0.0;  // sum_{k<n} p_k(x)^2
};

// Orthonormal polynomials for the weight (1 - x^2)^{lambda - 1/2} on [-1, 1],
// lambda = alpha / 2. Monic recurrence coefficients
//   beta_k = k (k + 2 lambda - 1) / (4 (k + lambda) (k + lambda - 1)),
// beta_0 = total mass of the weight.
class GegenbauerFamily {
 public:
  explicit GegenbauerFamily(int alpha, int n) : sqrt_beta_(static_cast<std::size_t>(n) + 1) {
    const double lambda = 0.5 * alpha;
    sqrt_beta_[0] = std::sqrt(sine_power_integral(alpha));
    for (int k = 1; k <= n; ++k) {
      const double b = k * (k + 2.0 * lambda - 1.0) / (4.0 * (k + lambda) * (k + lambda - 1.0));
      sqrt_beta_[static_cast<std::size_t>(k)] = std::sqrt(b);
    }
  }

  OrthonormalValues eval(int n, double x) const {
    OrthonormalValues out;
    double p_prev = 0.0;
    double dp_prev = 0.0;
    double p = 1.0 / sqrt_beta_[0];
    double dp = 0.0;
    for (int k = 0; k < n; ++k) {
      out.christoffel += p * p;
      const double sb_prev = sqrt_beta_[static_cast<std::size_t>(k)];
      const double sb_next = sqrt_beta_[static_cast<std::size_t>(k) + 1];
      const double lower = k == 0 ? 0.0 : sb_prev;
      const double p_next = (x * p - lower * p_prev) / sb_next;
      const double dp_next = (p + x * dp - lower * dp_prev) / sb_next;
      p_prev = p;
      dp_prev = dp;
      p = p_next;
      dp = dp_next;
    }
    out.p = p;
    out.dp = dp;
    return out;
  }

 private:
  std::vector<double> sqrt_beta_;
};

// Root of p_n in [lo, hi] where p_n changes sign. Newton steps that leave the
// bracket fall back to bisection.
double refine_root(const GegenbauerFamily& family, int n, double lo, double hi) {
  double f_lo = family.eval(n, lo).p;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const auto v = family.eval(n, x);
    if (v.p == 0.0) return x;
    if ((v.p < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = v.p;
    } else {
      hi = x;
    }
    double next = v.dp != 0.0 ? x - v.p / v.dp : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step < 1e-14 || hi - lo < 1e-14) break;
  }
  return x;
}

}  // namespace

double sine_power_integral(int alpha) {
  if (alpha < 0) throw std::invalid_argument("sine power must be nonnegative");
  return std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (alpha + 1)) / std::tgamma(0.5 * alpha + 1.0);
}

ThetaRule theta_rule(int alpha, int n) {
  if (alpha < 1) throw std::invalid_argument("theta_rule: alpha must be >= 1");
  if (n < 1) throw std::invalid_argument("theta_rule: need at least one node");

  const GegenbauerFamily family(alpha, n);

  // Bracket the roots on a uniform theta grid; root spacing in theta is about
  // pi / n, so 64 samples per root interval resolve every sign change.
  const int samples = 64 * (n + 1);
  std::vector<double> roots;  // x values, decreasing (theta increasing)
  roots.reserve(static_cast<std::size_t>(n));
  double x_prev = std::cos(std::numbers::pi / samples);
  double f_prev = family.eval(n, x_prev).p;
  for (int i = 2; i < samples; ++i) {
    const double x = std::cos(std::numbers::pi * i / samples);
    const double f = family.eval(n, x).p;
    if (f == 0.0) {
      roots.push_back(x);
    } else if ((f < 0.0) != (f_prev < 0.0) && f_prev != 0.0) {
      roots.push_back(refine_root(family, n, x, x_prev));
    }
    x_prev = x;
    f_prev = f;
  }
  if (static_cast<int>(roots.size()) != n) {
    throw std::runtime_error("theta_rule: found " + std::to_string(roots.size()) + " of " +
                             std::to_string(n) + " roots");
  }

  std::vector<double> weights(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    weights[i] = 1.0 / family.eval(n, roots[i]).christoffel;
  }

  // The weight is even in x, so the rule is symmetric; enforce it exactly.
  for (std::size_t i = 0, j = roots.size() - 1; i < j; ++i, --j) {
    const double x = 0.5 * (roots[i] - roots[j]);
    const double w = 0.5 * (weights[i] + weights[j]);
    roots[i] = x;
    roots[j] = -x;
    weights[i] = weights[j] = w;
  }
  if (n % 2 == 1) roots[static_cast<std::size_t>(n / 2)] = 0.0;

  ThetaRule rule;
  rule.alpha = alpha;
  rule.weights = std::move(weights);
  rule.nodes.resize(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) rule.nodes[i] = std::acos(roots[i]);
  return rule;
}

SphereGrid::SphereGrid(int d, int lmax) : d_(d), lmax_(lmax), n_phi_(2 * lmax + 2) {
  if (d < 3) throw std::invalid_argument("sphere_grid: d must be >= 3");
  if (lmax < 0) throw std::invalid_argument("sphere_grid: lmax must be >= 0");
  theta_rules_.reserve(static_cast<std::size_t>(d - 2));
  for (int j = d; j >= 3; --j) theta_rules_.push_back(theta_rule(j - 2, lmax + 2));
}

std::size_t SphereGrid::size() const {
  std::size_t n = static_cast<std::size_t>(n_phi_);
  for (const auto& rule : theta_rules_) n *= rule.size();
  return n;
}

double SphereGrid::total_weight() const {
  double total = 2.0 * std::numbers::pi;
  for (const auto& rule : theta_rules_) total *= pairwise_sum(rule.weights);
  return total;
}

void SphereGrid::for_each_node(const std::function<void(const Angles&, double)>& visit) const {
  const std::size_t depth = theta_rules_.size();
  std::vector<std::size_t> counter(depth, 0);
  Angles angles;
  angles.theta.resize(depth);
  const double phi_weight = 2.0 * std::numbers::pi / n_phi_;

  while (true) {
    double w = phi_weight;
    for (std::size_t k = 0; k < depth; ++k) {
      angles.theta[k] = theta_rules_[k].nodes[counter[k]];
      w *= theta_rules_[k].weights[counter[k]];
    }
    for (int j = 0; j < n_phi_; ++j) {
      angles.phi = 2.0 * std::numbers::pi * j / n_phi_;
      visit(angles, w);
    }
    // odometer: last theta (theta_3) advances fastest
    std::size_t k = depth;
    while (k > 0) {
      --k;
      if (++counter[k] < theta_rules_[k].size()) break;
      counter[k] = 0;
      if (k == 0) return;
    }
  }
}

SphereGrid sphere_grid(int d, int lmax) { return SphereGrid(d, lmax); }

GridSamples sample(const SphereGrid& grid, const AngularFunction& f) {
  GridSamples out{grid, {}};
  out.values.reserve(grid.size());
  grid.for_each_node([&](const Angles& a, double) { out.values.push_back(f(a)); });
  return out;
}

std::complex<double> inner_product(const AngularFunction& f, const AngularFunction& g,
                                   const SphereGrid& grid) {
  PairwiseAccumulator<std::complex<double>> acc;
  grid.for_each_node([&](const Angles& a, double w) { acc.add(w * f(a) * std::conj(g(a))); });
  return acc.sum();
}

std::complex<double> inner_product(const GridSamples& f, const AngularFunction& g) {
  if (f.values.size() != f.grid.size()) {
    throw std::invalid_argument("inner_product: sample count does not match the grid");
  }
  PairwiseAccumulator<std::complex<double>> acc;
  std::size_t i = 0;
  f.grid.for_each_node([&](const Angles& a, double w) {
    acc.add(w * f.values[i++] * std::conj(g(a)));
  });
  return acc.sum();
}

}  // namespace hyperlaplace
