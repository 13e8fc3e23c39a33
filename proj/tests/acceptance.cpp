// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hyperlaplace/gegenbauer.hpp"
#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/harmonics.hpp"
#include "hyperlaplace/quadrature.hpp"
#include "hyperlaplace/solver.hpp"
#include "hyperlaplace/summation.hpp"
#include "oracles.hpp"

using namespace hyperlaplace;
using std::numbers::pi;

namespace {

struct Outcome {
  double worst = 0.0;
  double tol = 0.0;
  std::string detail;
  bool pass() const { return worst <= tol; }
};

// Tracks the largest residual and where it occurred.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (!(v <= value)) {
      value = v;
      where = at;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double e = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c, e);
  return buf;
}

double relative(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Outcome generating_function() {
  const double r = 0.4;
  const double tol = 1e-10;
  Worst w;
  int over = 0;
  for (int d : {3, 4, 5, 7}) {
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      double s = 0.0;
      for (int l = 0; l <= 30; ++l) s += std::pow(r, l) * poly(l, d, x);
      const double exact = std::pow(1 + r * r - 2 * r * x, -(d - 2) / 2.0);
      const double err = std::abs(s - exact);
      if (err > tol) ++over;
      w.update(err, fmt("worst at d=%g x=%g", d, x));
    }
  }
  return {w.value, tol, w.where + "; " + std::to_string(over) + " of 20 cases above tol"};
}

Outcome recurrence_vs_binomial() {
  Worst w;
  for (int d = 3; d <= 8; ++d) {
    for (int l = 0; l <= 10; ++l) {
      for (int i = 0; i <= 40; ++i) {
        const double x = -1.0 + 0.05 * i;
        w.update(std::abs(poly(l, d, x) - poly_reference(l, d, x)), fmt("worst at d=%g l=%g x=%g", d, l, x));
      }
    }
  }
  return {w.value, 1e-12, w.where};
}

Outcome derivative_identity() {
  Worst w;
  for (int d = 3; d <= 6; ++d) {
    for (int l = 0; l <= 6; ++l) {
      for (int m = 1; m <= 3; ++m) {
        for (double x : {-0.9, -0.5, -0.1, 0.3, 0.7, 1.0}) {
          const double identity = m > l ? 0.0 : alpha_factor(m, d) * poly(l - m, d + 2 * m, x);
          const double fd = oracle::fd_derivative([&](double t) { return poly(l, d, t); }, x, m);
          w.update(relative(identity, fd), fmt("worst at d=%g l=%g m=%g x=%g", d, l, m, x));
        }
      }
    }
  }
  return {w.value, 1e-8, w.where};
}

Outcome endpoint_derivatives() {
  Worst w;
  for (int d = 3; d <= 7; ++d) {
    for (int l = 0; l <= 8; ++l) {
      for (int n = 0; n <= l; ++n) {
        const double direct = poly_deriv(l, n, d, 1.0);
        w.update(std::abs(deriv_at_one(l, n, d) - direct) / std::abs(direct), fmt("worst at d=%g l=%g n=%g", d, l, n));
      }
    }
  }
  return {w.value, 1e-10, w.where};
}

Outcome ode_residual_check() {
  Worst w;
  for (int d = 3; d <= 6; ++d) {
    for (int l = 0; l <= 5; ++l) {
      for (int m = 0; m <= l; ++m) {
        for (int i = 0; i < 10; ++i) {
          const double t = 0.1 + (pi - 0.2) * i / 9.0;
          const double scale = ode_term_scale(l, m, d, t);
          const double res = std::abs(ode_residual(l, m, d, t));
          w.update(scale > 0.0 ? res / scale : res, fmt("worst at d=%g l=%g m=%g theta=%g", d, l, m, t));
        }
      }
    }
  }
  return {w.value, 1e-9, w.where};
}

Outcome normalization() {
  Worst w;
  for (int d = 3; d <= 7; ++d) {
    for (int l = 0; l <= 6; ++l) {
      for (int n = 0; n <= l; ++n) {
        const double integral = oracle::simpson([&](double t) {
          const double p = assoc(l, n, d, t);
          return std::pow(std::sin(t), d - 2) * p * p;
        });
        const double nf = norm_factor(l, n, d);
        w.update(std::abs(nf * nf * integral - 1.0), fmt("worst at d=%g l=%g n=%g", d, l, n));
      }
    }
  }
  return {w.value, 1e-9, w.where};
}

Outcome gram() {
  Worst w;
  for (int d : {4, 5}) {
    const auto grid = sphere_grid(d, 4);
    std::vector<double> weights;
    grid.for_each_node([&](const Angles&, double wt) { weights.push_back(wt); });
    const auto indices = enumerate_up_to(d, 4);
    std::vector<GridSamples> values;
    for (const auto& idx : indices) {
      values.push_back(sample(grid, [&](const Angles& a) { return eval_harmonic(idx, a); }));
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
      for (std::size_t j = i; j < indices.size(); ++j) {
        PairwiseAccumulator<std::complex<double>> acc;
        for (std::size_t k = 0; k < weights.size(); ++k) {
          acc.add(weights[k] * values[i].values[k] * std::conj(values[j].values[k]));
        }
        const double err = std::abs(acc.sum() - (i == j ? 1.0 : 0.0));
        w.update(err, "worst at d=" + std::to_string(d) + " " + to_string(indices[i]) + " x " + to_string(indices[j]));
      }
    }
  }
  return {w.value, 1e-8, w.where};
}

Outcome addition(std::mt19937_64& rng) {
  Worst full;
  Worst reduced;
  for (int d = 3; d <= 6; ++d) {
    for (int pair = 0; pair < 10; ++pair) {
      const auto a = oracle::random_angles(d, rng);
      const auto b = oracle::random_angles(d, rng);
      const double c = oracle::dot(oracle::unit_vector(a), oracle::unit_vector(b));
      for (int l = 0; l <= 4; ++l) {
        const auto s = addition_sum(d, l, a, b);
        full.update(std::abs(s - poly(l, d, c)), fmt("full: d=%g l=%g", d, l));
        if (d < 4) continue;
        const Angles a_low{{a.theta.begin() + 1, a.theta.end()}, a.phi};
        const Angles b_low{{b.theta.begin() + 1, b.theta.end()}, b.phi};
        const double k = addition_reduced(d, l, a.theta[0], b.theta[0], cos_gamma(a_low, b_low));
        reduced.update(std::abs(k - poly(l, d, c)), fmt("reduced: d=%g l=%g", d, l));
      }
    }
  }
  // Two bounds in one criterion: report the residual scaled by its own tolerance.
  const double scaled = std::max(full.value / 1e-8, reduced.value / 1e-9);
  return {scaled, 1.0,
          fmt("full %.3e (tol 1e-8), reduced %.3e (tol 1e-9)", full.value, reduced.value)};
}

Outcome counts() {
  double mismatches = 0.0;
  for (int d = 3; d <= 8; ++d) {
    for (int l = 0; l <= 6; ++l) {
      if (enumerate(d, l).size() != count(d, l)) mismatches += 1.0;
    }
  }
  if (count(3, 2) != 5) mismatches += 1.0;
  if (count(4, 2) != 9) mismatches += 1.0;
  return {mismatches, 0.0, "mismatching (d, l) pairs and spot values"};
}

Outcome harmonicity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.5, 0.9);
  Worst w;
  for (int d : {4, 5}) {
    for (int l = 0; l <= 3; ++l) {
      for (const auto& idx : enumerate(d, l)) {
        for (int i = 0; i < 20; ++i) {
          const auto a = oracle::random_angles(d, rng, 0.3);
          const double r = radius(rng);
          for (auto branch : {RadialBranch::Interior, RadialBranch::Exterior}) {
            w.update(harmonicity_residual(idx, r, a, 1e-3, branch),
                     std::string(branch == RadialBranch::Interior ? "interior " : "exterior ") + to_string(idx));
          }
        }
      }
    }
  }
  return {w.value, 1e-4, "worst: " + w.where};
}

Outcome solver_roundtrip(std::mt19937_64& rng) {
  const int d = 4;
  const int lmax = 3;
  std::normal_distribution<double> gauss;
  const auto grid = sphere_grid(d, lmax);
  struct Case {
    const char* name;
    DomainKind kind;
    std::vector<double> radii;
  };
  const Case cases[] = {{"interior", DomainKind::Interior, {1.0}},
                        {"exterior", DomainKind::Exterior, {1.0}},
                        {"annulus", DomainKind::Annulus, {0.5, 2.0}}};
  Worst w;
  for (const auto& c : cases) {
    HarmonicExpansion truth(d, lmax);
    for (const auto& idx : enumerate_up_to(d, lmax)) {
      RadialCoefficients rc;
      if (c.kind != DomainKind::Exterior) rc.a = {gauss(rng), gauss(rng)};
      if (c.kind != DomainKind::Interior) rc.b = {gauss(rng), gauss(rng)};
      truth.set(idx, rc);
    }
    BoundaryProblem problem{d, c.kind, lmax, {}};
    for (double radius : c.radii) {
      problem.boundaries.push_back(
          {radius, sample(grid, [&](const Angles& a) { return eval_expansion(truth, radius, a); })});
    }
    const auto fitted = fit(problem);
    for (const auto& [idx, want] : truth.coefficients()) {
      const auto got = fitted.get(idx);
      w.update(std::max(std::abs(got.a - want.a), std::abs(got.b - want.b)), std::string(c.name) + " coefficients");
    }
    for (double radius : c.radii) {
      for (int i = 0; i < 50; ++i) {
        const auto a = oracle::random_angles(d, rng);
        w.update(std::abs(eval_expansion(fitted, radius, a) - eval_expansion(truth, radius, a)),
                 std::string(c.name) + " boundary values");
      }
    }
  }
  return {w.value, 1e-8, "worst: " + w.where};
}

Outcome green(std::mt19937_64& rng) {
  const int d = 5;
  double worst_abs = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto xa = to_cartesian({0.3, oracle::random_angles(d, rng)});
    const auto xb = to_cartesian({1.0, oracle::random_angles(d, rng)});
    worst_abs = std::max(worst_abs, std::abs(green_expansion(xa, xb, 40) - green_kernel(xa, xb)));
  }

  // Decay is measured on aligned points, where the tail is largest and stays
  // above roundoff for the lmax values compared.
  CartesianPoint xa{std::vector<double>(d, 0.0)};
  CartesianPoint xb = xa;
  xa.x.back() = 0.3;
  xb.x.back() = 1.0;
  const double exact = green_kernel(xa, xb);
  double worst_factor = 1.0;
  for (int l0 : {10, 15, 20}) {
    const double e0 = std::abs(green_expansion(xa, xb, l0) - exact);
    const double e1 = std::abs(green_expansion(xa, xb, l0 + 10) - exact);
    const double factor = (e1 / e0) / std::pow(0.3, 10);
    worst_factor = std::max({worst_factor, factor, 1.0 / factor});
  }
  const double scaled = std::max(worst_abs / 1e-6, worst_factor / 5.0);
  return {scaled, 1.0, fmt("abs error %.3e (tol 1e-6), decay off by factor %.3f (tol 5)", worst_abs, worst_factor)};
}

Outcome solid_angles() {
  double worst = std::max(std::abs(solid_angle(3) - 4 * pi), std::abs(solid_angle(4) - 2 * pi * pi));
  for (int d = 3; d <= 12; ++d) {
    const double rec = std::sqrt(pi) * std::tgamma(0.5 * (d - 1)) / std::tgamma(0.5 * d) * solid_angle(d - 1);
    worst = std::max(worst, std::abs(rec - solid_angle(d)) / solid_angle(d));
  }
  return {worst, 1e-12, "closed forms and recursion up to d=12"};
}

Outcome quadrature() {
  double moments = 0.0;
  for (int alpha = 1; alpha <= 6; ++alpha) {
    for (int n = 1; n <= 12; ++n) {
      const auto rule = theta_rule(alpha, n);
      const double scale = oracle::sine_power(alpha);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::pow(std::cos(rule.nodes[i]), k);
        const double exact = oracle::sine_cosine_moment(alpha, k);
        moments = std::max(moments, std::abs(s - exact) / std::max(std::abs(exact), scale));
      }
    }
  }
  double weight = 0.0;
  for (int d = 3; d <= 8; ++d) {
    for (int lmax : {0, 2, 4, 6}) weight = std::max(weight, std::abs(sphere_grid(d, lmax).total_weight() - solid_angle(d)));
  }
  const double scaled = std::max(moments / 1e-12, weight / 1e-10);
  return {scaled, 1.0, fmt("moments %.3e (tol 1e-12), grid weight %.3e (tol 1e-10)", moments, weight)};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "generating_function", generating_function},
      {2, "recurrence_vs_binomial", recurrence_vs_binomial},
      {3, "derivative_identity", derivative_identity},
      {4, "endpoint_derivatives", endpoint_derivatives},
      {5, "ode_residual", ode_residual_check},
      {6, "normalization", normalization},
      {7, "orthonormal_gram", gram},
      {8, "addition_theorems", [&] { return addition(rng); }},
      {9, "harmonic_count", counts},
      {10, "harmonicity", [&] { return harmonicity(rng); }},
      {11, "solver_roundtrip", [&] { return solver_roundtrip(rng); }},
      {12, "green_expansion", [&] { return green(rng); }},
      {13, "solid_angle", solid_angles},
      {14, "quadrature", quadrature},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto o = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass()) ++failures;
    std::printf("%s %2d %-24s residual=%.3e tol=%.1e  [%.2fs] %s\n", o.pass() ? "PASS" : "FAIL", c.id, c.name,
                o.worst, o.tol, seconds, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
