#include "hyperlaplace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyperlaplace/gegenbauer.hpp"
#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/harmonics.hpp"
#include "hyperlaplace/io.hpp"
#include "hyperlaplace/quadrature.hpp"
#include "hyperlaplace/solver.hpp"

namespace hyperlaplace {

namespace {

constexpr double kFiniteDifferenceTol = 1e-8;
constexpr double kHarmonicityTol = 1e-4;
constexpr double kDecayFactorTol = 5.0;

// Work limits for the checks that scale with count(d, l) * grid size.
constexpr double kGramWork = 2e8;     // harmonics^2 * nodes
constexpr double kProjectWork = 4e6;  // harmonics * nodes

double grid_nodes(int d, int lmax) {
  return std::pow(lmax + 2.0, d - 2) * (2.0 * lmax + 2.0);
}

double harmonics_up_to(int d, int lmax) {
  double n = 0.0;
  for (int l = 0; l <= lmax; ++l) n += static_cast<double>(count(d, l));
  return n;
}

int capped_level(int d, int lmax, double work_limit, int harmonic_power) {
  int level = lmax;
  while (level > 0 &&
         std::pow(harmonics_up_to(d, level), harmonic_power) * grid_nodes(d, level) > work_limit) {
    --level;
  }
  return level;
}

// Fornberg's finite-difference weights for the m-th derivative at z.
std::vector<double> fd_weights(double z, const std::vector<double>& x, int m) {
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
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
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

Angles random_angles(int d, std::mt19937_64& rng, double margin = 0.0) {
  std::uniform_real_distribution<double> theta(margin, std::numbers::pi - margin);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
  Angles a;
  for (int k = 0; k < d - 2; ++k) a.theta.push_back(theta(rng));
  a.phi = phi(rng);
  return a;
}

// int_0^pi sin^alpha cos^k by the reduction I(a,k) = (k-1)/(a+k) I(a,k-2).
double sine_cosine_moment(int alpha, int k) {
  if (k % 2 == 1) return 0.0;
  double v = sine_power_integral(alpha);
  for (int j = 2; j <= k; j += 2) v *= (j - 1.0) / (alpha + j);
  return v;
}

class Recorder {
 public:
  Recorder(VerifyReport& report, double tol) : report_(report), tol_(tol) {}

  void exact(const std::string& name, int d, int lmax, double residual) {
    add(name, d, lmax, residual, tol_);
  }

  void add(const std::string& name, int d, int lmax, double residual, double tolerance) {
    CheckResult r{name, d, lmax, residual, tolerance, std::isfinite(residual) && residual <= tolerance};
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
  double tol_;
};

void check_solid_angle(Recorder& rec, int d) {
  double recursion = 2.0 * std::numbers::pi;
  double product = 2.0 * std::numbers::pi;
  double worst = 0.0;
  for (int k = 3; k <= d; ++k) {
    recursion *= std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (k - 1)) / std::tgamma(0.5 * k);
    product *= sine_power_integral(k - 2);
  }
  const double omega = solid_angle(d);
  worst = std::max(std::abs(recursion - omega), std::abs(product - omega)) / omega;
  rec.exact("solid_angle", d, 0, worst);
}

void check_quadrature(Recorder& rec, int d, int lmax) {
  const int n = lmax + 2;
  double worst = 0.0;
  for (int alpha = 1; alpha <= d - 2; ++alpha) {
    const auto rule = theta_rule(alpha, n);
    const double scale = sine_power_integral(alpha);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double q = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) q += rule.weights[i] * std::pow(std::cos(rule.nodes[i]), k);
      worst = std::max(worst, std::abs(q - sine_cosine_moment(alpha, k)) / scale);
    }
  }
  rec.exact("quadrature_exactness", d, lmax, worst);
  const auto grid = sphere_grid(d, lmax);
  rec.exact("grid_total_weight", d, lmax, std::abs(grid.total_weight() - solid_angle(d)) / solid_angle(d));
}

void check_polynomials(Recorder& rec, int d, int lmax) {
  // Generating function, summed far enough that truncation is below 1e-20.
  {
    const double r = 0.4;
    const int terms = 80;
    double worst = 0.0;
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      double sum = 0.0;
      for (int l = terms; l >= 0; --l) sum = sum * r + poly(l, d, x);
      const double exact = std::pow(1.0 + r * r - 2.0 * r * x, -(d - 2) / 2.0);
      worst = std::max(worst, std::abs(sum - exact) / exact);
    }
    rec.exact("generating_function", d, terms, worst);
  }
  {
    double worst = 0.0;
    for (int l = 0; l <= lmax; ++l) {
      for (int i = 0; i <= 20; ++i) {
        const double x = -1.0 + 0.1 * i;
        const double ref = poly_reference(l, d, x);
        worst = std::max(worst, std::abs(poly(l, d, x) - ref) / std::max(1.0, std::abs(ref)));
      }
    }
    rec.exact("recurrence_vs_binomial", d, lmax, worst);
  }
  {
    const double h = 0.1;
    std::vector<double> stencil;
    double worst = 0.0;
    for (double x : {-0.7, -0.2, 0.3, 0.8}) {
      stencil.clear();
      for (int k = -4; k <= 4; ++k) stencil.push_back(x + k * h);
      for (int m = 1; m <= 3; ++m) {
        const auto w = fd_weights(x, stencil, m);
        for (int l = 0; l <= lmax; ++l) {
          double fd = 0.0;
          for (std::size_t j = 0; j < stencil.size(); ++j) fd += w[j] * poly(l, d, stencil[j]);
          const double exact = poly_deriv(l, m, d, x);
          worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
        }
      }
    }
    rec.add("derivative_identity_fd", d, lmax, worst, kFiniteDifferenceTol);
  }
  {
    double worst = 0.0;
    for (int l = 0; l <= lmax; ++l) {
      for (int n = 0; n <= l; ++n) {
        const double direct = poly_deriv(l, n, d, 1.0);
        worst = std::max(worst, std::abs(deriv_at_one(l, n, d) - direct) / std::abs(direct));
      }
    }
    rec.exact("endpoint_derivatives", d, lmax, worst);
  }
  {
    double worst = 0.0;
    for (int l = 0; l <= lmax; ++l) {
      for (int m = 0; m <= l; ++m) {
        for (int i = 0; i < 10; ++i) {
          const double theta = 0.15 + (std::numbers::pi - 0.3) * i / 9.0;
          const double scale = std::max(1.0, ode_term_scale(l, m, d, theta));
          worst = std::max(worst, std::abs(ode_residual(l, m, d, theta)) / scale);
        }
      }
    }
    rec.exact("ode_residual", d, lmax, worst);
  }
  {
    // Normalization and same-order orthogonality of the associated functions.
    const auto rule = theta_rule(d - 2, lmax + 2);
    double norm_worst = 0.0;
    double orth_worst = 0.0;
    for (int m = 0; m <= lmax; ++m) {
      for (int l = m; l <= lmax; ++l) {
        for (int lp = l; lp <= lmax; ++lp) {
          double q = 0.0;
          for (std::size_t i = 0; i < rule.size(); ++i) {
            q += rule.weights[i] * assoc(l, m, d, rule.nodes[i]) * assoc(lp, m, d, rule.nodes[i]);
          }
          q *= norm_factor(l, m, d) * norm_factor(lp, m, d);
          if (l == lp) {
            norm_worst = std::max(norm_worst, std::abs(q - 1.0));
          } else {
            orth_worst = std::max(orth_worst, std::abs(q));
          }
        }
      }
    }
    rec.exact("normalization_integral", d, lmax, norm_worst);
    rec.exact("associated_orthogonality", d, lmax, orth_worst);
  }
}

void check_harmonics(Recorder& rec, int d, int lmax, std::mt19937_64& rng) {
  {
    bool ok = true;
    for (int l = 0; l <= lmax; ++l) ok = ok && enumerate(d, l).size() == count(d, l);
    rec.exact("harmonic_count", d, lmax, ok ? 0.0 : 1.0);
  }
  {
    const int level = capped_level(d, lmax, kGramWork, 2);
    const auto indices = enumerate_up_to(d, level);
    const auto grid = sphere_grid(d, level);
    const std::size_t n = indices.size();
    std::vector<double> norms(n);
    std::vector<MultiIndex> positive(indices);
    for (std::size_t i = 0; i < n; ++i) {
      norms[i] = norm_coeff(indices[i]);
      positive[i].m.back() = std::abs(positive[i].m.back());
    }
    std::vector<std::complex<double>> gram(n * n);
    std::vector<std::complex<double>> y(n);
    grid.for_each_node([&](const Angles& a, double w) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto psi = eval_psi(positive[i], a);
        y[i] = norms[i] * (indices[i].m1() < 0 ? std::conj(psi) : psi);
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto wy = w * y[i];
        for (std::size_t j = i; j < n; ++j) gram[i * n + j] += wy * std::conj(y[j]);
      }
    });
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        worst = std::max(worst, std::abs(gram[i * n + j] - (i == j ? 1.0 : 0.0)));
      }
    }
    rec.exact("orthonormal_gram", d, level, worst);
  }
  {
    double worst = 0.0;
    for (int pair = 0; pair < 10; ++pair) {
      const auto a = random_angles(d, rng);
      const auto b = random_angles(d, rng);
      const double cg = cos_gamma(a, b);
      for (int l = 0; l <= lmax; ++l) {
        const auto s = addition_sum(d, l, a, b);
        const double p = poly(l, d, cg);
        worst = std::max({worst, std::abs(s.real() - p) / std::max(1.0, std::abs(p)),
                          std::abs(s.imag()) / std::max(1.0, std::abs(p))});
      }
    }
    rec.exact("addition_theorem", d, lmax, worst);
  }
  if (d >= 4) {
    double worst = 0.0;
    for (int pair = 0; pair < 10; ++pair) {
      const auto a = random_angles(d, rng);
      const auto b = random_angles(d, rng);
      Angles a_lower{std::vector<double>(a.theta.begin() + 1, a.theta.end()), a.phi};
      Angles b_lower{std::vector<double>(b.theta.begin() + 1, b.theta.end()), b.phi};
      const double lower = cos_gamma(a_lower, b_lower);
      const double cg = cos_gamma(a, b);
      for (int l = 0; l <= lmax; ++l) {
        const double p = poly(l, d, cg);
        const double reduced = addition_reduced(d, l, a.theta[0], b.theta[0], lower);
        worst = std::max(worst, std::abs(reduced - p) / std::max(1.0, std::abs(p)));
      }
    }
    rec.exact("reduced_addition_theorem", d, lmax, worst);
  }
  {
    const int level = std::min(lmax, 3);
    std::uniform_real_distribution<double> radius(0.5, 0.9);
    double worst = 0.0;
    for (int l = 0; l <= level; ++l) {
      const auto indices = enumerate(d, l);
      std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
      for (int i = 0; i < 20; ++i) {
        const auto& idx = indices[pick(rng)];
        const auto a = random_angles(d, rng, 0.3);
        const double r = radius(rng);
        for (auto branch : {RadialBranch::Interior, RadialBranch::Exterior}) {
          worst = std::max(worst, harmonicity_residual(idx, r, a, 1e-3, branch));
        }
      }
    }
    rec.add("harmonicity_fd", d, level, worst, kHarmonicityTol);
  }
}

void check_solver(Recorder& rec, int d, int lmax, std::mt19937_64& rng) {
  const int level = capped_level(d, lmax, kProjectWork, 1);
  const auto indices = enumerate_up_to(d, level);
  const auto grid = sphere_grid(d, level);
  std::normal_distribution<double> gauss;

  struct Case {
    const char* name;
    DomainKind kind;
    std::vector<double> radii;
  };
  const Case cases[] = {{"solver_interior_roundtrip", DomainKind::Interior, {1.0}},
                        {"solver_exterior_roundtrip", DomainKind::Exterior, {1.0}},
                        {"solver_annulus_roundtrip", DomainKind::Annulus, {0.5, 2.0}}};
  for (const auto& c : cases) {
    HarmonicExpansion truth(d, level);
    for (const auto& idx : indices) {
      RadialCoefficients rc;
      if (c.kind != DomainKind::Exterior) rc.a = {gauss(rng), gauss(rng)};
      if (c.kind != DomainKind::Interior) rc.b = {gauss(rng), gauss(rng)};
      truth.set(idx, rc);
    }
    BoundaryProblem problem{d, c.kind, level, {}};
    for (double radius : c.radii) {
      problem.boundaries.push_back(BoundarySphere{
          radius, sample(grid, [&](const Angles& a) { return eval_expansion(truth, radius, a); })});
    }
    const auto fitted = fit(problem);
    double worst = 0.0;
    for (const auto& idx : indices) {
      const auto want = truth.get(idx);
      const auto got = fitted.get(idx);
      worst = std::max({worst, std::abs(want.a - got.a), std::abs(want.b - got.b)});
    }
    rec.exact(c.name, d, level, worst);
  }
}

void check_green(Recorder& rec, int d, std::mt19937_64& rng) {
  const auto direction = [&](double r) {
    return to_cartesian(UltrasphericalPoint{r, random_angles(d, rng)});
  };
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto xa = direction(0.3);
    const auto xb = direction(1.0);
    const double direct = green_kernel(xa, xb);
    worst = std::max(worst, std::abs(green_expansion(xa, xb, 40) - direct) / direct);
  }
  rec.exact("green_expansion", d, 40, worst);

  // Truncation error decay per +10 terms, where the error is well above roundoff.
  CartesianPoint xa{std::vector<double>(static_cast<std::size_t>(d), 0.0)};
  CartesianPoint xb = xa;
  xa.x.back() = 0.3;
  xb.x.back() = 1.0;
  const double direct = green_kernel(xa, xb);
  // The tail is led by its first term, 0.3^{L+1} P_{L+1,d}(1), so the ratio
  // carries the polynomial growth of P(1) on top of 0.3^10.
  double worst_factor = 1.0;
  for (int l0 : {10, 15, 20}) {
    const double e0 = std::abs(green_expansion(xa, xb, l0) - direct);
    const double e1 = std::abs(green_expansion(xa, xb, l0 + 10) - direct);
    const double expected = std::pow(0.3, 10) * deriv_at_one(l0 + 11, 0, d) / deriv_at_one(l0 + 1, 0, d);
    const double ratio = (e1 / e0) / expected;
    worst_factor = std::max({worst_factor, ratio, 1.0 / ratio});
  }
  rec.add("green_truncation_decay", d, 30, worst_factor, kDecayFactorTol);
}

std::string format_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
  std::ostringstream os;
  os << "{\n  \"overall_pass\": " << (pass() ? "true" : "false") << ",\n  \"checks\": [";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    os << (i == 0 ? "\n    " : ",\n    ") << "{\"name\": \"" << c.name << "\", \"d\": " << c.d
       << ", \"lmax\": " << c.lmax << ", \"max_residual\": " << io::format_double(c.max_residual)
       << ", \"tolerance\": " << io::format_double(c.tolerance)
       << ", \"pass\": " << (c.pass ? "true" : "false") << "}";
  }
  os << (checks.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4s d=%d lmax=%-2d %-28s residual=%-10s tol=%s\n",
                  c.pass ? "PASS" : "FAIL", c.d, c.lmax, c.name.c_str(),
                  format_residual(c.max_residual).c_str(), format_residual(c.tolerance).c_str());
    os << line;
  }
  os << (pass() ? "overall: PASS\n" : "overall: FAIL\n");
  return os.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.d_min < 3 || options.d_max > 8 || options.d_min > options.d_max) {
    throw std::invalid_argument("verify: need 3 <= d_min <= d_max <= 8");
  }
  if (options.lmax < 0 || options.lmax > 8) throw std::invalid_argument("verify: need 0 <= lmax <= 8");
  if (!(options.tol > 0.0)) throw std::invalid_argument("verify: tol must be > 0");

  VerifyReport report;
  Recorder rec(report, options.tol);
  for (int d = options.d_min; d <= options.d_max; ++d) {
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(d));
    check_solid_angle(rec, d);
    check_quadrature(rec, d, options.lmax);
    check_polynomials(rec, d, options.lmax);
    check_harmonics(rec, d, options.lmax, rng);
    check_solver(rec, d, options.lmax, rng);
    check_green(rec, d, rng);
  }
  return report;
}

}  // namespace hyperlaplace
