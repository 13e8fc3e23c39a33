// Command-line front end: verify, tabulate, solve, eval.
//
// Exit status: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hyperlaplace/gegenbauer.hpp"
#include "hyperlaplace/harmonics.hpp"
#include "hyperlaplace/io.hpp"
#include "hyperlaplace/solver.hpp"
#include "hyperlaplace/verify.hpp"

namespace hl = hyperlaplace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_d_range(const std::string& text) {
  const auto dash = text.find('-', 1);
  try {
    std::size_t used = 0;
    if (dash == std::string::npos) {
      const int d = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {d, d};
    }
    const std::string lo = text.substr(0, dash);
    const std::string hi = text.substr(dash + 1);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--d expects an integer or a range like 3-6, got '" + text + "'");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    hl::io::write_file(out_path, text);
  }
}

std::string row(std::initializer_list<double> values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ' ';
    line += hl::io::format_double(v);
  }
  return line + '\n';
}

struct VerifyArgs {
  std::string d = "4";
  int lmax = 4;
  double tol = 1e-8;
  std::string report;
  bool quiet = false;
};

int run_verify(const VerifyArgs& args) {
  const auto [d_min, d_max] = parse_d_range(args.d);
  if (d_min < 3 || d_max > 8 || d_min > d_max) throw UsageError("--d must lie in [3, 8] (got " + args.d + ")");
  if (args.lmax < 0 || args.lmax > 8) throw UsageError("--lmax must lie in [0, 8]");
  if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");

  const auto report = hl::run_verify({d_min, d_max, args.lmax, args.tol});
  if (!args.quiet) std::cout << report.to_text();
  if (!args.report.empty()) hl::io::write_file(args.report, report.to_json());
  return report.pass() ? kExitOk : kExitFailed;
}

struct TabulateArgs {
  std::string kind;
  int d = 3;
  std::optional<int> l;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> lmax;
  std::optional<double> x;
  std::optional<double> theta;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

int run_tabulate(const TabulateArgs& a) {
  if (a.d < 3) throw UsageError("--d must be >= 3");
  std::string out;
  if (a.kind == "poly") {
    const int l = require(a.l, "--l");
    if (l < 0) throw UsageError("--l must be >= 0");
    out += "# x P_{l,d}(x)\n";
    if (a.x) {
      out += row({*a.x, hl::poly(l, a.d, *a.x)});
    } else {
      for (int i = 0; i <= 20; ++i) {
        const double x = -1.0 + 0.1 * i;
        out += row({x, hl::poly(l, a.d, x)});
      }
    }
  } else if (a.kind == "assoc") {
    const int l = require(a.l, "--l");
    const int m = require(a.m, "--m");
    if (l < 0 || m < 0 || m > l) throw UsageError("assoc needs 0 <= --m <= --l");
    out += "# theta P^m_{l,d}(cos theta)\n";
    if (a.theta) {
      if (*a.theta < 0.0 || *a.theta > std::numbers::pi) throw UsageError("--theta must lie in [0, pi]");
      out += row({*a.theta, hl::assoc(l, m, a.d, *a.theta)});
    } else {
      for (int i = 0; i <= 20; ++i) {
        const double t = std::numbers::pi * i / 20.0;
        out += row({t, hl::assoc(l, m, a.d, t)});
      }
    }
  } else if (a.kind == "norm") {
    const int l = require(a.l, "--l");
    if (l < 0) throw UsageError("--l must be >= 0");
    out += "# n N^{(d)}_{l n}\n";
    if (a.n) {
      if (*a.n < 0 || *a.n > l) throw UsageError("norm needs 0 <= --n <= --l");
      out += row({static_cast<double>(*a.n), hl::norm_factor(l, *a.n, a.d)});
    } else {
      for (int n = 0; n <= l; ++n) out += row({static_cast<double>(n), hl::norm_factor(l, n, a.d)});
    }
  } else if (a.kind == "count") {
    const int lmax = require(a.lmax, "--lmax");
    if (lmax < 0) throw UsageError("--lmax must be >= 0");
    out += "# l N_d(l)\n";
    for (int l = 0; l <= lmax; ++l) out += std::to_string(l) + ' ' + std::to_string(hl::count(a.d, l)) + '\n';
  } else {
    throw UsageError("unknown table kind '" + a.kind + "' (poly, assoc, norm, count)");
  }
  std::cout << out;
  return kExitOk;
}

int run_solve(const std::string& config_path, const std::string& out_path) {
  const std::filesystem::path path(config_path);
  const auto problem = hl::io::read_config(hl::io::read_file(path), path.parent_path());
  std::vector<hl::MultiIndex> ill;
  const auto expansion = hl::fit(problem, &ill);
  for (const auto& idx : ill) {
    std::cerr << "warning: annulus system for " << hl::to_string(idx) << " is ill-conditioned\n";
  }
  emit(hl::io::write_coefficients(expansion), out_path);
  return kExitOk;
}

int run_eval(const std::string& coeff_path, const std::string& points_path, const std::string& out_path) {
  const auto expansion = hl::io::read_coefficients(hl::io::read_file(coeff_path));
  const auto points = hl::io::read_points(hl::io::read_file(points_path));
  std::vector<hl::Complex> values;
  values.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dimension() != expansion.dimension()) {
      throw hl::io::InputError("points[" + std::to_string(i) + "] has dimension " +
                               std::to_string(points[i].dimension()) + ", coefficients have d = " +
                               std::to_string(expansion.dimension()));
    }
    values.push_back(hl::eval_expansion(expansion, points[i].r, points[i].angles));
  }
  emit(hl::io::write_values(values), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace equation in d dimensions: ultraspherical harmonics, solver and verifier"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the numerical identity checks and report residuals");
  verify->add_option("--d", verify_args.d, "Dimension or inclusive range, e.g. 4 or 3-6 (3..8)");
  verify->add_option("--lmax", verify_args.lmax, "Highest harmonic level checked (0..8)");
  verify->add_option("--tol", verify_args.tol, "Tolerance for the roundoff-limited checks");
  verify->add_option("--report", verify_args.report, "Write the JSON report to this file");
  verify->add_flag("--quiet", verify_args.quiet, "Suppress the text summary");

  TabulateArgs tab_args;
  auto* tabulate = app.add_subcommand(
      "tabulate",
      "Print a table with 17 significant digits. Kinds and columns:\n"
      "  poly  --d --l [--x]            x, P_{l,d}(x)        (x grid -1:0.1:1 if --x omitted)\n"
      "  assoc --d --l --m [--theta]    theta, P^m_{l,d}     (theta grid 0:pi/20:pi if omitted)\n"
      "  norm  --d --l [--n]            n, N^{(d)}_{l n}     (all n <= l if omitted)\n"
      "  count --d --lmax               l, number of harmonics of level l");
  tabulate->add_option("kind", tab_args.kind, "poly | assoc | norm | count")->required();
  tabulate->add_option("--d", tab_args.d, "Dimension (>= 3)");
  tabulate->add_option("--l", tab_args.l, "Degree");
  tabulate->add_option("--m", tab_args.m, "Associated order");
  tabulate->add_option("--n", tab_args.n, "Order of the normalization factor");
  tabulate->add_option("--lmax", tab_args.lmax, "Highest level for count");
  tabulate->add_option("--x", tab_args.x, "Argument of P_{l,d}");
  tabulate->add_option("--theta", tab_args.theta, "Polar angle for assoc");

  std::string config_path;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Fit a Dirichlet problem from a JSON config and write coefficients");
  solve->add_option("config", config_path, "Problem config (JSON)")->required();
  solve->add_option("-o,--output", solve_out, "Coefficient file (default: standard output)");

  std::string coeff_path;
  std::string points_path;
  std::string eval_out;
  auto* eval = app.add_subcommand("eval", "Evaluate a coefficient file at a list of points");
  eval->add_option("coefficients", coeff_path, "Coefficient file (JSON)")->required();
  eval->add_option("points", points_path, "Points file (JSON)")->required();
  eval->add_option("-o,--output", eval_out, "Values file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(verify_args);
    if (*tabulate) return run_tabulate(tab_args);
    if (*solve) return run_solve(config_path, solve_out);
    if (*eval) return run_eval(coeff_path, points_path, eval_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hl::io::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
