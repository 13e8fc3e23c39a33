#include "hyperlaplace/harmonics.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hyperlaplace/combinatorics.hpp"
#include "hyperlaplace/gegenbauer.hpp"
#include "hyperlaplace/summation.hpp"

namespace hyperlaplace {

namespace {

// Degree and order of the k-th factor of Psi, k = 0 being theta_d.
int factor_degree(const MultiIndex& idx, std::size_t k) {
  return k == 0 ? idx.l : idx.m[k - 1];
}

void enumerate_chain(int d, int l, std::vector<int>& prefix, std::size_t depth,
                     std::vector<MultiIndex>& out) {
  const std::size_t total = static_cast<std::size_t>(d - 2);
  const int upper = depth == 0 ? l : prefix[depth - 1];
  if (depth + 1 == total) {
    for (int m1 = -upper; m1 <= upper; ++m1) {
      prefix[depth] = m1;
      out.push_back(MultiIndex{l, prefix});
    }
    return;
  }
  for (int m = 0; m <= upper; ++m) {
    prefix[depth] = m;
    enumerate_chain(d, l, prefix, depth + 1, out);
  }
}

std::complex<double> solid_harmonic(const MultiIndex& idx, const CartesianPoint& x,
                                    RadialBranch branch) {
  const auto p = to_ultraspherical(x);
  const int d = idx.dimension();
  const double radial = branch == RadialBranch::Interior ? std::pow(p.r, idx.l)
                                                         : std::pow(p.r, -(idx.l + d - 2));
  return radial * eval_harmonic(idx, p.angles);
}

}  // namespace

void validate(const MultiIndex& idx) {
  if (idx.m.empty()) throw std::invalid_argument("multi-index needs d >= 3 (at least m_1)");
  if (idx.l < 0) throw std::invalid_argument("multi-index: l must be nonnegative");
  int upper = idx.l;
  for (std::size_t k = 0; k + 1 < idx.m.size(); ++k) {
    if (idx.m[k] < 0 || idx.m[k] > upper) {
      throw std::invalid_argument("multi-index " + to_string(idx) + " violates the chain l >= m_{d-2} >= ... >= m_2 >= 0");
    }
    upper = idx.m[k];
  }
  if (std::abs(idx.m1()) > upper) {
    throw std::invalid_argument("multi-index " + to_string(idx) + " violates |m_1| <= m_2");
  }
}

std::string to_string(const MultiIndex& idx) {
  std::ostringstream os;
  os << '(' << idx.l;
  for (std::size_t k = 0; k < idx.m.size(); ++k) {
    os << (k + 1 == idx.m.size() ? ';' : ',') << idx.m[k];
  }
  os << ')';
  return os.str();
}

MultiIndex parse_multi_index(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto fail = [&]() {
    return std::invalid_argument("malformed multi-index '" + text + "', expected (l,m_{d-2},...;m_1)");
  };
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw fail();
  const auto semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos) throw fail();

  const auto parse_int = [&](const std::string& tok) {
    if (tok.empty()) throw fail();
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != tok.size()) throw fail();
    return v;
  };

  std::vector<int> head;
  std::stringstream ss(s.substr(1, semi - 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) head.push_back(parse_int(tok));
  if (head.empty()) throw fail();

  MultiIndex idx;
  idx.l = head.front();
  idx.m.assign(head.begin() + 1, head.end());
  idx.m.push_back(parse_int(s.substr(semi + 1, s.size() - semi - 2)));
  validate(idx);
  return idx;
}

std::uint64_t count(int d, int l) {
  if (d < 3) throw std::invalid_argument("count: d must be >= 3");
  if (l < 0) throw std::invalid_argument("count: l must be >= 0");
  // (d+2l-2)(d+l-3)!/((d-2)! l!) = C(l+d-2, l) + C(l+d-3, l-1)
  const auto head = binomial_exact(l + d - 2, l);
  const auto tail = l == 0 ? std::optional<std::uint64_t>(0) : binomial_exact(l + d - 3, l - 1);
  std::uint64_t total = 0;
  if (!head || !tail || __builtin_add_overflow(*head, *tail, &total)) {
    throw std::overflow_error("count: harmonic count overflows 64 bits");
  }
  return total;
}

std::vector<MultiIndex> enumerate(int d, int l) {
  if (d < 3) throw std::invalid_argument("enumerate: d must be >= 3");
  if (l < 0) throw std::invalid_argument("enumerate: l must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> prefix(static_cast<std::size_t>(d - 2), 0);
  enumerate_chain(d, l, prefix, 0, out);
  return out;
}

std::vector<MultiIndex> enumerate_up_to(int d, int lmax) {
  std::vector<MultiIndex> out;
  for (int l = 0; l <= lmax; ++l) {
    auto level = enumerate(d, l);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::complex<double> eval_psi(const MultiIndex& idx, const Angles& angles) {
  validate(idx);
  if (idx.dimension() != angles.dimension()) {
    throw std::invalid_argument("eval_psi: index and angles have different dimensions");
  }
  if (idx.m1() < 0) throw std::invalid_argument("eval_psi: needs m_1 >= 0; use eval_harmonic");
  const int d = idx.dimension();
  double value = 1.0;
  for (std::size_t k = 0; k < idx.m.size(); ++k) {
    value *= assoc(factor_degree(idx, k), idx.m[k], d - static_cast<int>(k), angles.theta[k]);
  }
  return std::polar(value, idx.m1() * angles.phi);
}

double norm_coeff(const MultiIndex& idx) {
  validate(idx);
  const int d = idx.dimension();
  double f = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < idx.m.size(); ++k) {
    f *= norm_factor(factor_degree(idx, k), std::abs(idx.m[k]), d - static_cast<int>(k));
  }
  return f;
}

std::complex<double> eval_harmonic(const MultiIndex& idx, const Angles& angles) {
  validate(idx);
  if (idx.m1() >= 0) return norm_coeff(idx) * eval_psi(idx, angles);
  MultiIndex positive = idx;
  positive.m.back() = -idx.m1();
  return norm_coeff(positive) * std::conj(eval_psi(positive, angles));
}

std::complex<double> addition_sum(int d, int l, const Angles& a, const Angles& b) {
  if (a.dimension() != d || b.dimension() != d) {
    throw std::invalid_argument("addition_sum: angles do not match d");
  }
  PairwiseAccumulator<std::complex<double>> acc;
  for (const auto& idx : enumerate(d, l)) {
    acc.add(eval_harmonic(idx, a) * std::conj(eval_harmonic(idx, b)));
  }
  return (d - 2) * solid_angle(d) / (2.0 * l + d - 2) * acc.sum();
}

double addition_reduced(int d, int l, double theta_a, double theta_b, double cos_gamma_lower) {
  if (d < 4) throw std::invalid_argument("addition_reduced: K_{l,d} is undefined for d < 4");
  if (l < 0) throw std::invalid_argument("addition_reduced: l must be >= 0");
  const double k_ld =
      solid_angle(d) / solid_angle(d - 1) * (d - 2) / ((2.0 * l + d - 2) * (d - 3));
  PairwiseAccumulator<double> acc;
  for (int m = 0; m <= l; ++m) {
    const double n = norm_factor(l, m, d);
    acc.add((2.0 * m + d - 3) * n * n * assoc(l, m, d, theta_a) * assoc(l, m, d, theta_b) *
            poly(m, d - 1, cos_gamma_lower));
  }
  return k_ld * acc.sum();
}

double harmonicity_residual(const MultiIndex& idx, double r, const Angles& angles, double h,
                            RadialBranch branch) {
  validate(idx);
  if (!(r >= 0.1 && r <= 0.9)) throw std::invalid_argument("harmonicity_residual: r must be in [0.1, 0.9]");
  if (!(h >= 1e-4 && h <= 1e-2)) throw std::invalid_argument("harmonicity_residual: h must be in [1e-4, 1e-2]");
  if (idx.dimension() != angles.dimension()) {
    throw std::invalid_argument("harmonicity_residual: index and angles have different dimensions");
  }

  const auto center = to_cartesian(UltrasphericalPoint{r, angles});
  const auto chart = to_ultraspherical(center);
  for (double t : chart.angles.theta) {
    if (std::sin(t) < 1e-6) throw std::domain_error("harmonicity_residual: point is on a chart axis");
  }

  const std::complex<double> u0 = solid_harmonic(idx, center, branch);
  std::complex<double> laplacian = 0.0;
  // |u| / r^2 is the second-derivative size of a degree-one field; it keeps
  // linear harmonics, whose true second derivatives vanish, from being scored
  // against roundoff alone.
  double scale = std::abs(u0) / (r * r);
  for (std::size_t i = 0; i < center.x.size(); ++i) {
    CartesianPoint plus = center;
    CartesianPoint minus = center;
    plus.x[i] += h;
    minus.x[i] -= h;
    const auto second = (solid_harmonic(idx, plus, branch) - 2.0 * u0 +
                         solid_harmonic(idx, minus, branch)) / (h * h);
    laplacian += second;
    scale += std::abs(second);
  }
  return scale > 0.0 ? std::abs(laplacian) / scale : std::abs(laplacian);
}

}  // namespace hyperlaplace
