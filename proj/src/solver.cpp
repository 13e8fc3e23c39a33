#include "hyperlaplace/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperlaplace/gegenbauer.hpp"
#include "hyperlaplace/summation.hpp"

namespace hyperlaplace {

namespace {

double norm(const CartesianPoint& x) {
  double s = 0.0;
  for (double v : x.x) s = std::hypot(s, v);
  return s;
}

void require_kind(const BoundaryProblem& p, DomainKind kind, const char* what) {
  validate(p);
  if (p.kind != kind) throw std::invalid_argument(std::string(what) + ": wrong problem kind");
}

}  // namespace

HarmonicExpansion::HarmonicExpansion(int d, int lmax) : d_(d), lmax_(lmax) {
  if (d < 3) throw std::invalid_argument("expansion: d must be >= 3");
  if (lmax < 0) throw std::invalid_argument("expansion: lmax must be >= 0");
}

void HarmonicExpansion::set(const MultiIndex& idx, RadialCoefficients c) {
  validate(idx);
  if (idx.dimension() != d_) {
    throw std::invalid_argument("expansion: index " + to_string(idx) + " has the wrong dimension");
  }
  if (idx.l > lmax_) {
    throw std::invalid_argument("expansion: index " + to_string(idx) + " exceeds lmax");
  }
  coeffs_[idx] = c;
}

RadialCoefficients HarmonicExpansion::get(const MultiIndex& idx) const {
  const auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? RadialCoefficients{} : it->second;
}

Complex radial_eval(Complex a, Complex b, int l, int d, double r) {
  if (r < 0.0) throw std::invalid_argument("radial_eval: negative radius");
  if (r == 0.0) {
    if (b != Complex{}) throw std::domain_error("radial_eval: exterior branch is singular at r = 0");
    return l == 0 ? a : Complex{};
  }
  Complex value = a * std::pow(r, l);
  if (b != Complex{}) value += b * std::pow(r, -(l + d - 2));
  return value;
}

Complex eval_expansion(const HarmonicExpansion& expansion, double r, const Angles& angles) {
  if (angles.dimension() != expansion.dimension()) {
    throw std::invalid_argument("eval_expansion: angles do not match the expansion dimension");
  }
  const int d = expansion.dimension();
  Complex total{};
  for (const auto& [idx, c] : expansion.coefficients()) {
    total += radial_eval(c.a, c.b, idx.l, d, r) * eval_harmonic(idx, angles);
  }
  return total;
}

Complex eval_expansion(const HarmonicExpansion& expansion, const CartesianPoint& x) {
  if (x.dimension() != expansion.dimension()) {
    throw std::invalid_argument("eval_expansion: point does not match the expansion dimension");
  }
  const auto p = to_ultraspherical(x);
  return eval_expansion(expansion, p.r, p.angles);
}

std::map<MultiIndex, Complex> project_boundary(const GridSamples& data, int lmax) {
  if (lmax < 0) throw std::invalid_argument("project_boundary: lmax must be >= 0");
  if (data.grid.lmax() < lmax) {
    throw std::invalid_argument("project_boundary: grid lmax " + std::to_string(data.grid.lmax()) +
                                " cannot resolve lmax " + std::to_string(lmax));
  }
  if (data.values.size() != data.grid.size()) {
    throw std::invalid_argument("project_boundary: sample count does not match the grid");
  }
  for (const auto& v : data.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("project_boundary: boundary data is not finite");
    }
  }

  const auto indices = enumerate_up_to(data.grid.dimension(), lmax);
  std::vector<PairwiseAccumulator<Complex>> acc(indices.size());
  std::size_t node = 0;
  data.grid.for_each_node([&](const Angles& a, double w) {
    const Complex fw = w * data.values[node++];
    for (std::size_t i = 0; i < indices.size(); ++i) {
      acc[i].add(fw * std::conj(eval_harmonic(indices[i], a)));
    }
  });

  std::map<MultiIndex, Complex> out;
  for (std::size_t i = 0; i < indices.size(); ++i) out.emplace(indices[i], acc[i].sum());
  return out;
}

void validate(const BoundaryProblem& p) {
  if (p.d < 3) throw std::invalid_argument("boundary problem: d must be >= 3");
  if (p.lmax < 0) throw std::invalid_argument("boundary problem: lmax must be >= 0");
  const std::size_t expected = p.kind == DomainKind::Annulus ? 2 : 1;
  if (p.boundaries.size() != expected) {
    throw std::invalid_argument("boundary problem: expected " + std::to_string(expected) +
                                " boundary sphere(s), got " + std::to_string(p.boundaries.size()));
  }
  for (const auto& b : p.boundaries) {
    if (!(b.radius > 0.0)) throw std::invalid_argument("boundary problem: radii must be > 0");
    if (b.data.grid.dimension() != p.d) {
      throw std::invalid_argument("boundary problem: boundary grid dimension differs from d");
    }
    if (b.data.grid.lmax() < p.lmax) {
      throw std::invalid_argument("boundary problem: boundary grid is coarser than lmax");
    }
  }
  if (p.kind == DomainKind::Annulus && p.boundaries[0].radius == p.boundaries[1].radius) {
    throw std::invalid_argument("boundary problem: annulus requires R_inner < R_outer");
  }
}

HarmonicExpansion fit_interior(const BoundaryProblem& p) {
  require_kind(p, DomainKind::Interior, "fit_interior");
  const double radius = p.boundaries[0].radius;
  HarmonicExpansion out(p.d, p.lmax);
  for (const auto& [idx, c] : project_boundary(p.boundaries[0].data, p.lmax)) {
    out.set(idx, {c / std::pow(radius, idx.l), Complex{}});
  }
  return out;
}

HarmonicExpansion fit_exterior(const BoundaryProblem& p) {
  require_kind(p, DomainKind::Exterior, "fit_exterior");
  const double radius = p.boundaries[0].radius;
  HarmonicExpansion out(p.d, p.lmax);
  for (const auto& [idx, c] : project_boundary(p.boundaries[0].data, p.lmax)) {
    out.set(idx, {Complex{}, c * std::pow(radius, idx.l + p.d - 2)});
  }
  return out;
}

HarmonicExpansion fit_annulus(const BoundaryProblem& p, std::vector<MultiIndex>* ill_conditioned) {
  require_kind(p, DomainKind::Annulus, "fit_annulus");
  const bool sorted = p.boundaries[0].radius < p.boundaries[1].radius;
  const auto& inner = p.boundaries[sorted ? 0 : 1];
  const auto& outer = p.boundaries[sorted ? 1 : 0];
  const double r1 = inner.radius;
  const double r2 = outer.radius;

  const auto c_inner = project_boundary(inner.data, p.lmax);
  const auto c_outer = project_boundary(outer.data, p.lmax);

  HarmonicExpansion out(p.d, p.lmax);
  for (const auto& [idx, c1] : c_inner) {
    const Complex c2 = c_outer.at(idx);
    const int decay = idx.l + p.d - 2;
    // [ r1^l  r1^-decay ] [A]   [c1]
    // [ r2^l  r2^-decay ] [B] = [c2]
    const double a11 = std::pow(r1, idx.l);
    const double a12 = std::pow(r1, -decay);
    const double a21 = std::pow(r2, idx.l);
    const double a22 = std::pow(r2, -decay);
    const double det = a11 * a22 - a21 * a12;
    if (det == 0.0) throw std::domain_error("fit_annulus: singular system for " + to_string(idx));
    if (ill_conditioned && std::abs(det) < 1e-12 * (std::abs(a11 * a22) + std::abs(a21 * a12))) {
      ill_conditioned->push_back(idx);
    }
    out.set(idx, {(c1 * a22 - c2 * a12) / det, (a11 * c2 - a21 * c1) / det});
  }
  return out;
}

HarmonicExpansion fit(const BoundaryProblem& p, std::vector<MultiIndex>* ill_conditioned) {
  switch (p.kind) {
    case DomainKind::Interior:
      return fit_interior(p);
    case DomainKind::Exterior:
      return fit_exterior(p);
    case DomainKind::Annulus:
      return fit_annulus(p, ill_conditioned);
  }
  throw std::invalid_argument("fit: unknown problem kind");
}

double green_expansion(const CartesianPoint& xa, const CartesianPoint& xb, int lmax) {
  const int d = xa.dimension();
  if (d != xb.dimension()) throw std::invalid_argument("green_expansion: dimension mismatch");
  if (d < 3) throw std::invalid_argument("green_expansion: d must be >= 3");
  if (lmax < 0) throw std::invalid_argument("green_expansion: lmax must be >= 0");
  const double ra = norm(xa);
  const double rb = norm(xb);
  if (ra == rb) throw std::domain_error("green_expansion: |xa| == |xb| does not converge");

  const double r_small = std::min(ra, rb);
  const double r_large = std::max(ra, rb);
  const double leading = std::pow(r_large, -(d - 2));
  // Only l = 0 survives at the origin, and the direction is undefined there.
  if (r_small == 0.0) return leading;

  double dot = 0.0;
  for (std::size_t i = 0; i < xa.x.size(); ++i) dot += xa.x[i] * xb.x[i];
  const double x = std::clamp(dot / (ra * rb), -1.0, 1.0);
  const double ratio = r_small / r_large;

  // P_{l,d}(x) from the same recurrence as poly, advanced alongside the powers.
  double p_prev = 1.0;
  double p_cur = (d - 2) * x;
  double power = ratio;
  double total = 1.0;
  for (int l = 1; l <= lmax; ++l) {
    if (l >= 2) {
      const double next = ((2 * l + d - 4) * x * p_cur - (l + d - 4) * p_prev) / l;
      p_prev = p_cur;
      p_cur = next;
      power *= ratio;
    }
    total += power * p_cur;
  }
  return leading * total;
}

double green_kernel(const CartesianPoint& xa, const CartesianPoint& xb) {
  if (xa.dimension() != xb.dimension()) throw std::invalid_argument("green_kernel: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < xa.x.size(); ++i) s = std::hypot(s, xa.x[i] - xb.x[i]);
  return std::pow(s, -(xa.dimension() - 2));
}

}  // namespace hyperlaplace
