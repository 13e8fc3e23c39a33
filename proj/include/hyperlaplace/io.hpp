#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/quadrature.hpp"
#include "hyperlaplace/solver.hpp"

// JSON text formats shared by the CLI and the Python bindings.
//
// Coefficients: {"d": 4, "lmax": 3, "coefficients": [
//                  {"index": [l, m_{d-2}, ..., m_1], "A": [re, im], "B": [re, im]}, ...]}
// Points:       {"points": [{"cartesian": [x_1, ..., x_d]},
//                           {"ultraspherical": {"r": r, "theta": [...], "phi": phi}}, ...]}
//               (a bare array of point objects is accepted too)
// Values:       {"values": [[re, im], ...]}
// Samples:      {"d": 4, "grid_lmax": 5, "values": [[re, im], ...]}
//               values at the nodes of sphere_grid(d, grid_lmax) in storage order.
// Config:       {"d": 4, "kind": "interior" | "exterior" | "annulus", "radii": [...],
//                "lmax": 3, "grid_lmax": 5 (optional),
//                "boundary": [{"radius": R, "data": "harmonic:(l,...;m_1)" | "constant:c"}
//                             | {"radius": R, "samples-file": "path"}]}
//
// Every floating-point number is written with 17 significant digits.

namespace hyperlaplace::io {

/// Malformed or out-of-range input. The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);

std::string write_coefficients(const HarmonicExpansion& expansion);
HarmonicExpansion read_coefficients(const std::string& text);

/// Points in input order; Cartesian entries are converted to ultraspherical.
std::vector<UltrasphericalPoint> read_points(const std::string& text);

std::string write_values(const std::vector<Complex>& values);
std::vector<Complex> read_values(const std::string& text);

std::string write_samples(const GridSamples& samples);
GridSamples read_samples(const std::string& text);

/// Parses and validates a boundary-problem config. Relative samples-file paths
/// are resolved against base_dir.
BoundaryProblem read_config(const std::string& text, const std::filesystem::path& base_dir);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hyperlaplace::io
