#include "hyperlaplace/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hyperlaplace::io {

namespace {

using nlohmann::json;

constexpr int kMaxDimension = 16;
constexpr int kMaxLmax = 64;

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + " must be an integer");
  return v.get<int>();
}

double as_double(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(where + " must be finite");
  return x;
}

Complex as_complex(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + " must be a [re, im] pair");
  return {as_double(v[0], where + "[0]"), as_double(v[1], where + "[1]")};
}

std::vector<double> as_double_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_double(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int checked_dimension(const json& v, const std::string& where) {
  const int d = as_int(v, where);
  if (d < 3 || d > kMaxDimension) {
    throw InputError(where + " = " + std::to_string(d) + " is out of range [3, " +
                     std::to_string(kMaxDimension) + "]");
  }
  return d;
}

int checked_lmax(const json& v, const std::string& where) {
  const int l = as_int(v, where);
  if (l < 0 || l > kMaxLmax) {
    throw InputError(where + " = " + std::to_string(l) + " is out of range [0, " +
                     std::to_string(kMaxLmax) + "]");
  }
  return l;
}

std::string complex_text(Complex c) {
  return "[" + format_double(c.real()) + ", " + format_double(c.imag()) + "]";
}

std::vector<Complex> complex_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array");
  std::vector<Complex> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_complex(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string values_block(const std::vector<Complex>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i == 0 ? "\n    " : ",\n    ") + complex_text(values[i]);
  }
  out += values.empty() ? "]" : "\n  ]";
  return out;
}

// Boundary data given inline as "harmonic:(...)" or "constant:c".
AngularFunction inline_data(const std::string& text, int d, const std::string& where, int& level) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "harmonic") {
    MultiIndex idx;
    try {
      idx = parse_multi_index(arg);
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
    if (idx.dimension() != d) {
      throw InputError(where + ": harmonic " + to_string(idx) + " does not have dimension d = " +
                       std::to_string(d));
    }
    level = idx.l;
    return [idx](const Angles& a) { return eval_harmonic(idx, a); };
  }
  if (kind == "constant") {
    double c = 0.0;
    try {
      std::size_t used = 0;
      c = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw InputError(where + ": malformed constant '" + arg + "'");
    }
    level = 0;
    return [c](const Angles&) { return Complex{c, 0.0}; };
  }
  throw InputError(where + ": unknown data kind '" + kind + "' (expected harmonic:(...) or constant:c)");
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string write_coefficients(const HarmonicExpansion& expansion) {
  std::ostringstream os;
  os << "{\n  \"d\": " << expansion.dimension() << ",\n  \"lmax\": " << expansion.lmax()
     << ",\n  \"coefficients\": [";
  bool first = true;
  for (const auto& [idx, c] : expansion.coefficients()) {
    os << (first ? "\n    " : ",\n    ") << "{\"index\": [" << idx.l;
    for (int m : idx.m) os << ", " << m;
    os << "], \"A\": " << complex_text(c.a) << ", \"B\": " << complex_text(c.b) << "}";
    first = false;
  }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

HarmonicExpansion read_coefficients(const std::string& text) {
  const json doc = parse(text, "coefficients");
  const int d = checked_dimension(field(doc, "d", "coefficients"), "coefficients: d");
  const int lmax = checked_lmax(field(doc, "lmax", "coefficients"), "coefficients: lmax");
  const json& list = field(doc, "coefficients", "coefficients");
  if (!list.is_array()) throw InputError("coefficients: 'coefficients' must be an array");

  HarmonicExpansion out(d, lmax);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "coefficients[" + std::to_string(i) + "]";
    const json& entry = list[i];
    const json& index = field(entry, "index", where);
    if (!index.is_array() || index.size() != static_cast<std::size_t>(d - 1)) {
      throw InputError(where + ".index must list l and d-2 orders");
    }
    MultiIndex idx;
    idx.l = as_int(index[0], where + ".index[0]");
    for (std::size_t k = 1; k < index.size(); ++k) {
      idx.m.push_back(as_int(index[k], where + ".index[" + std::to_string(k) + "]"));
    }
    RadialCoefficients c;
    c.a = entry.contains("A") ? as_complex(entry["A"], where + ".A") : Complex{};
    c.b = entry.contains("B") ? as_complex(entry["B"], where + ".B") : Complex{};
    try {
      out.set(idx, c);
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return out;
}

std::vector<UltrasphericalPoint> read_points(const std::string& text) {
  const json doc = parse(text, "points");
  const json& list = doc.is_array() ? doc : field(doc, "points", "points");
  if (!list.is_array()) throw InputError("points: 'points' must be an array");

  std::vector<UltrasphericalPoint> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const json& entry = list[i];
    if (!entry.is_object()) throw InputError(where + " must be an object");
    if (entry.contains("cartesian")) {
      CartesianPoint x{as_double_array(entry["cartesian"], where + ".cartesian")};
      if (x.dimension() < 3) throw InputError(where + ".cartesian needs at least 3 coordinates");
      out.push_back(to_ultraspherical(x));
    } else if (entry.contains("ultraspherical")) {
      const json& u = entry["ultraspherical"];
      UltrasphericalPoint p;
      p.r = as_double(field(u, "r", where), where + ".r");
      p.angles.theta = as_double_array(field(u, "theta", where), where + ".theta");
      p.angles.phi = as_double(field(u, "phi", where), where + ".phi");
      try {
        validate(p);
      } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
      }
      out.push_back(std::move(p));
    } else {
      throw InputError(where + " needs 'cartesian' or 'ultraspherical'");
    }
  }
  return out;
}

std::string write_values(const std::vector<Complex>& values) {
  return "{\n  \"values\": " + values_block(values) + "\n}\n";
}

std::vector<Complex> read_values(const std::string& text) {
  const json doc = parse(text, "values");
  return complex_array(field(doc, "values", "values"), "values");
}

std::string write_samples(const GridSamples& samples) {
  return "{\n  \"d\": " + std::to_string(samples.grid.dimension()) +
         ",\n  \"grid_lmax\": " + std::to_string(samples.grid.lmax()) +
         ",\n  \"values\": " + values_block(samples.values) + "\n}\n";
}

GridSamples read_samples(const std::string& text) {
  const json doc = parse(text, "samples");
  const int d = checked_dimension(field(doc, "d", "samples"), "samples: d");
  const int grid_lmax = checked_lmax(field(doc, "grid_lmax", "samples"), "samples: grid_lmax");
  GridSamples out{SphereGrid(d, grid_lmax), complex_array(field(doc, "values", "samples"), "samples: values")};
  if (out.values.size() != out.grid.size()) {
    throw InputError("samples: expected " + std::to_string(out.grid.size()) +
                     " values for the d = " + std::to_string(d) + ", grid_lmax = " +
                     std::to_string(grid_lmax) + " grid, got " + std::to_string(out.values.size()));
  }
  return out;
}

BoundaryProblem read_config(const std::string& text, const std::filesystem::path& base_dir) {
  const json doc = parse(text, "config");
  BoundaryProblem p;
  p.d = checked_dimension(field(doc, "d", "config"), "config: d");
  p.lmax = checked_lmax(field(doc, "lmax", "config"), "config: lmax");

  const json& kind = field(doc, "kind", "config");
  if (!kind.is_string()) throw InputError("config: kind must be a string");
  static const std::map<std::string, DomainKind> kinds = {
      {"interior", DomainKind::Interior},
      {"exterior", DomainKind::Exterior},
      {"annulus", DomainKind::Annulus}};
  const auto kit = kinds.find(kind.get<std::string>());
  if (kit == kinds.end()) {
    throw InputError("config: kind '" + kind.get<std::string>() +
                     "' is not one of interior, exterior, annulus");
  }
  p.kind = kit->second;

  const auto radii = as_double_array(field(doc, "radii", "config"), "config: radii");
  const std::size_t expected = p.kind == DomainKind::Annulus ? 2 : 1;
  if (radii.size() != expected) {
    throw InputError("config: radii must have " + std::to_string(expected) + " entr" +
                     (expected == 1 ? "y" : "ies") + " for kind '" + kind.get<std::string>() + "'");
  }
  for (double r : radii) {
    if (!(r > 0.0)) throw InputError("config: radii must be > 0");
  }
  if (p.kind == DomainKind::Annulus && !(radii[0] < radii[1])) {
    throw InputError("config: annulus requires radii[0] < radii[1] (R_inner < R_outer)");
  }

  int grid_lmax = p.lmax;
  const bool explicit_grid = doc.contains("grid_lmax");
  if (explicit_grid) {
    grid_lmax = checked_lmax(doc["grid_lmax"], "config: grid_lmax");
    if (grid_lmax < p.lmax) throw InputError("config: grid_lmax must be >= lmax");
  }

  const json& boundary = field(doc, "boundary", "config");
  if (!boundary.is_array() || boundary.size() != expected) {
    throw InputError("config: boundary must list " + std::to_string(expected) + " sphere(s)");
  }
  std::vector<bool> used(radii.size(), false);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const std::string where = "config: boundary[" + std::to_string(i) + "]";
    const json& entry = boundary[i];
    const double radius = as_double(field(entry, "radius", where), where + ".radius");
    std::size_t slot = radii.size();
    for (std::size_t k = 0; k < radii.size(); ++k) {
      if (radii[k] == radius && !used[k]) slot = k;
    }
    if (slot == radii.size()) {
      throw InputError(where + ".radius " + format_double(radius) + " does not match an unused entry of radii");
    }
    used[slot] = true;

    const bool has_data = entry.contains("data");
    const bool has_file = entry.contains("samples-file");
    if (has_data == has_file) throw InputError(where + " needs exactly one of 'data' or 'samples-file'");

    BoundarySphere sphere{radius, GridSamples{SphereGrid(p.d, grid_lmax), {}}};
    if (has_data) {
      if (!entry["data"].is_string()) throw InputError(where + ".data must be a string");
      int level = 0;
      const auto f = inline_data(entry["data"].get<std::string>(), p.d, where + ".data", level);
      // Without an explicit grid, resolve the data exactly.
      const int lm = explicit_grid ? grid_lmax : std::max(grid_lmax, level);
      sphere.data = sample(SphereGrid(p.d, lm), f);
    } else {
      if (!entry["samples-file"].is_string()) throw InputError(where + ".samples-file must be a string");
      std::filesystem::path path = entry["samples-file"].get<std::string>();
      if (path.is_relative()) path = base_dir / path;
      sphere.data = read_samples(read_file(path));
      if (sphere.data.grid.dimension() != p.d) {
        throw InputError(where + ": samples file has dimension " +
                         std::to_string(sphere.data.grid.dimension()) + ", config has d = " +
                         std::to_string(p.d));
      }
      if (sphere.data.grid.lmax() < p.lmax) {
        throw InputError(where + ": samples grid_lmax is below lmax");
      }
    }
    p.boundaries.push_back(std::move(sphere));
  }
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace hyperlaplace::io
