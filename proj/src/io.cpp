#include "holosamp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace holosamp {

namespace {

const json& require_key(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require_key(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

double require_number(const json& j, const char* key) {
  const json& v = require_key(j, key);
  if (!v.is_number()) throw SchemaError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

std::vector<double> require_reals(const json& j, const char* key) {
  const json& v = require_key(j, key);
  if (!v.is_array()) throw SchemaError(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw SchemaError(std::string("\"") + key + "\" entries must be numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

// Library validation failures inside a document are schema violations.
template <class F>
auto as_schema(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ShapeError& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("complex values must be [re, im] arrays");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(std::span<const cplx> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

CVector vector_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of complex values");
  CVector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

json to_json(const SpinState& s) { return {{"two_s", s.two_s.twice()}, {"coeffs", vector_to_json(s.coeffs)}}; }

json to_json(const SampleVector& s) {
  json out = {{"two_s", s.spec.two_s().twice()}, {"n", s.spec.n()}, {"values", vector_to_json(s.values)}};
  if (!s.spec.unit_circle()) {
    out["radius"] = s.spec.circle().radius;
    out["phase"] = s.spec.circle().phase;
  }
  return out;
}

json to_json(const BandLimitedState& s) { return {{"J", s.J}, {"coeffs", vector_to_json(s.coeffs)}}; }

json to_json(const ParallelsGrid& g) { return {{"J", g.J()}, {"radii", g.radii()}}; }

json to_json(const MultiSamples& s) {
  return {{"J", s.grid.J()}, {"radii", s.grid.radii()}, {"values", vector_to_json(s.values)}};
}

json to_json(const EulerSamples& s) {
  return {{"j", s.j}, {"theta0", s.theta0}, {"values", vector_to_json(s.values)}};
}

SpinState spin_state_from_json(const json& j) {
  const int two_s = require_int(j, "two_s");
  CVector c = vector_from_json(require_key(j, "coeffs"));
  return as_schema([&] { return SpinState(TwiceSpin(two_s), std::move(c)); });
}

SampleVector sample_vector_from_json(const json& j) {
  const int two_s = require_int(j, "two_s");
  const int n = require_int(j, "n");
  if (n <= 0) throw SchemaError("\"n\" must be positive");
  SamplingCircle circle;
  if (j.contains("radius")) circle.radius = require_number(j, "radius");
  if (j.contains("phase")) circle.phase = require_number(j, "phase");
  CVector v = vector_from_json(require_key(j, "values"));
  return as_schema([&] { return SampleVector(FrameSpec(TwiceSpin(two_s), static_cast<std::size_t>(n), circle), std::move(v)); });
}

BandLimitedState band_limited_state_from_json(const json& j) {
  const int J = require_int(j, "J");
  CVector c = vector_from_json(require_key(j, "coeffs"));
  return as_schema([&] { return BandLimitedState(J, std::move(c)); });
}

ParallelsGrid grid_from_json(const json& j) {
  const int J = require_int(j, "J");
  auto radii = require_reals(j, "radii");
  return as_schema([&] { return ParallelsGrid(J, std::move(radii)); });
}

MultiSamples multi_samples_from_json(const json& j) {
  ParallelsGrid grid = grid_from_json(j);
  CVector v = vector_from_json(require_key(j, "values"));
  if (v.size() != grid.size())
    throw SchemaError("expected " + std::to_string(grid.size()) + " values for the grid, got " + std::to_string(v.size()));
  for (const auto& x : v)
    if (!is_finite(x)) throw SchemaError("sample values must be finite");
  return {std::move(grid), std::move(v)};
}

EulerSamples euler_samples_from_json(const json& j) {
  const int spin = require_int(j, "j");
  const double theta0 = require_number(j, "theta0");
  CVector v = vector_from_json(require_key(j, "values"));
  return as_schema([&] { return EulerSamples(spin, theta0, std::move(v)); });
}

Document document_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("document must be a JSON object");
  if (j.contains("theta0")) return euler_samples_from_json(j);
  if (j.contains("two_s")) {
    if (j.contains("values")) return sample_vector_from_json(j);
    return spin_state_from_json(j);
  }
  if (j.contains("J")) {
    if (j.contains("values")) return multi_samples_from_json(j);
    return band_limited_state_from_json(j);
  }
  throw SchemaError("unrecognized document: expected a state, sample or Euler-sample object");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace holosamp
