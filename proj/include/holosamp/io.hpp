#pragma once

// JSON exchange formats.  Complex numbers are two-element arrays [re, im].
//
//   SpinState          {"two_s": int, "coeffs": [[re,im], ...]}
//   SampleVector       {"two_s": int, "n": int, "values": [...]}  (+ "radius", "phase" off the unit circle)
//   BandLimitedState   {"J": int, "coeffs": [...]}                 (s, n) lexicographic
//   ParallelsGrid      {"J": int, "radii": [r_0, ...]}
//   MultiSamples       {"J": int, "radii": [...], "values": [...]}
//   EulerSamples       {"j": int, "theta0": real, "values": [...]}

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "holosamp/euler.hpp"
#include "holosamp/multispin.hpp"
#include "holosamp/singlespin.hpp"

namespace holosamp {

class SchemaError : public Error {
 public:
  using Error::Error;
};

using nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);
json vector_to_json(std::span<const cplx> v);
CVector vector_from_json(const json& j);

json to_json(const SpinState& s);
json to_json(const SampleVector& s);
json to_json(const BandLimitedState& s);
json to_json(const ParallelsGrid& g);
json to_json(const EulerSamples& s);

struct MultiSamples {
  ParallelsGrid grid;
  CVector values;
};
json to_json(const MultiSamples& s);

SpinState spin_state_from_json(const json& j);
SampleVector sample_vector_from_json(const json& j);
BandLimitedState band_limited_state_from_json(const json& j);
ParallelsGrid grid_from_json(const json& j);
MultiSamples multi_samples_from_json(const json& j);
EulerSamples euler_samples_from_json(const json& j);

using Document = std::variant<SpinState, SampleVector, BandLimitedState, MultiSamples, EulerSamples>;

// Classify a JSON document by its keys and parse it.
Document document_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// %.17g
std::string format_double(double x);

}  // namespace holosamp
