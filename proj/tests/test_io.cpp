#include <doctest.h>

#include "holosamp/io.hpp"
#include "oracles.hpp"

using namespace holosamp;

TEST_CASE("complex values are two-element arrays") {
  CHECK(complex_to_json({1.5, -2}) == json::array({1.5, -2.0}));
  CHECK(complex_from_json(json::array({0.25, 3})) == cplx(0.25, 3));
  CHECK_THROWS_AS(complex_from_json(json::array({1})), SchemaError);
  CHECK_THROWS_AS(complex_from_json(json("x")), SchemaError);
}

TEST_CASE("documents round-trip exactly") {
  oracle::Rng rng(1);
  const SpinState s(TwiceSpin(3), rng.cvector(4));
  const auto s2 = spin_state_from_json(json::parse(to_json(s).dump()));
  CHECK(s2.two_s == s.two_s);
  CHECK(s2.coeffs == s.coeffs);

  const auto samples = sample_state(s, 6);
  const auto samples2 = sample_vector_from_json(json::parse(to_json(samples).dump()));
  CHECK(samples2.values == samples.values);
  CHECK(samples2.spec.n() == 6);

  const SampleVector off(FrameSpec(TwiceSpin(2), 4, SamplingCircle{0.5, 0.25}), rng.cvector(4));
  const auto off2 = sample_vector_from_json(json::parse(to_json(off).dump()));
  CHECK(off2.spec.circle().radius == 0.5);
  CHECK(off2.spec.circle().phase == 0.25);

  const BandLimitedState b(2, rng.cvector(9));
  CHECK(band_limited_state_from_json(json::parse(to_json(b).dump())).coeffs == b.coeffs);

  const auto grid = ParallelsGrid::with_default_radii(2);
  CHECK(grid_from_json(to_json(grid)).radii() == grid.radii());

  const MultiSamples ms{grid, rng.cvector(9)};
  CHECK(multi_samples_from_json(to_json(ms)).values == ms.values);

  const EulerSamples e(2, 0.9, rng.cvector(5));
  const auto e2 = euler_samples_from_json(json::parse(to_json(e).dump()));
  CHECK(e2.theta0 == e.theta0);
  CHECK(e2.values == e.values);
}

TEST_CASE("documents are classified by their keys") {
  oracle::Rng rng(2);
  const SpinState s(TwiceSpin(2), rng.cvector(3));
  CHECK(std::holds_alternative<SpinState>(document_from_json(to_json(s))));
  CHECK(std::holds_alternative<SampleVector>(document_from_json(to_json(sample_state(s, 3)))));
  CHECK(std::holds_alternative<BandLimitedState>(document_from_json(to_json(BandLimitedState(1, rng.cvector(4))))));
  CHECK(std::holds_alternative<MultiSamples>(
      document_from_json(to_json(MultiSamples{ParallelsGrid::with_default_radii(1), rng.cvector(4)}))));
  CHECK(std::holds_alternative<EulerSamples>(document_from_json(to_json(EulerSamples(1, 1.0, rng.cvector(3))))));
  CHECK_THROWS_AS(document_from_json(json{{"foo", 1}}), SchemaError);
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(spin_state_from_json(json{{"two_s", 2}, {"coeffs", json::array({json::array({1, 0})})}}), SchemaError);
  CHECK_THROWS_AS(spin_state_from_json(json{{"two_s", -1}, {"coeffs", json::array()}}), SchemaError);
  CHECK_THROWS_AS(spin_state_from_json(json{{"coeffs", json::array()}}), SchemaError);
  CHECK_THROWS_AS(sample_vector_from_json(json{{"two_s", 2}, {"n", 3}, {"values", json::array()}}), SchemaError);
  CHECK_THROWS_AS(euler_samples_from_json(json{{"j", 1}, {"theta0", 0.0}, {"values", json::array({json::array({1, 0}), json::array({1, 0}), json::array({1, 0})})}}),
                  SchemaError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), SchemaError);
}

TEST_CASE("17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
