#include "holosamp/cli.hpp"

#include <chrono>
#include <functional>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "holosamp/io.hpp"

namespace holosamp::cli {

namespace {

struct RunConfig {
  std::string input;
  std::string out;
  std::string reference;
  std::string format = "csv";
  std::optional<int> two_s;
  std::optional<int> band_limit;
  std::optional<int> samples;
  double theta0 = kPi / 4;
  bool theta0_given = false;
  std::uint64_t seed = 0;
  double tol = kDefaultSingularTol;
  int grid = 21;
  double radius = 1.0;
  bool radius_given = false;
  bool alias = false;
  int n_min = 1, n_max = 0;
  int j_min = 1, j_max = 0;
};

// Points of an n x n square grid on [-R, R]^2 that fall inside |z| <= R, row-major.
CVector disk_grid(int n, double radius) {
  CVector pts;
  if (n <= 0) return pts;
  for (int row = 0; row < n; ++row) {
    const double y = n == 1 ? 0.0 : -radius + 2.0 * radius * row / (n - 1);
    for (int col = 0; col < n; ++col) {
      const double x = n == 1 ? 0.0 : -radius + 2.0 * radius * col / (n - 1);
      if (x * x + y * y <= radius * radius * (1.0 + 1e-12)) pts.emplace_back(x, y);
    }
  }
  return pts;
}

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out) : path_(cfg.out), out_(out) {}
  void emit(const std::string& text) {
    if (path_.empty())
      out_ << text;
    else
      write_text_file(path_, text);
  }
  void emit(const json& doc) { emit(doc.dump(2) + "\n"); }

 private:
  std::string path_;
  std::ostream& out_;
};

double snap_theta0(double theta0) { return std::abs(theta0 - kPi / 2) < 1e-6 ? kPi / 2 : theta0; }

CVector random_unit_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(dim);
  for (auto& x : v) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    x = {re, im};
  }
  const double n = norm2(v);
  for (auto& x : v) x /= n;
  return v;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.two_s.has_value() == cfg.band_limit.has_value()) {
    err << "gen: give exactly one of --two-s or --J\n";
    return kInputError;
  }
  Output sink(cfg, out);
  if (cfg.two_s) {
    const TwiceSpin ts(*cfg.two_s);
    sink.emit(to_json(SpinState(ts, random_unit_vector(static_cast<std::size_t>(ts.dim()), cfg.seed))));
  } else {
    const int J = *cfg.band_limit;
    if (J < 0) throw ShapeError("--J must be non-negative");
    sink.emit(to_json(BandLimitedState(J, random_unit_vector(BandLimitedState::dimension(J), cfg.seed))));
  }
  return kOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Document doc = document_from_json(read_json_file(cfg.input));
  Output sink(cfg, out);
  if (const auto* s = std::get_if<SpinState>(&doc)) {
    const std::size_t n = cfg.samples ? static_cast<std::size_t>(*cfg.samples) : static_cast<std::size_t>(s->two_s.dim());
    if (cfg.samples && *cfg.samples <= 0) throw ShapeError("-n must be positive");
    const FrameSpec spec(s->two_s, n, SamplingCircle{cfg.radius, 0.0});
    err << "regime=" << regime_name(spec.regime()) << "\n";
    sink.emit(to_json(sample_state(*s, spec)));
    return kOk;
  }
  if (const auto* b = std::get_if<BandLimitedState>(&doc)) {
    const auto grid = ParallelsGrid::with_default_radii(b->J);
    sink.emit(to_json(MultiSamples{grid, multi_sample_state(*b, grid)}));
    return kOk;
  }
  err << "sample: input must be a SpinState or BandLimitedState document\n";
  return kInputError;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Document doc = document_from_json(read_json_file(cfg.input));
  Output sink(cfg, out);
  if (const auto* s = std::get_if<SampleVector>(&doc)) {
    err << "regime=" << regime_name(s->spec.regime()) << "\n";
    if (s->spec.regime() == Regime::oversampled)
      err << "projection_residual=" << format_double(projection_residual(s->spec, s->values)) << "\n";
    sink.emit(to_json(coefficients_from_samples(*s)));
    return kOk;
  }
  if (const auto* m = std::get_if<MultiSamples>(&doc)) {
    const MultiReconstructor rec(m->grid, m->values);
    err << "condition=" << format_double(rec.condition()) << "\n";
    sink.emit(to_json(rec.coefficients()));
    return kOk;
  }
  if (const auto* e = std::get_if<EulerSamples>(&doc)) {
    sink.emit(to_json(coefficients_from_samples(euler_to_holo(*e, cfg.tol))));
    return kOk;
  }
  err << "coeffs: input must be a sample document\n";
  return kInputError;
}

int cmd_reconstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Document doc = document_from_json(read_json_file(cfg.input));
  const CVector points = disk_grid(cfg.grid, cfg.radius);
  CVector values;
  std::function<cplx(cplx)> truth;
  if (const auto* s = std::get_if<SampleVector>(&doc)) {
    const Reconstructor rec(*s);
    values = rec.evaluate(points);
    const CVector at_samples = rec.evaluate(s->spec.sample_points());
    err << "regime=" << regime_name(rec.regime()) << "\n";
    if (rec.regime() == Regime::undersampled)
      err << "alias_residual=" << format_double(max_abs_diff(at_samples, s->values)) << "\n";
    else
      err << "projection_residual=" << format_double(projection_residual(s->spec, s->values)) << "\n";
    if (!cfg.reference.empty()) {
      const SpinState ref = spin_state_from_json(read_json_file(cfg.reference));
      if (ref.two_s != s->spec.two_s()) throw SchemaError("reference state spin differs from samples");
      truth = [ref](cplx z) { return majorana_eval(ref, z); };
    }
  } else if (const auto* m = std::get_if<MultiSamples>(&doc)) {
    const MultiReconstructor rec(m->grid, m->values);
    values = rec.evaluate(points);
    err << "condition=" << format_double(rec.condition()) << "\n";
    if (!cfg.reference.empty()) {
      const BandLimitedState ref = band_limited_state_from_json(read_json_file(cfg.reference));
      if (ref.J != m->grid.J()) throw SchemaError("reference state band limit differs from samples");
      truth = [ref](cplx z) { return multi_majorana_eval(ref, z); };
    }
  } else {
    err << "reconstruct: input must be a sample document\n";
    return kInputError;
  }

  Output sink(cfg, out);
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      json row = {{"z", complex_to_json(points[i])}, {"psi", complex_to_json(values[i])}};
      if (truth) row["abs_err"] = std::abs(values[i] - truth(points[i]));
      rows.push_back(row);
    }
    sink.emit(rows);
    return kOk;
  }
  std::ostringstream csv;
  csv << "z_re,z_im,psi_re,psi_im" << (truth ? ",abs_err" : "") << "\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    csv << format_double(points[i].real()) << ',' << format_double(points[i].imag()) << ','
        << format_double(values[i].real()) << ',' << format_double(values[i].imag());
    if (truth) csv << ',' << format_double(std::abs(values[i] - truth(points[i])));
    csv << "\n";
  }
  sink.emit(csv.str());
  return kOk;
}

int cmd_filter(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<SampleVector> samples;
  std::optional<FrameSpec> spec;
  if (!cfg.input.empty()) {
    samples = sample_vector_from_json(read_json_file(cfg.input));
    spec = samples->spec;
  } else {
    if (!cfg.two_s || !cfg.samples) {
      err << "filter: give a sample file or both --two-s and -n\n";
      return kInputError;
    }
    if (*cfg.samples <= 0) throw ShapeError("-n must be positive");
    spec = FrameSpec(TwiceSpin(*cfg.two_s), static_cast<std::size_t>(*cfg.samples), SamplingCircle{cfg.radius, 0.0});
  }
  err << "regime=" << regime_name(spec->regime()) << "\n";
  const CVector delta = dual_filter(*spec);
  CVector gamma;
  if (samples) gamma = dual_data(*samples);

  Output sink(cfg, out);
  if (cfg.format == "json") {
    json doc = {{"two_s", spec->two_s().twice()}, {"n", spec->n()}, {"filter", vector_to_json(delta)}};
    if (samples) doc["dual_data"] = vector_to_json(gamma);
    sink.emit(doc);
    return kOk;
  }
  std::ostringstream csv;
  csv << "k,delta_re,delta_im" << (samples ? ",gamma_re,gamma_im" : "") << "\n";
  for (std::size_t k = 0; k < delta.size(); ++k) {
    csv << k << ',' << format_double(delta[k].real()) << ',' << format_double(delta[k].imag());
    if (samples) csv << ',' << format_double(gamma[k].real()) << ',' << format_double(gamma[k].imag());
    csv << "\n";
  }
  sink.emit(csv.str());
  return kOk;
}

void report_dead_modes(std::ostream& err, const SingularKernelError& e) {
  err << "conversion is not invertible: omega vanishes on mode(s)";
  for (auto k : e.modes()) err << ' ' << k;
  err << "\n";
}

int cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Document doc = document_from_json(read_json_file(cfg.input));
  Output sink(cfg, out);
  if (const auto* s = std::get_if<SampleVector>(&doc)) {
    const double theta0 = snap_theta0(cfg.theta0);
    if (!s->spec.two_s().is_integer()) throw ShapeError("half-integer spin has no Euler-angle picture");
    const int j = s->spec.two_s().twice() / 2;
    const CVector omega = omega_eigens(j, theta0, s->spec.n());
    auto dead = dead_modes(omega, cfg.tol);
    if (!dead.empty()) {
      const SingularKernelError e(std::move(dead), 0.0);
      report_dead_modes(err, e);
      return kNumericalError;
    }
    sink.emit(to_json(holo_to_euler(*s, theta0)));
    return kOk;
  }
  if (const auto* e = std::get_if<EulerSamples>(&doc)) {
    EulerSamples samples = *e;
    samples.theta0 = snap_theta0(samples.theta0);
    if (cfg.alias) {
      const EquatorAlias alias = equator_alias(samples);
      if (alias.odd_dropped()) {
        err << "odd coefficients dropped:";
        for (int n : alias.dropped) err << ' ' << n;
        err << "\n";
      }
      sink.emit(to_json(alias.state));
      return kOk;
    }
    try {
      sink.emit(to_json(euler_to_holo(samples, cfg.tol)));
    } catch (const SingularKernelError& ex) {
      report_dead_modes(err, ex);
      return kNumericalError;
    }
    return kOk;
  }
  err << "convert: input must be SampleVector or EulerSamples\n";
  return kInputError;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  using clock = std::chrono::steady_clock;
  auto micros = [](clock::duration d) { return std::chrono::duration<double, std::micro>(d).count(); };
  std::ostringstream csv;
  csv << "kind,param,n,lambda_min,lambda_max,condition,formula_min,formula_max,assembly_us,solve_us\n";
  if (cfg.two_s) {
    const TwiceSpin ts(*cfg.two_s);
    for (int n = std::max(1, cfg.n_min); n <= cfg.n_max; ++n) {
      const FrameSpec spec(ts, static_cast<std::size_t>(n));
      const auto t0 = clock::now();
      const CirculantKernel kernel = overlap_kernel(spec);
      const auto t1 = clock::now();
      // the non-null modes are p < min(N, 2s+1)
      const std::size_t live = std::min(spec.n(), spec.dim());
      double lo = INFINITY, hi = 0.0;
      for (std::size_t p = 0; p < live; ++p) {
        lo = std::min(lo, kernel.eigenvalues()[p].real());
        hi = std::max(hi, kernel.eigenvalues()[p].real());
      }
      const auto formula = overlap_eigenvalues(spec);
      double flo = INFINITY, fhi = 0.0;
      for (std::size_t p = 0; p < live; ++p) {
        flo = std::min(flo, formula[p]);
        fhi = std::max(fhi, formula[p]);
      }
      const CVector rhs(spec.n(), cplx{1.0, 0.0});
      const auto t2 = clock::now();
      (void)circ_pinv_apply(kernel, rhs, cfg.tol);
      const auto t3 = clock::now();
      csv << "singlespin," << ts.twice() << ',' << n << ',' << format_double(lo) << ',' << format_double(hi) << ','
          << format_double(hi / lo) << ',' << format_double(flo) << ',' << format_double(fhi) << ','
          << format_double(micros(t1 - t0)) << ',' << format_double(micros(t3 - t2)) << "\n";
    }
  } else {
    for (int J = std::max(0, cfg.j_min); J <= cfg.j_max; ++J) {
      const auto grid = ParallelsGrid::with_default_radii(J);
      const auto t0 = clock::now();
      const ComplexMatrix kernel = multi_overlap_kernel(grid);
      const auto t1 = clock::now();
      const KernelSpectrum sp = hermitian_spectrum(kernel);
      const CVector rhs(grid.size(), cplx{1.0, 0.0});
      const auto t2 = clock::now();
      (void)MultiReconstructor(grid, rhs, 0.0);
      const auto t3 = clock::now();
      csv << "multispin," << J << ',' << grid.size() << ',' << format_double(sp.smallest) << ','
          << format_double(sp.largest) << ',' << format_double(sp.condition()) << ",,,"
          << format_double(micros(t1 - t0)) << ',' << format_double(micros(t3 - t2)) << "\n";
    }
  }
  Output(cfg, out).emit(csv.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sampling and reconstruction of spin-s Majorana functions on the sphere", "holosamp"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", cfg.out, "Output file (default stdout)"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* gen = app.add_subcommand("gen", "Generate a random unit-norm state");
  gen->add_option("--two-s", cfg.two_s, "Twice the spin of a single-spin state");
  gen->add_option("--J", cfg.band_limit, "Band limit of a multi-spin state");
  gen->add_option("--seed", cfg.seed, "Random seed");
  add_out(gen);

  auto* sample = app.add_subcommand("sample", "Sample a state at the roots of unity or on the parallels grid");
  sample->add_option("input", cfg.input, "State JSON")->required();
  sample->add_option("-n,--samples", cfg.samples, "Number of sampling points (default 2s+1)");
  sample->add_option("--radius", cfg.radius, "Radius of the sampling circle");
  add_out(sample);

  auto* coeffs = app.add_subcommand("coeffs", "Recover coefficients from samples");
  coeffs->add_option("input", cfg.input, "Sample JSON")->required();
  coeffs->add_option("--tol", cfg.tol, "Relative singularity tolerance");
  add_out(coeffs);

  auto* recon = app.add_subcommand("reconstruct", "Evaluate the reconstruction on a grid in the disk |z| <= R");
  recon->add_option("input", cfg.input, "Sample JSON")->required();
  recon->add_option("--grid", cfg.grid, "Grid points per side");
  recon->add_option("--radius", cfg.radius, "Disk radius R");
  recon->add_option("--reference", cfg.reference, "Reference state JSON; adds abs_err");
  add_format(recon);
  add_out(recon);

  auto* filter = app.add_subcommand("filter", "Emit the dual-data filter (and dual data for a sample file)");
  filter->add_option("input", cfg.input, "Sample JSON");
  filter->add_option("--two-s", cfg.two_s, "Twice the spin");
  filter->add_option("-n,--samples", cfg.samples, "Number of sampling points");
  filter->add_option("--radius", cfg.radius, "Radius of the sampling circle");
  add_format(filter);
  add_out(filter);

  auto* convert = app.add_subcommand("convert", "Convert samples between the holomorphic and Euler-angle pictures");
  convert->add_option("input", cfg.input, "SampleVector or EulerSamples JSON")->required();
  convert->add_option("--theta0", cfg.theta0, "Parallel of the Euler samples (radians)");
  convert->add_option("--tol", cfg.tol, "Relative tolerance for dead omega modes");
  convert->add_flag("--alias", cfg.alias, "Equator samples: recover the even coefficients only");
  add_out(convert);

  auto* bench = app.add_subcommand("bench", "Kernel spectra, conditioning and timings over a sweep");
  bench->add_option("--two-s", cfg.two_s, "Single-spin sweep over N");
  bench->add_option("--n-min", cfg.n_min, "First N");
  bench->add_option("--n-max", cfg.n_max, "Last N");
  bench->add_option("--J-min", cfg.j_min, "First J (multi-spin sweep)");
  bench->add_option("--J-max", cfg.j_max, "Last J (multi-spin sweep)");
  bench->add_option("--tol", cfg.tol, "Relative singularity tolerance");
  add_out(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*gen) return cmd_gen(cfg, out, err);
    if (*sample) return cmd_sample(cfg, out, err);
    if (*coeffs) return cmd_coeffs(cfg, out, err);
    if (*recon) return cmd_reconstruct(cfg, out, err);
    if (*filter) return cmd_filter(cfg, out, err);
    if (*convert) return cmd_convert(cfg, out, err);
    if (*bench) return cmd_bench(cfg, out, err);
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace holosamp::cli
