#include "holosamp/singlespin.hpp"

#include <cmath>
#include <string>

#include "holosamp/rfm.hpp"

namespace holosamp {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::oversampled:
      return "oversampled";
    case Regime::critical:
      return "critical";
    case Regime::undersampled:
      return "undersampled";
  }
  return "unknown";
}

FrameSpec::FrameSpec(TwiceSpin two_s, std::size_t n_samples, SamplingCircle circle)
    : two_s_(two_s), n_(n_samples), circle_(circle) {
  if (n_samples == 0) throw ShapeError("number of samples must be positive");
  if (!(circle.radius > 0.0) || !std::isfinite(circle.radius) || !std::isfinite(circle.phase))
    throw ShapeError("sampling circle needs a finite positive radius");
}

Regime FrameSpec::regime() const {
  if (n_ > dim()) return Regime::oversampled;
  if (n_ == dim()) return Regime::critical;
  return Regime::undersampled;
}

CVector FrameSpec::sample_points() const {
  CVector z = roots_of_unity(n_);
  if (!unit_circle()) {
    const cplx c = circle_.point();
    for (auto& x : z) x *= c;
  }
  return z;
}

SampleVector::SampleVector(FrameSpec s, CVector v) : spec(s), values(std::move(v)) {
  if (values.size() != spec.n())
    throw ShapeError("sample vector has " + std::to_string(values.size()) + " values, frame expects " +
                     std::to_string(spec.n()));
  for (const auto& x : values) require_finite(x, "sample value");
}

namespace {

void require_not_undersampled(const FrameSpec& spec, const char* op) {
  if (spec.regime() == Regime::undersampled)
    throw RegimeError(std::string(op) + " requires N >= 2s+1 (got N=" + std::to_string(spec.n()) +
                      ", 2s+1=" + std::to_string(spec.dim()) + ")");
}

void require_not_oversampled(const FrameSpec& spec, const char* op) {
  if (spec.regime() == Regime::oversampled)
    throw RegimeError(std::string(op) + " requires N <= 2s+1 (got N=" + std::to_string(spec.n()) +
                      ", 2s+1=" + std::to_string(spec.dim()) + ")");
}

}  // namespace

Frame::Frame(FrameSpec spec) : spec_(spec), evaluator_(spec.two_s()) {
  weights_ = evaluator_.components(spec_.circle().point());
  const double n = static_cast<double>(spec_.n());
  lambda_.resize(spec_.dim());
  lambda_hat_.assign(spec_.n(), 0.0);
  for (std::size_t i = 0; i < spec_.dim(); ++i) {
    lambda_[i] = n * std::norm(weights_[i]);
    lambda_hat_[i % spec_.n()] += lambda_[i];
  }
  dual_coeffs_.resize(spec_.dim());
  for (std::size_t i = 0; i < spec_.dim(); ++i) dual_coeffs_[i] = std::conj(weights_[i]) / lambda_hat_[i % spec_.n()];
}

CVector Frame::apply(std::span<const cplx> coeffs) const {
  if (coeffs.size() != spec_.dim()) throw ShapeError("frame apply: coefficient count mismatch");
  CVector weighted(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) weighted[i] = weights_[i] * coeffs[i];
  CVector out = rfm_apply(RfmShape(spec_.n(), spec_.dim()), weighted, /*conjugate=*/true);
  const double root_n = std::sqrt(static_cast<double>(spec_.n()));
  for (auto& x : out) x *= root_n;
  return out;
}

CVector Frame::apply_adjoint(std::span<const cplx> data) const {
  if (data.size() != spec_.n()) throw ShapeError("frame adjoint: data length mismatch");
  CVector out = rfm_apply_adjoint(RfmShape(spec_.n(), spec_.dim()), data, /*conjugate=*/true);
  const double root_n = std::sqrt(static_cast<double>(spec_.n()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= root_n * std::conj(weights_[i]);
  return out;
}

CVector Frame::pseudo_inverse(std::span<const cplx> data) const {
  CVector out = apply_adjoint(data);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= lambda_hat_[i % spec_.n()];
  return out;
}

CVector Frame::pinv_spectrum() const {
  CVector g(spec_.n(), cplx{});
  for (std::size_t p = 0; p < spec_.n() && p < spec_.dim(); ++p) g[p] = 1.0 / lambda_hat_[p];
  return g;
}

cplx Frame::kernel(cplx w) const { return evaluator_(dual_coeffs_, w); }

ComplexMatrix frame_matrix(const FrameSpec& spec) {
  const MajoranaEvaluator ev(spec.two_s());
  const CVector points = spec.sample_points();
  ComplexMatrix t(static_cast<Eigen::Index>(spec.n()), static_cast<Eigen::Index>(spec.dim()));
  for (std::size_t k = 0; k < points.size(); ++k) {
    const CVector row = ev.components(points[k]);
    for (std::size_t n = 0; n < row.size(); ++n) t(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n)) = row[n];
  }
  return t;
}

std::vector<double> resolution_eigenvalues(const FrameSpec& spec) {
  require_not_undersampled(spec, "resolution_eigenvalues");
  return Frame(spec).lambda();
}

CirculantKernel overlap_kernel(const FrameSpec& spec) {
  const double r2 = spec.circle().radius * spec.circle().radius;
  const CVector roots = roots_of_unity(spec.n());
  CVector row(spec.n());
  for (std::size_t m = 0; m < row.size(); ++m) row[m] = ipow((1.0 + r2 * roots[m]) / (1.0 + r2), spec.two_s().twice());
  return CirculantKernel(std::move(row));
}

std::vector<double> overlap_eigenvalues(const FrameSpec& spec) { return Frame(spec).lambda_hat(); }

SampleVector sample_state(const SpinState& state, const FrameSpec& spec) {
  if (state.two_s != spec.two_s()) throw ShapeError("sample_state: spin of state and frame differ");
  return SampleVector(spec, Frame(spec).apply(state.coeffs));
}

SampleVector sample_state(const SpinState& state, std::size_t n) {
  return sample_state(state, FrameSpec(state.two_s, n));
}

cplx xi_kernel(const FrameSpec& spec, cplx w) {
  require_not_undersampled(spec, "xi_kernel");
  return Frame(spec).kernel(w);
}

cplx xi_hat_kernel(const FrameSpec& spec, cplx w) {
  require_not_oversampled(spec, "xi_hat_kernel");
  return Frame(spec).kernel(w);
}

cplx reconstruct(const SampleVector& samples, cplx z) {
  require_finite(z, "z");
  const Frame frame(samples.spec);
  const CVector roots = roots_of_unity(samples.spec.n());
  cplx acc = 0.0;
  for (std::size_t k = 0; k < roots.size(); ++k) acc += samples.values[k] * frame.kernel(z * std::conj(roots[k]));
  return acc;
}

SpinState coefficients_from_samples(const SampleVector& samples) {
  const Frame frame(samples.spec);
  return SpinState(samples.spec.two_s(), frame.pseudo_inverse(samples.values));
}

CVector dual_filter(const FrameSpec& spec) { return unitary_dft(Frame(spec).pinv_spectrum(), /*inverse=*/true); }

CVector dual_data(const SampleVector& samples) {
  return apply_spectral(Frame(samples.spec).pinv_spectrum(), samples.values);
}

CVector range_projector_apply(const FrameSpec& spec, std::span<const cplx> data) {
  require_not_undersampled(spec, "range_projector_apply");
  if (data.size() != spec.n()) throw ShapeError("range_projector_apply: data length mismatch");
  const CVector modes = unitary_dft(data, /*inverse=*/false);
  return unitary_dft(pad(truncate(modes, spec.dim()), spec.n()), /*inverse=*/true);
}

double projection_residual(const FrameSpec& spec, std::span<const cplx> data) {
  if (spec.regime() == Regime::undersampled) return 0.0;
  const CVector projected = range_projector_apply(spec, data);
  double s = 0.0;
  for (std::size_t k = 0; k < data.size(); ++k) s += std::norm(data[k] - projected[k]);
  return std::sqrt(s);
}

namespace {

CVector interpolation_weights(const FrameSpec& spec, std::span<const cplx> zeta, double tol) {
  if (zeta.size() != spec.n()) throw ShapeError("covariant_interpolate: data length mismatch");
  for (const auto& x : zeta) require_finite(x, "interpolation datum");
  const Frame frame(spec);
  CVector spectrum(frame.lambda_hat().begin(), frame.lambda_hat().end());
  const auto kernel = CirculantKernel::from_spectrum(std::move(spectrum));
  if (spec.regime() != Regime::oversampled) return circ_solve(kernel, zeta, tol);
  const double residual = projection_residual(spec, zeta);
  const double scale = std::max(1.0, norm2(zeta));
  if (residual > 1e-10 * scale)
    throw RegimeError("covariant_interpolate: oversampled data are inconsistent (residual " +
                      std::to_string(residual) + "), no interpolant exists");
  return circ_pinv_apply(kernel, zeta, tol);
}

}  // namespace

cplx covariant_interpolate(const FrameSpec& spec, std::span<const cplx> zeta, cplx z, double tol) {
  require_finite(z, "z");
  const CVector gamma = interpolation_weights(spec, zeta, tol);
  const CVector points = spec.sample_points();
  cplx acc = 0.0;
  for (std::size_t l = 0; l < points.size(); ++l) acc += gamma[l] * cs_overlap(spec.two_s(), z, points[l]);
  return acc;
}

SpinState covariant_interpolant_state(const FrameSpec& spec, std::span<const cplx> zeta, double tol) {
  const CVector gamma = interpolation_weights(spec, zeta, tol);
  return SpinState(spec.two_s(), Frame(spec).apply_adjoint(gamma));
}

double reciprocal_binomial_sum(TwiceSpin two_s) {
  double s = 0.0;
  for (int n = 0; n <= two_s.twice(); ++n) s += 1.0 / binom(two_s.twice(), n);
  return s;
}

Reconstructor::Reconstructor(const SampleVector& samples)
    : regime_(samples.spec.regime()),
      coeffs_(coefficients_from_samples(samples)),
      evaluator_(samples.spec.two_s()) {}

CVector Reconstructor::evaluate(std::span<const cplx> points) const {
  for (const auto& z : points) require_finite(z, "evaluation point");
  CVector out(points.size());
  const auto count = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = evaluator_(coeffs_.coeffs, points[k]);
  }
  return out;
}

CVector Reconstructor::evaluate_serial(std::span<const cplx> points) const {
  CVector out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(evaluator_(coeffs_.coeffs, z));
  return out;
}

}  // namespace holosamp
