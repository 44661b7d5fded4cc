#include "holosamp/coherent.hpp"

#include <cmath>
#include <string>

namespace holosamp {

namespace {

void require_spin_index(TwiceSpin two_s, int n) {
  if (n < 0 || n > two_s.twice())
    throw ShapeError("basis index " + std::to_string(n) + " outside 0.." + std::to_string(two_s.twice()));
}

}  // namespace

SpinState::SpinState(TwiceSpin ts, CVector c) : two_s(ts), coeffs(std::move(c)) {
  if (coeffs.size() != static_cast<std::size_t>(ts.dim()))
    throw ShapeError("SpinState: expected " + std::to_string(ts.dim()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  for (const auto& a : coeffs) require_finite(a, "SpinState coefficient");
}

SpinState SpinState::basis(TwiceSpin ts, int n) {
  require_spin_index(ts, n);
  SpinState s = zero(ts);
  s.coeffs[static_cast<std::size_t>(n)] = 1.0;
  return s;
}

cplx ipow(cplx base, int exponent) {
  if (exponent < 0) return 1.0 / ipow(base, -exponent);
  cplx result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::vector<double> sqrt_binomial_row(TwiceSpin two_s) {
  const int m = two_s.twice();
  std::vector<double> w(static_cast<std::size_t>(m + 1));
  for (int n = 0; n <= m; ++n) w[static_cast<std::size_t>(n)] = std::sqrt(binom(m, n));
  return w;
}

cplx upsilon(TwiceSpin two_s, int n, cplx z) {
  require_spin_index(two_s, n);
  require_finite(z, "z");
  return std::sqrt(binom(two_s.twice(), n)) * ipow(std::conj(z), n);
}

MajoranaEvaluator::MajoranaEvaluator(TwiceSpin two_s) : two_s_(two_s), weights_(sqrt_binomial_row(two_s)) {}

cplx MajoranaEvaluator::operator()(std::span<const cplx> coeffs, cplx z) const {
  require_finite(z, "z");
  if (coeffs.size() != weights_.size()) throw ShapeError("Majorana evaluation: coefficient count mismatch");
  const int m = two_s_.twice();
  const double s = two_s_.spin();
  const double r2 = std::norm(z);
  if (r2 <= 1.0) {
    const cplx zb = std::conj(z);
    cplx acc = 0.0;
    for (int n = m; n >= 0; --n) acc = acc * zb + coeffs[static_cast<std::size_t>(n)] * weights_[static_cast<std::size_t>(n)];
    return acc * std::exp(-s * std::log1p(r2));
  }
  // factor out conj(z)^{2s} and run Horner in 1/conj(z)
  const cplx u = 1.0 / std::conj(z);
  cplx acc = 0.0;
  for (int n = 0; n <= m; ++n) acc = acc * u + coeffs[static_cast<std::size_t>(n)] * weights_[static_cast<std::size_t>(n)];
  const cplx prefactor = std::polar(std::exp(-s * std::log1p(1.0 / r2)), -static_cast<double>(m) * std::arg(z));
  return acc * prefactor;
}

CVector MajoranaEvaluator::components(cplx z) const {
  require_finite(z, "z");
  const int m = two_s_.twice();
  CVector out(static_cast<std::size_t>(m + 1));
  const double scale = std::exp(-two_s_.spin() * std::log1p(std::norm(z)));
  cplx p = scale;
  for (int n = 0; n <= m; ++n) {
    out[static_cast<std::size_t>(n)] = p * weights_[static_cast<std::size_t>(n)];
    p *= std::conj(z);
  }
  return out;
}

cplx majorana_eval(const SpinState& state, cplx z) { return MajoranaEvaluator(state.two_s)(state.coeffs, z); }

cplx cs_overlap(TwiceSpin two_s, cplx z, cplx w) {
  require_finite(z, "z");
  require_finite(w, "w");
  // |ratio| <= 1 by Cauchy-Schwarz, so the power never overflows
  const cplx ratio = (1.0 + w * std::conj(z)) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
  return ipow(ratio, two_s.twice());
}

cplx bargmann_kernel(int j, double theta, double phi, cplx z) {
  if (j < 0) throw ShapeError("bargmann_kernel: spin must be non-negative");
  require_finite(z, "z");
  const double st = std::sin(theta), ct = std::cos(theta);
  const cplx e = std::polar(1.0, phi);
  const cplx base = (st * std::conj(e) + 2.0 * z * ct - z * z * st * e) / (1.0 + std::norm(z));
  const double prefactor = std::sqrt(binom(2 * j, j)) / std::pow(2.0, j);
  return prefactor * ipow(base, j);
}

cplx overlap_multiplier(cplx z, cplx w) {
  require_finite(z, "z");
  require_finite(w, "w");
  const cplx num = 1.0 + w * std::conj(z);
  return num * num / ((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

cplx geometric_mean_power(int J, cplx kappa) {
  if (J < 0) throw ShapeError("band limit J must be non-negative");
  if (std::abs(1.0 - kappa) < 1e-2) {
    cplx acc = 0.0;
    for (int s = J; s >= 0; --s) acc = acc * kappa + 1.0;
    return acc / static_cast<double>(J + 1);
  }
  return (1.0 - ipow(kappa, J + 1)) / (static_cast<double>(J + 1) * (1.0 - kappa));
}

cplx multi_overlap(int J, cplx z, cplx w) { return geometric_mean_power(J, overlap_multiplier(z, w)); }

}  // namespace holosamp
