#include "holosamp/euler.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace holosamp {

namespace {

double parity(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// d^l_{m,mp} at l = max(|m|, |mp|)
double wigner_d_seed(int m, int mp, double beta) {
  const int l = std::max(std::abs(m), std::abs(mp));
  if (std::abs(mp) > std::abs(m)) return parity(m - mp) * wigner_d_seed(mp, m, beta);
  if (m < 0) return parity(m - mp) * wigner_d_seed(-m, -mp, beta);
  const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
  return std::sqrt(binom(2 * l, l + mp)) * std::pow(c, l + mp) * std::pow(-s, l - mp);
}

void require_parallel(double theta0) {
  if (!(theta0 > 0.0 && theta0 < kPi)) throw ShapeError("theta0 must lie strictly between the poles");
}

void require_critical(int j, std::size_t n) {
  if (j < 0) throw ShapeError("spin j must be a non-negative integer");
  if (n != static_cast<std::size_t>(2 * j + 1))
    throw ShapeError("Euler-picture conversion needs critical sampling N = 2j+1 = " + std::to_string(2 * j + 1) +
                     ", got N = " + std::to_string(n));
}

}  // namespace

double wigner_d(int j, int m, int mp, double beta) {
  if (j < 0 || std::abs(m) > j || std::abs(mp) > j) throw ShapeError("wigner_d: need |m|, |m'| <= j");
  const int l0 = std::max(std::abs(m), std::abs(mp));
  double prev = 0.0;
  double cur = wigner_d_seed(m, mp, beta);
  const double cb = std::cos(beta);
  for (int l = l0; l < j; ++l) {
    double next;
    if (l == 0) {
      next = cb * cur;  // only m = mp = 0 reaches here
    } else {
      const double a = (2.0 * l + 1.0) * (l * (l + 1.0) * cb - static_cast<double>(m) * mp);
      const double b = (l + 1.0) * std::sqrt((static_cast<double>(l) * l - m * m) * (static_cast<double>(l) * l - mp * mp));
      const double d = l * std::sqrt(((l + 1.0) * (l + 1.0) - m * m) * ((l + 1.0) * (l + 1.0) - mp * mp));
      next = (a * cur - b * prev) / d;
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx sph_harm(int j, int m, double theta, double phi) {
  if (j < 0 || std::abs(m) > j) throw ShapeError("sph_harm: need |m| <= j");
  const double norm = std::sqrt((2.0 * j + 1.0) / (4.0 * kPi));
  return norm * wigner_d(j, m, 0, theta) * std::polar(1.0, m * phi);
}

EulerSamples::EulerSamples(int spin, double theta, CVector v) : j(spin), theta0(theta), values(std::move(v)) {
  if (spin < 0) throw ShapeError("spin j must be non-negative");
  require_parallel(theta);
  for (const auto& x : values) require_finite(x, "Euler sample");
}

BargmannFactors bargmann_factors(int j, double theta0, std::size_t n) {
  require_critical(j, n);
  require_parallel(theta0);
  const double amplitude = std::sqrt(binom(2 * j, j)) / std::ldexp(1.0, 2 * j) * std::pow(std::sin(theta0), j);
  const double two_cot = 2.0 * std::cos(theta0) / std::sin(theta0);
  CVector lambda(n), q(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto kk = static_cast<long long>(k);
    lambda[k] = amplitude * unit_root(static_cast<long long>(j) * kk, n);
    q[k] = ipow(1.0 + two_cot * unit_root(kk, n) - unit_root(2 * kk, n), j);
  }
  return {std::move(lambda), CirculantKernel(std::move(q))};
}

ComplexMatrix bargmann_matrix(int j, double theta0, std::size_t n) {
  const auto f = bargmann_factors(j, theta0, n);
  ComplexMatrix k = f.q.dense();
  for (Eigen::Index r = 0; r < k.rows(); ++r) k.row(r) *= f.lambda[static_cast<std::size_t>(r)];
  return k;
}

CVector omega_eigens(int j, double theta0, std::size_t n) {
  const auto f = bargmann_factors(j, theta0, n);
  const CVector& q = f.q.first_row();
  CVector omega(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) acc += q[m] * unit_root(-static_cast<long long>(k * m), n);
    omega[k] = acc;
  }
  return omega;
}

EulerSamples euler_sample_state(const SpinState& state, double theta0) {
  if (!state.two_s.is_integer()) throw ShapeError("Euler picture is defined for integer spin only");
  require_parallel(theta0);
  const int j = state.two_s.twice() / 2;
  const auto n = static_cast<std::size_t>(2 * j + 1);
  std::vector<double> d(n);
  for (int m = -j; m <= j; ++m) d[static_cast<std::size_t>(m + j)] = wigner_d(j, m, 0, theta0);
  CVector phi(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    // e^{i m phi_k} with phi_k = -2 pi k/N
    for (int m = -j; m <= j; ++m)
      acc += unit_root(-static_cast<long long>(m) * static_cast<long long>(k), n) * d[static_cast<std::size_t>(m + j)] *
             state.coeffs[static_cast<std::size_t>(m + j)];
    phi[k] = acc;
  }
  return EulerSamples(j, theta0, std::move(phi));
}

EulerSamples holo_to_euler(const SampleVector& psi_samples, double theta0) {
  const FrameSpec& spec = psi_samples.spec;
  if (!spec.two_s().is_integer()) throw ShapeError("half-integer spin has no Euler-angle picture");
  if (!spec.unit_circle()) throw ShapeError("Euler-picture conversion needs samples at the roots of unity");
  const int j = spec.two_s().twice() / 2;
  require_critical(j, spec.n());
  const CVector gamma = dual_data(psi_samples);
  const auto f = bargmann_factors(j, theta0, spec.n());
  CVector phi = circ_matvec(f.q, gamma);
  for (std::size_t k = 0; k < phi.size(); ++k) phi[k] *= f.lambda[k];
  return EulerSamples(j, theta0, std::move(phi));
}

SampleVector euler_to_holo(const EulerSamples& phi_samples, double tol) {
  const int j = phi_samples.j;
  const std::size_t n = phi_samples.n();
  require_critical(j, n);
  const auto f = bargmann_factors(j, phi_samples.theta0, n);
  const CVector omega = omega_eigens(j, phi_samples.theta0, n);
  auto dead = dead_modes(omega, tol);
  if (!dead.empty()) {
    double max_abs = 0.0;
    for (const auto& w : omega) max_abs = std::max(max_abs, std::abs(w));
    throw SingularKernelError(std::move(dead), max_abs);
  }
  const FrameSpec spec(TwiceSpin::from_integer_spin(j), n);
  const Frame frame(spec);
  // filter theta_k = lambda_hat_k / omega_k applied to the rescaled data
  CVector filter(n);
  for (std::size_t k = 0; k < n; ++k) filter[k] = frame.lambda_hat()[k] / omega[k];
  CVector rescaled(n);
  for (std::size_t k = 0; k < n; ++k) rescaled[k] = phi_samples.values[k] / f.lambda[k];
  return SampleVector(spec, apply_spectral(filter, rescaled));
}

EquatorAlias equator_alias(const EulerSamples& phi_samples) {
  const int j = phi_samples.j;
  const std::size_t n = phi_samples.n();
  require_critical(j, n);
  if (std::abs(phi_samples.theta0 - kPi / 2) > 1e-9) throw ShapeError("equator_alias needs theta0 = pi/2");
  // Columns e^{i(n-j)phi_k} d^j_{n-j,0}(pi/2) are mutually orthogonal (distinct
  // frequencies mod N), so the pseudo-inverse is a per-column projection.
  EquatorAlias out{SpinState::zero(TwiceSpin::from_integer_spin(j)), {}};
  const double nn = static_cast<double>(n);
  for (int idx = 0; idx <= 2 * j; ++idx) {
    const int m = idx - j;
    const double d = wigner_d(j, m, 0, phi_samples.theta0);
    if (std::abs(d) * std::sqrt(nn) <= 1e-12) {
      out.dropped.push_back(idx);
      continue;
    }
    cplx acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      acc += std::conj(unit_root(-static_cast<long long>(m) * static_cast<long long>(k), n)) * phi_samples.values[k];
    out.state.coeffs[static_cast<std::size_t>(idx)] = acc / (nn * d);
  }
  return out;
}

}  // namespace holosamp
