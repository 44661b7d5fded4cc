#pragma once

// The Euler-angle picture for integer spin j: spherical harmonics from SU(2)
// matrix coefficients, and conversion of samples on one parallel theta_0 at
// phi_k = -2 pi k / N (N = 2j+1) to and from samples at the roots of unity.
//
// The discrete Bargmann matrix K_{kl} = <theta_0, phi_k | z_l> factors as
// K = Lambda Q with Lambda diagonal and Q circulant (first row q), so both
// directions of the conversion are diagonal scalings between DFTs.

#include "holosamp/circulant.hpp"
#include "holosamp/singlespin.hpp"

namespace holosamp {

// Wigner d^j_{m m'}(beta) for integer j, three-term recurrence in j.
double wigner_d(int j, int m, int mp, double beta);

// Y^m_j(theta, phi) normalized so that sqrt(4 pi/(2j+1)) Y^m_j = <theta, phi; 0 | j, m>
// = e^{i m phi} d^j_{m0}(theta).
cplx sph_harm(int j, int m, double theta, double phi);

struct EulerSamples {
  int j = 0;
  double theta0 = kPi / 4;
  CVector values;  // Phi_k at phi_k = -2 pi k / N

  EulerSamples(int spin, double theta, CVector v);
  std::size_t n() const { return values.size(); }
};

struct BargmannFactors {
  CVector lambda;     // diagonal of Lambda
  CirculantKernel q;  // circulant Q, q_m = (1 + 2 cot(theta_0) e^{2 pi i m/N} - e^{4 pi i m/N})^j
};

BargmannFactors bargmann_factors(int j, double theta0, std::size_t n);

ComplexMatrix bargmann_matrix(int j, double theta0, std::size_t n);

// Eigenvalues omega_k = sum_n q_n e^{-2 pi i k n / N} of Q.
CVector omega_eigens(int j, double theta0, std::size_t n);

// Phi_k = <theta_0, phi_k | psi> sampled directly from a state.
EulerSamples euler_sample_state(const SpinState& state, double theta0);

// Phi = K B^{-1} Psi
EulerSamples holo_to_euler(const SampleVector& psi_samples, double theta0);

// Psi = B Q^{-1} Lambda^{-1} Phi; throws SingularKernelError listing dead omega modes.
SampleVector euler_to_holo(const EulerSamples& phi_samples, double tol = kDefaultSingularTol);

struct EquatorAlias {
  SpinState state;
  std::vector<int> dropped;  // coefficient indices n whose columns vanish (odd n)
  bool odd_dropped() const { return !dropped.empty(); }
};

// Recover the even coefficients from samples on the equator theta_0 = pi/2.
EquatorAlias equator_alias(const EulerSamples& phi_samples);

}  // namespace holosamp
