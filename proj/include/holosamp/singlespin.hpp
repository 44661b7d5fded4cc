#pragma once

// Sampling a single spin-s Majorana function at the N-th roots of a point c
// (c = 1 by default: the N-th roots of unity on the equator) and reconstructing
// it from the samples.
//
// With w_n = <c|s,n-s> and omega = e^{2 pi i / N}, the frame operator is
//   T_{kn} = <z_k|s,n-s> = w_n omega^{-kn},   z_k = c omega^k,
// so T = sqrt(N) W fold(diag(w)) where W = F_N^dagger.  Its Gram operators are
//   A = T^dagger T = diag(lambda_n),            lambda_n = N |w_n|^2   (N >= 2s+1)
//   B = T T^dagger = W diag(lambda_hat) W^dagger, lambda_hat_p = sum_{n = p mod N} lambda_n
// and every inversion reduces to a diagonal scaling between two DFTs.

#include <optional>

#include "holosamp/circulant.hpp"
#include "holosamp/coherent.hpp"

namespace holosamp {

enum class Regime { oversampled, critical, undersampled };

const char* regime_name(Regime r);

// Sampling points are the N-th roots of c^N, i.e. c omega^k.
struct SamplingCircle {
  double radius = 1.0;
  double phase = 0.0;

  cplx point() const { return std::polar(radius, phase); }
};

class FrameSpec {
 public:
  FrameSpec(TwiceSpin two_s, std::size_t n_samples, SamplingCircle circle = {});

  TwiceSpin two_s() const { return two_s_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(two_s_.dim()); }
  const SamplingCircle& circle() const { return circle_; }
  Regime regime() const;
  // ceil((2s+1)/N)
  std::size_t fold_count() const { return (dim() + n_ - 1) / n_; }
  bool unit_circle() const { return circle_.radius == 1.0 && circle_.phase == 0.0; }

  CVector sample_points() const;

 private:
  TwiceSpin two_s_;
  std::size_t n_ = 1;
  SamplingCircle circle_;
};

struct SampleVector {
  FrameSpec spec;
  CVector values;

  SampleVector(FrameSpec s, CVector v);
};

// Precomputed, immutable tables for one FrameSpec.  Safe to share across threads.
class Frame {
 public:
  explicit Frame(FrameSpec spec);

  const FrameSpec& spec() const { return spec_; }
  const CVector& weights() const { return weights_; }             // w_n
  const std::vector<double>& lambda() const { return lambda_; }   // lambda_n, n = 0..2s
  const std::vector<double>& lambda_hat() const { return lambda_hat_; }  // p = 0..N-1
  // Coefficients of the dual vector |z~_0>; its Majorana function is the
  // reconstruction kernel (Xi or Xi-hat).
  const CVector& dual_coeffs() const { return dual_coeffs_; }
  const MajoranaEvaluator& evaluator() const { return evaluator_; }

  // T a
  CVector apply(std::span<const cplx> coeffs) const;
  // T^dagger data
  CVector apply_adjoint(std::span<const cplx> data) const;
  // Minimum-norm least-squares solution of T a = data.
  CVector pseudo_inverse(std::span<const cplx> data) const;
  // Spectral multiplier of B^+ (zero on the null modes).
  CVector pinv_spectrum() const;
  // Dual reconstruction kernel at w.
  cplx kernel(cplx w) const;

 private:
  FrameSpec spec_;
  MajoranaEvaluator evaluator_;
  CVector weights_;
  std::vector<double> lambda_;
  std::vector<double> lambda_hat_;
  CVector dual_coeffs_;
};

ComplexMatrix frame_matrix(const FrameSpec& spec);

std::vector<double> resolution_eigenvalues(const FrameSpec& spec);

CirculantKernel overlap_kernel(const FrameSpec& spec);

std::vector<double> overlap_eigenvalues(const FrameSpec& spec);

SampleVector sample_state(const SpinState& state, std::size_t n);
SampleVector sample_state(const SpinState& state, const FrameSpec& spec);

// Xi(w) = (2^s/N)(1+|w|^2)^{-s}(1 - conj(w)^{2s+1})/(1 - conj(w)) on the unit circle.
cplx xi_kernel(const FrameSpec& spec, cplx w);

// Xi-hat(w) = (2^s/N)(1+|w|^2)^{-s} sum_p lambda_hat_p^{-1} sum_l lambda_{p+lN} conj(w)^{p+lN}.
cplx xi_hat_kernel(const FrameSpec& spec, cplx w);

// Psi(z) = sum_k Psi(z_k) Xi(z z_k^{-1} c): exact for N >= 2s+1, the alias otherwise.
cplx reconstruct(const SampleVector& samples, cplx z);

SpinState coefficients_from_samples(const SampleVector& samples);

// Delta (oversampled) or Delta-hat (undersampled); both are W applied to the
// reciprocal spectrum of B with its null modes zeroed.
CVector dual_filter(const FrameSpec& spec);

// Gamma = B^+ Psi, equivalently Gamma(k) = N^{-1/2} sum_l Delta(k - l) Psi(l).
CVector dual_data(const SampleVector& samples);

// P = T A^{-1} T^dagger, projector onto the range of T.
CVector range_projector_apply(const FrameSpec& spec, std::span<const cplx> data);

// || (I - P) data ||; zero when the data are consistent with some state.
double projection_residual(const FrameSpec& spec, std::span<const cplx> data);

// Minimal-norm interpolant Phi with Phi(z_k) = zeta_k, evaluated at z.
cplx covariant_interpolate(const FrameSpec& spec, std::span<const cplx> zeta, cplx z,
                           double tol = kDefaultSingularTol);

// The interpolant above as a state: phi = T^dagger B^{-1} zeta.
SpinState covariant_interpolant_state(const FrameSpec& spec, std::span<const cplx> zeta,
                                      double tol = kDefaultSingularTol);

// sum_n binom(2s, n)^{-1}
double reciprocal_binomial_sum(TwiceSpin two_s);

// Batch evaluation of the reconstruction at many points.  The samples are
// converted to coefficients once; each point then costs O(s).
class Reconstructor {
 public:
  explicit Reconstructor(const SampleVector& samples);

  Regime regime() const { return regime_; }
  const SpinState& coefficients() const { return coeffs_; }
  cplx operator()(cplx z) const { return evaluator_(coeffs_.coeffs, z); }

  // OpenMP over points; output order matches input order.
  CVector evaluate(std::span<const cplx> points) const;
  // Serial reference for the parallel kernel.
  CVector evaluate_serial(std::span<const cplx> points) const;

 private:
  Regime regime_;
  SpinState coeffs_;
  MajoranaEvaluator evaluator_;
};

}  // namespace holosamp
