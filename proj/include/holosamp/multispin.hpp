#pragma once

// Band-limited signals in H^(J) = sum_{s=0}^{J} H_s (integer spins), sampled on
// J+1 parallels: 2s+1 equally spaced points on the circle of radius r_s.
//
// The overlap kernel is not circulant, so it is assembled densely, factored
// once (Cholesky, pivoted LDL^T fallback) and its conditioning is reported.

#include <limits>

#include "holosamp/coherent.hpp"

namespace holosamp {

struct BandLimitedState {
  int J = 0;
  CVector coeffs;  // index (s, n) -> s*s + n

  BandLimitedState() : coeffs(1, cplx{}) {}
  BandLimitedState(int band_limit, CVector c);

  static std::size_t dimension(int J) { return static_cast<std::size_t>((J + 1) * (J + 1)); }
  static std::size_t index(int s, int n) { return static_cast<std::size_t>(s * s + n); }
  std::span<const cplx> spin_block(int s) const {
    return std::span<const cplx>(coeffs).subspan(index(s, 0), static_cast<std::size_t>(2 * s + 1));
  }
};

// r_s = tan(pi (s+1) / (2 (J+2))): equiangular parallels theta_s = pi (s+1)/(J+2).
std::vector<double> default_radii(int J);

class ParallelsGrid {
 public:
  ParallelsGrid(int J, std::vector<double> radii);
  static ParallelsGrid with_default_radii(int J) { return ParallelsGrid(J, default_radii(J)); }

  int J() const { return J_; }
  const std::vector<double>& radii() const { return radii_; }
  const CVector& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  int J_;
  std::vector<double> radii_;
  CVector points_;  // z_m^(s) = r_s e^{2 pi i m/(2s+1)}, ordered by (s, m)
};

// <z|psi>^J = (J+1)^{-1/2} sum_s <z|psi_s>
cplx multi_majorana_eval(const BandLimitedState& state, cplx z);

CVector multi_sample_state(const BandLimitedState& state, const ParallelsGrid& grid);

// Row for point z, column (s,n): (J+1)^{-1/2} (1+|z|^2)^{-s} binom(2s,n)^{1/2} conj(z)^n
ComplexMatrix multi_frame_matrix(const ParallelsGrid& grid);

// B_{kl} = <z_k|z_l>^J from the kappa closed form.
ComplexMatrix multi_overlap_kernel(const ParallelsGrid& grid);

struct KernelSpectrum {
  double smallest = 0.0;
  double largest = 0.0;
  double condition() const { return smallest > 0.0 ? largest / smallest : std::numeric_limits<double>::infinity(); }
};

KernelSpectrum hermitian_spectrum(const ComplexMatrix& kernel);

class IllConditionedKernelError : public NumericalError {
 public:
  IllConditionedKernelError(double smallest, double largest);
  double smallest() const { return smallest_; }
  double largest() const { return largest_; }

 private:
  double smallest_, largest_;
};

inline constexpr double kMultiSingularTol = 1e-12;

// Factored multi-spin kernel bound to one set of samples.
class MultiReconstructor {
 public:
  MultiReconstructor(const ParallelsGrid& grid, std::span<const cplx> samples, double tol = kMultiSingularTol);

  const ParallelsGrid& grid() const { return grid_; }
  const KernelSpectrum& spectrum() const { return spectrum_; }
  double condition() const { return spectrum_.condition(); }
  // B^{-1} Psi
  const CVector& dual_data() const { return dual_; }

  cplx operator()(cplx z) const;
  CVector evaluate(std::span<const cplx> points) const;
  CVector evaluate_serial(std::span<const cplx> points) const;

  // T^dagger B^{-1} Psi
  BandLimitedState coefficients() const;

 private:
  ParallelsGrid grid_;
  KernelSpectrum spectrum_;
  CVector dual_;
};

struct MultiReconstruction {
  cplx value;
  double condition;
};

MultiReconstruction multi_reconstruct(std::span<const cplx> samples, const ParallelsGrid& grid, cplx z);

// Spectrum of the multi-spin kernel on N roots of unity (N >= 2J+1):
// lambda~_n = (J+1)^{-1} sum_{s >= n/2} (N / 2^{2s}) binom(2s, n) for n <= 2J, zero beyond.
std::vector<double> roots_rank_eigens(int J, std::size_t n);

// The equatorial multi-spin kernel itself, assembled densely.
ComplexMatrix equatorial_multi_kernel(int J, std::size_t n);

}  // namespace holosamp
