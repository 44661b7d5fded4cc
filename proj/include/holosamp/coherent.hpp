#pragma once

// Spin coherent states |z> = (1 + |z|^2)^{-s} e^{z J_-} |s,s> and the functions
// built from them.  Coefficient index n = 0..2s labels the basis vector |s, n-s>.

#include "holosamp/numerics.hpp"

namespace holosamp {

struct SpinState {
  TwiceSpin two_s;
  CVector coeffs;  // a_{n-s}, n = 0..2s

  SpinState() : coeffs(1, cplx{}) {}
  SpinState(TwiceSpin ts, CVector c);

  static SpinState zero(TwiceSpin ts) { return SpinState(ts, CVector(static_cast<std::size_t>(ts.dim()))); }
  static SpinState basis(TwiceSpin ts, int n);
};

// sqrt(binom(2s, n)), n = 0..2s.
std::vector<double> sqrt_binomial_row(TwiceSpin two_s);

// binom(2s, n)^{1/2} conj(z)^n
cplx upsilon(TwiceSpin two_s, int n, cplx z);

// Evaluates (1+|z|^2)^{-s} sum_n c_n binom(2s,n)^{1/2} conj(z)^n for a fixed
// spin, caching the binomial weights.  Stable for large |z|.
class MajoranaEvaluator {
 public:
  explicit MajoranaEvaluator(TwiceSpin two_s);
  TwiceSpin two_s() const { return two_s_; }
  cplx operator()(std::span<const cplx> coeffs, cplx z) const;

  // <z|s, n-s> for every n.
  CVector components(cplx z) const;

 private:
  TwiceSpin two_s_;
  std::vector<double> weights_;
};

// Psi(z) = <z|psi>
cplx majorana_eval(const SpinState& state, cplx z);

// <z|w> = (1 + w conj(z))^{2s} / ((1+|z|^2)^s (1+|w|^2)^s)
cplx cs_overlap(TwiceSpin two_s, cplx z, cplx w);

// <theta, phi | z> for integer spin j, closed form.
cplx bargmann_kernel(int j, double theta, double phi, cplx z);

// Multi-spin multiplier kappa(z, w) = (1 + w conj(z))^2 / ((1+|z|^2)(1+|w|^2)).
cplx overlap_multiplier(cplx z, cplx w);

// <z|w>^J = (1/(J+1)) sum_{s=0}^{J} kappa^s
cplx multi_overlap(int J, cplx z, cplx w);

// Geometric mean (1/(J+1)) sum_{s=0}^{J} kappa^s, closed form away from kappa = 1.
cplx geometric_mean_power(int J, cplx kappa);

cplx ipow(cplx base, int exponent);

}  // namespace holosamp
