#pragma once

// Circulant matrices circ(C)_{kl} = C_{(l-k) mod N}.
//
// The eigenvalues are the representative polynomial evaluated at conjugated
// roots of unity, lambda_k = sum_l C_l z_k^{-l}, and with W = F_N^dagger (the
// inverse unitary DFT matrix) the factorization reads circ(C) = W diag(lambda) W^dagger.
// Every product below is therefore "forward DFT, scale, inverse DFT".

#include "holosamp/numerics.hpp"

namespace holosamp {

inline constexpr double kDefaultSingularTol = 1e-10;

class CirculantKernel {
 public:
  explicit CirculantKernel(CVector first_row);

  // Build from a prescribed spectrum; the first row is recovered by one DFT.
  static CirculantKernel from_spectrum(CVector eigenvalues);

  std::size_t size() const { return first_row_.size(); }
  const CVector& first_row() const { return first_row_; }
  const CVector& eigenvalues() const { return eigenvalues_; }

  // Dense matrix, for diagnostics and tests.
  ComplexMatrix dense() const;

 private:
  CirculantKernel(CVector first_row, CVector eigenvalues)
      : first_row_(std::move(first_row)), eigenvalues_(std::move(eigenvalues)) {}

  CVector first_row_;
  CVector eigenvalues_;  // computed eagerly, immutable afterwards
};

const CVector& circ_eigenvalues(const CirculantKernel& c);

CVector circ_matvec(const CirculantKernel& c, std::span<const cplx> x);

// Thrown when an eigenvalue falls below tol * max|lambda|.
class SingularKernelError : public NumericalError {
 public:
  SingularKernelError(std::vector<std::size_t> modes, double max_abs);
  const std::vector<std::size_t>& modes() const { return modes_; }
  double max_abs_eigenvalue() const { return max_abs_; }

 private:
  std::vector<std::size_t> modes_;
  double max_abs_;
};

CVector circ_solve(const CirculantKernel& c, std::span<const cplx> rhs,
                   double tol = kDefaultSingularTol);

// Moore-Penrose pseudo-inverse: modes with |lambda_k| <= tol * max|lambda| are dropped.
CVector circ_pinv_apply(const CirculantKernel& c, std::span<const cplx> rhs,
                        double tol = kDefaultSingularTol);

// Apply W diag(g) W^dagger for an arbitrary diagonal g.
CVector apply_spectral(std::span<const cplx> g, std::span<const cplx> x);

// Indices of modes below the relative tolerance.
std::vector<std::size_t> dead_modes(std::span<const cplx> eigenvalues, double tol);

}  // namespace holosamp
