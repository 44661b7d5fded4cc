#pragma once

// Rectangular Fourier matrices F_{NM} = (e^{2 pi i n m / N} / sqrt(N)), n < N, m < M,
// applied as pad/fold followed by the unitary DFT.  Never materialized.

#include "holosamp/numerics.hpp"

namespace holosamp {

struct RfmShape {
  std::size_t n_rows = 1;  // N
  std::size_t n_cols = 1;  // M

  RfmShape(std::size_t n, std::size_t m) : n_rows(n), n_cols(m) {
    if (n == 0 || m == 0) throw ShapeError("RFM dimensions must be positive");
  }
};

// Zero-extend a length-M vector to length N >= M.
CVector pad(std::span<const cplx> v, std::size_t n);

// Keep the first M entries of a length-N vector, M <= N.
CVector truncate(std::span<const cplx> v, std::size_t m);

// Wrap-around sum w_k = sum_j v_{k + jN}; equals padding when N >= len(v).
CVector fold(std::span<const cplx> v, std::size_t n);

// Periodic extension u_m = w_{m mod N}, m < M.
CVector tile(std::span<const cplx> w, std::size_t m);

// F_{NM} v.  `conjugate` applies conj(F_{NM}) instead (negative exponent).
CVector rfm_apply(const RfmShape& shape, std::span<const cplx> v, bool conjugate = false);

// F_{NM}^dagger w (length M from length N).
CVector rfm_apply_adjoint(const RfmShape& shape, std::span<const cplx> w, bool conjugate = false);

}  // namespace holosamp
