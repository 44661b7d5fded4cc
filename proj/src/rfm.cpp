#include "holosamp/rfm.hpp"

#include <string>

namespace holosamp {

CVector pad(std::span<const cplx> v, std::size_t n) {
  if (n < v.size())
    throw ShapeError("pad: target length " + std::to_string(n) + " shorter than input " +
                     std::to_string(v.size()));
  CVector out(n, cplx{});
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

CVector truncate(std::span<const cplx> v, std::size_t m) {
  if (m > v.size())
    throw ShapeError("truncate: target length " + std::to_string(m) + " longer than input " +
                     std::to_string(v.size()));
  return CVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
}

CVector fold(std::span<const cplx> v, std::size_t n) {
  if (n == 0) throw ShapeError("fold: length must be positive");
  CVector out(n, cplx{});
  for (std::size_t i = 0; i < v.size(); ++i) out[i % n] += v[i];
  return out;
}

CVector tile(std::span<const cplx> w, std::size_t m) {
  if (w.empty()) throw ShapeError("tile: empty input");
  CVector out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = w[i % w.size()];
  return out;
}

CVector rfm_apply(const RfmShape& shape, std::span<const cplx> v, bool conjugate) {
  if (v.size() != shape.n_cols) throw ShapeError("rfm_apply: input length must equal M");
  // For N < M the block form (F_N | F_N | ... | F_Np) acts on the folded vector.
  const CVector folded = fold(v, shape.n_rows);
  return unitary_dft(folded, conjugate);
}

CVector rfm_apply_adjoint(const RfmShape& shape, std::span<const cplx> w, bool conjugate) {
  if (w.size() != shape.n_rows) throw ShapeError("rfm_apply_adjoint: input length must equal N");
  const CVector u = unitary_dft(w, !conjugate);
  if (shape.n_cols <= shape.n_rows) return truncate(u, shape.n_cols);
  return tile(u, shape.n_cols);
}

}  // namespace holosamp
