#include "holosamp/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace holosamp {

namespace {

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string describe_modes(const std::vector<std::size_t>& modes, double max_abs) {
  std::ostringstream os;
  os << "singular circulant kernel: " << modes.size() << " eigenvalue(s) below tolerance (max |lambda| = "
     << max_abs << "), modes";
  for (auto k : modes) os << ' ' << k;
  return os.str();
}

}  // namespace

CirculantKernel::CirculantKernel(CVector first_row) : first_row_(std::move(first_row)) {
  if (first_row_.empty()) throw ShapeError("circulant kernel must have at least one entry");
  // lambda_k = sum_l C_l e^{-2 pi i k l / N} = sqrt(N) [F^dagger C]_k
  eigenvalues_ = unitary_dft(first_row_, /*inverse=*/true);
  const double root_n = std::sqrt(static_cast<double>(first_row_.size()));
  for (auto& x : eigenvalues_) x *= root_n;
}

CirculantKernel CirculantKernel::from_spectrum(CVector eigenvalues) {
  if (eigenvalues.empty()) throw ShapeError("circulant kernel must have at least one entry");
  CVector row = unitary_dft(eigenvalues, /*inverse=*/false);
  const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(eigenvalues.size()));
  for (auto& x : row) x *= inv_root_n;
  return CirculantKernel(std::move(row), std::move(eigenvalues));
}

ComplexMatrix CirculantKernel::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  ComplexMatrix m(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l) m(k, l) = first_row_[static_cast<std::size_t>(((l - k) % n + n) % n)];
  return m;
}

const CVector& circ_eigenvalues(const CirculantKernel& c) { return c.eigenvalues(); }

CVector apply_spectral(std::span<const cplx> g, std::span<const cplx> x) {
  if (g.size() != x.size()) throw ShapeError("spectral multiplier and vector lengths differ");
  CVector y = unitary_dft(x, /*inverse=*/false);
  for (std::size_t k = 0; k < y.size(); ++k) y[k] *= g[k];
  return unitary_dft(y, /*inverse=*/true);
}

CVector circ_matvec(const CirculantKernel& c, std::span<const cplx> x) {
  if (x.size() != c.size()) throw ShapeError("circ_matvec: length mismatch");
  return apply_spectral(c.eigenvalues(), x);
}

std::vector<std::size_t> dead_modes(std::span<const cplx> eigenvalues, double tol) {
  const double cutoff = tol * max_abs(eigenvalues);
  std::vector<std::size_t> dead;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k)
    if (std::abs(eigenvalues[k]) <= cutoff) dead.push_back(k);
  return dead;
}

SingularKernelError::SingularKernelError(std::vector<std::size_t> modes, double max_abs)
    : NumericalError(describe_modes(modes, max_abs)), modes_(std::move(modes)), max_abs_(max_abs) {}

CVector circ_solve(const CirculantKernel& c, std::span<const cplx> rhs, double tol) {
  if (rhs.size() != c.size()) throw ShapeError("circ_solve: length mismatch");
  const auto& lam = c.eigenvalues();
  auto dead = dead_modes(lam, tol);
  if (!dead.empty()) throw SingularKernelError(std::move(dead), max_abs(lam));
  CVector g(lam.size());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = 1.0 / lam[k];
  return apply_spectral(g, rhs);
}

CVector circ_pinv_apply(const CirculantKernel& c, std::span<const cplx> rhs, double tol) {
  if (rhs.size() != c.size()) throw ShapeError("circ_pinv_apply: length mismatch");
  const auto& lam = c.eigenvalues();
  const double cutoff = tol * max_abs(lam);
  CVector g(lam.size(), cplx{});
  for (std::size_t k = 0; k < g.size(); ++k)
    if (std::abs(lam[k]) > cutoff) g[k] = 1.0 / lam[k];
  return apply_spectral(g, rhs);
}

}  // namespace holosamp
