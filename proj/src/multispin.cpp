#include "holosamp/multispin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace holosamp {

namespace {

void require_band_limit(int J) {
  if (J < 0) throw ShapeError("band limit J must be non-negative, got " + std::to_string(J));
}

}  // namespace

BandLimitedState::BandLimitedState(int band_limit, CVector c) : J(band_limit), coeffs(std::move(c)) {
  require_band_limit(J);
  if (coeffs.size() != dimension(J))
    throw ShapeError("BandLimitedState: expected " + std::to_string(dimension(J)) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  for (const auto& a : coeffs) require_finite(a, "BandLimitedState coefficient");
}

std::vector<double> default_radii(int J) {
  require_band_limit(J);
  std::vector<double> r(static_cast<std::size_t>(J + 1));
  for (int s = 0; s <= J; ++s) r[static_cast<std::size_t>(s)] = std::tan(kPi * (s + 1) / (2.0 * (J + 2)));
  return r;
}

ParallelsGrid::ParallelsGrid(int J, std::vector<double> radii) : J_(J), radii_(std::move(radii)) {
  require_band_limit(J);
  if (radii_.size() != static_cast<std::size_t>(J + 1))
    throw ShapeError("grid needs J+1 = " + std::to_string(J + 1) + " radii, got " + std::to_string(radii_.size()));
  for (double r : radii_)
    if (!(r > 0.0) || !std::isfinite(r)) throw ShapeError("grid radii must be finite and positive");
  for (std::size_t a = 0; a < radii_.size(); ++a)
    for (std::size_t b = a + 1; b < radii_.size(); ++b)
      if (std::abs(radii_[a] - radii_[b]) <= 1e-9)
        throw ShapeError("grid radii r_" + std::to_string(a) + " and r_" + std::to_string(b) + " coincide");
  points_.reserve(BandLimitedState::dimension(J));
  for (int s = 0; s <= J; ++s) {
    const auto count = static_cast<std::size_t>(2 * s + 1);
    for (std::size_t m = 0; m < count; ++m)
      points_.push_back(radii_[static_cast<std::size_t>(s)] * unit_root(static_cast<long long>(m), count));
  }
}

cplx multi_majorana_eval(const BandLimitedState& state, cplx z) {
  require_finite(z, "z");
  cplx acc = 0.0;
  for (int s = 0; s <= state.J; ++s) acc += MajoranaEvaluator(TwiceSpin::from_integer_spin(s))(state.spin_block(s), z);
  return acc / std::sqrt(static_cast<double>(state.J + 1));
}

CVector multi_sample_state(const BandLimitedState& state, const ParallelsGrid& grid) {
  if (state.J != grid.J()) throw ShapeError("state band limit and grid band limit differ");
  std::vector<MajoranaEvaluator> evaluators;
  for (int s = 0; s <= state.J; ++s) evaluators.emplace_back(TwiceSpin::from_integer_spin(s));
  const double norm = 1.0 / std::sqrt(static_cast<double>(state.J + 1));
  CVector out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    cplx acc = 0.0;
    for (int s = 0; s <= state.J; ++s) acc += evaluators[static_cast<std::size_t>(s)](state.spin_block(s), grid.points()[k]);
    out[k] = acc * norm;
  }
  return out;
}

ComplexMatrix multi_frame_matrix(const ParallelsGrid& grid) {
  const int J = grid.J();
  const auto dim = static_cast<Eigen::Index>(BandLimitedState::dimension(J));
  const double norm = 1.0 / std::sqrt(static_cast<double>(J + 1));
  ComplexMatrix t(static_cast<Eigen::Index>(grid.size()), dim);
  for (int s = 0; s <= J; ++s) {
    const MajoranaEvaluator ev(TwiceSpin::from_integer_spin(s));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const CVector c = ev.components(grid.points()[k]);
      for (int n = 0; n <= 2 * s; ++n)
        t(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(BandLimitedState::index(s, n))) =
            norm * c[static_cast<std::size_t>(n)];
    }
  }
  return t;
}

ComplexMatrix multi_overlap_kernel(const ParallelsGrid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  const auto& z = grid.points();
  ComplexMatrix b(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    b(k, k) = 1.0;
    for (Eigen::Index l = k + 1; l < n; ++l) {
      b(k, l) = multi_overlap(grid.J(), z[static_cast<std::size_t>(k)], z[static_cast<std::size_t>(l)]);
      b(l, k) = std::conj(b(k, l));
    }
  }
  return b;
}

KernelSpectrum hermitian_spectrum(const ComplexMatrix& kernel) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(kernel, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigen-decomposition of the kernel failed");
  const auto& ev = solver.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

namespace {

std::string describe_conditioning(double smallest, double largest) {
  std::ostringstream os;
  os << "multi-spin overlap kernel is singular or ill-conditioned: smallest eigenvalue " << smallest
     << ", largest " << largest;
  return os.str();
}

}  // namespace

IllConditionedKernelError::IllConditionedKernelError(double smallest, double largest)
    : NumericalError(describe_conditioning(smallest, largest)), smallest_(smallest), largest_(largest) {}

MultiReconstructor::MultiReconstructor(const ParallelsGrid& grid, std::span<const cplx> samples, double tol)
    : grid_(grid) {
  if (samples.size() != grid.size())
    throw ShapeError("expected " + std::to_string(grid.size()) + " samples, got " + std::to_string(samples.size()));
  for (const auto& x : samples) require_finite(x, "sample value");
  const ComplexMatrix kernel = multi_overlap_kernel(grid_);
  spectrum_ = hermitian_spectrum(kernel);
  if (!(spectrum_.smallest > tol * spectrum_.largest))
    throw IllConditionedKernelError(spectrum_.smallest, spectrum_.largest);

  const Eigen::Map<const Eigen::VectorXcd> rhs(samples.data(), static_cast<Eigen::Index>(samples.size()));
  Eigen::VectorXcd x;
  Eigen::LLT<ComplexMatrix> llt(kernel);
  if (llt.info() == Eigen::Success) {
    x = llt.solve(rhs);
  } else {
    Eigen::LDLT<ComplexMatrix> ldlt(kernel);
    if (ldlt.info() != Eigen::Success) throw IllConditionedKernelError(spectrum_.smallest, spectrum_.largest);
    x = ldlt.solve(rhs);
  }
  dual_.assign(x.data(), x.data() + x.size());
}

cplx MultiReconstructor::operator()(cplx z) const {
  require_finite(z, "z");
  cplx acc = 0.0;
  for (std::size_t l = 0; l < grid_.size(); ++l) acc += dual_[l] * multi_overlap(grid_.J(), z, grid_.points()[l]);
  return acc;
}

CVector MultiReconstructor::evaluate(std::span<const cplx> points) const {
  for (const auto& z : points) require_finite(z, "evaluation point");
  CVector out(points.size());
  const auto count = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = (*this)(points[k]);
  }
  return out;
}

CVector MultiReconstructor::evaluate_serial(std::span<const cplx> points) const {
  CVector out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back((*this)(z));
  return out;
}

BandLimitedState MultiReconstructor::coefficients() const {
  const ComplexMatrix t = multi_frame_matrix(grid_);
  const Eigen::Map<const Eigen::VectorXcd> g(dual_.data(), static_cast<Eigen::Index>(dual_.size()));
  const Eigen::VectorXcd a = t.adjoint() * g;
  return BandLimitedState(grid_.J(), CVector(a.data(), a.data() + a.size()));
}

MultiReconstruction multi_reconstruct(std::span<const cplx> samples, const ParallelsGrid& grid, cplx z) {
  const MultiReconstructor rec(grid, samples);
  return {rec(z), rec.condition()};
}

std::vector<double> roots_rank_eigens(int J, std::size_t n) {
  require_band_limit(J);
  if (n < static_cast<std::size_t>(2 * J + 1))
    throw ShapeError("roots_rank_eigens requires N >= 2J+1");
  std::vector<double> out(n, 0.0);
  const double nn = static_cast<double>(n);
  for (int k = 0; k <= 2 * J; ++k) {
    double acc = 0.0;
    for (int s = (k + 1) / 2; s <= J; ++s) acc += nn * binom(2 * s, k) / std::ldexp(1.0, 2 * s);
    out[static_cast<std::size_t>(k)] = acc / (J + 1);
  }
  return out;
}

ComplexMatrix equatorial_multi_kernel(int J, std::size_t n) {
  require_band_limit(J);
  const CVector z = roots_of_unity(n);
  const auto nn = static_cast<Eigen::Index>(n);
  ComplexMatrix b(nn, nn);
  for (Eigen::Index k = 0; k < nn; ++k)
    for (Eigen::Index l = 0; l < nn; ++l)
      b(k, l) = multi_overlap(J, z[static_cast<std::size_t>(k)], z[static_cast<std::size_t>(l)]);
  return b;
}

}  // namespace holosamp
