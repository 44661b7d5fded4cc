#include <doctest.h>

#include "holosamp/rfm.hpp"
#include "oracles.hpp"

using namespace holosamp;
using oracle::Mat;

namespace {

Mat columns_of(std::size_t rows, std::size_t cols, auto&& apply) {
  Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    CVector e(cols, 0.0);
    e[j] = 1.0;
    m.col(static_cast<Eigen::Index>(j)) = oracle::to_eigen(apply(e));
  }
  return m;
}

Mat projector(int n, int p) {
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < p; ++i) m(i, i) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("pad and truncate") {
  CHECK(pad(CVector{1, 2}, 4) == CVector{1, 2, 0, 0});
  CHECK(truncate(CVector{1, 2, 3, 4}, 2) == CVector{1, 2});
  CHECK(truncate(CVector{5}, 1) == CVector{5});
  CHECK_THROWS_AS(pad(CVector{1, 2, 3}, 2), ShapeError);
  CHECK_THROWS_AS(truncate(CVector{1}, 2), ShapeError);

  oracle::Rng rng(3);
  const CVector v = rng.cvector(5);
  CHECK(truncate(pad(v, 9), 5) == v);
  const CVector w = rng.cvector(9);
  const CVector p1 = pad(truncate(w, 5), 9);
  CHECK(pad(truncate(p1, 5), 9) == p1);
}

TEST_CASE("rfm_apply small cases") {
  oracle::Rng rng(4);
  const CVector v = rng.cvector(6);
  CHECK(max_abs_diff(rfm_apply(RfmShape(6, 6), v), unitary_dft(v)) <= 1e-15);
  CHECK(max_abs_diff(rfm_apply(RfmShape(4, 2), CVector{1, 0}), unitary_dft(CVector{1, 0, 0, 0})) <= 1e-15);

  const cplx a{1, 2}, b{-0.5, 3}, c{0.25, -1};
  const CVector got = rfm_apply(RfmShape(2, 3), CVector{a, b, c});
  // explicit 2x3 block product (F_2 | F_2 first column)
  const double r = 1.0 / std::sqrt(2.0);
  const CVector want{r * (a + b + c), r * (a - b + c)};
  CHECK(max_abs_diff(got, want) <= 1e-15);
  CHECK_THROWS_AS(RfmShape(0, 3), ShapeError);
}

TEST_CASE("rfm_apply and its adjoint match the entry formula") {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 24; ++m) {
      const RfmShape shape(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      const Mat dense = oracle::rfm_matrix(n, m);
      const Mat f = columns_of(shape.n_rows, shape.n_cols, [&](const CVector& e) { return rfm_apply(shape, e); });
      const Mat fa = columns_of(shape.n_cols, shape.n_rows, [&](const CVector& e) { return rfm_apply_adjoint(shape, e); });
      const Mat fc = columns_of(shape.n_rows, shape.n_cols, [&](const CVector& e) { return rfm_apply(shape, e, true); });
      CHECK(oracle::max_abs(f - dense) <= 1e-12);
      CHECK(oracle::max_abs(fa - dense.adjoint()) <= 1e-12);
      CHECK(oracle::max_abs(fc - dense.conjugate()) <= 1e-12);
    }
  }
}

TEST_CASE("rectangular Fourier identities") {
  for (int n = 1; n <= 8; ++n) {
    const Mat fn = oracle::dft_matrix(n);
    for (int m = 1; m <= 24; ++m) {
      const RfmShape shape(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      const Mat f = columns_of(shape.n_rows, shape.n_cols, [&](const CVector& e) { return rfm_apply(shape, e); });
      const Mat ff = f * f.adjoint();
      if (n >= m) {
        CHECK(oracle::max_abs(f.adjoint() * f - Mat::Identity(m, m)) <= 1e-12);
        CHECK(oracle::max_abs(ff - fn * projector(n, m) * fn.adjoint()) <= 1e-12);
      } else {
        const int q = m / n, p = m % n;
        CHECK(oracle::max_abs(ff - (double(q) * Mat::Identity(n, n) + fn * projector(n, p) * fn.adjoint())) <= 1e-12);
      }
    }
  }
}

TEST_CASE("fold and tile are adjoint") {
  oracle::Rng rng(9);
  const CVector v = rng.cvector(11), w = rng.cvector(4);
  cplx lhs = 0.0, rhs = 0.0;
  const CVector fv = fold(v, 4), tw = tile(w, 11);
  for (std::size_t i = 0; i < 4; ++i) lhs += std::conj(w[i]) * fv[i];
  for (std::size_t i = 0; i < 11; ++i) rhs += std::conj(tw[i]) * v[i];
  CHECK(std::abs(lhs - rhs) <= 1e-13);
}
