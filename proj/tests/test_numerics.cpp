#include <doctest.h>

#include "holosamp/numerics.hpp"
#include "oracles.hpp"

using namespace holosamp;

TEST_CASE("binom small values and range convention") {
  CHECK(binom(4, 2) == 6.0);
  CHECK(binom(2, 3) == 0.0);
  CHECK(binom(5, -1) == 0.0);
  CHECK(binom(0, 0) == 1.0);
  CHECK(binom(64, 32) == oracle::big_binom(64, 32));
}

TEST_CASE("binom agrees with exact big-integer product beyond 64") {
  for (int n : {65, 80, 120, 200, 300}) {
    for (int k : {1, n / 3, n / 2}) {
      const double exact = oracle::big_binom(n, k);
      CHECK(std::abs(binom(n, k) - exact) <= 1e-13 * exact);
    }
  }
}

TEST_CASE("binom is the correctly rounded exact integer up to 64") {
  for (int n = 1; n <= 64; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(binom(n, k) == oracle::big_binom(n, k));
      // below 2^53 every term is exact, so Pascal holds in double as well
      if (binom(n, k) < 0x1p53 && k > 0 && k < n) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
}

TEST_CASE("twice-spin bookkeeping") {
  const TwiceSpin half(3);
  CHECK(half.dim() == 4);
  CHECK(half.spin() == 1.5);
  CHECK_FALSE(half.is_integer());
  CHECK(TwiceSpin::from_integer_spin(2).twice() == 4);
  CHECK_THROWS_AS(TwiceSpin(-1), ShapeError);
}

TEST_CASE("roots of unity") {
  CHECK(roots_of_unity(1) == CVector{1.0});
  const CVector r4 = roots_of_unity(4);
  const CVector want4{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CHECK(r4 == want4);
  const CVector r3 = roots_of_unity(3);
  const double h = std::sqrt(3.0) / 2;
  CHECK(max_abs_diff(r3, CVector{{1, 0}, {-0.5, h}, {-0.5, -h}}) <= 1e-15);
  for (std::size_t n = 1; n <= 64; ++n)
    for (const auto& z : roots_of_unity(n)) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(roots_of_unity(0), ShapeError);
}

TEST_CASE("unitary DFT examples") {
  const CVector e0{1, 0, 0, 0};
  CHECK(max_abs_diff(unitary_dft(e0), CVector(4, 0.5)) <= 1e-15);
  const CVector v{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CHECK(max_abs_diff(unitary_dft(v), CVector{0, 0, 0, 2}) <= 1e-15);
}

TEST_CASE("DFT matches the dense matrix and is unitary") {
  oracle::Rng rng(11);
  for (int n = 1; n <= 40; ++n) {
    const CVector v = rng.cvector(static_cast<std::size_t>(n));
    const auto f = oracle::dft_matrix(n);
    const auto fv = oracle::from_eigen(f * oracle::to_eigen(v));
    const auto fadj_v = oracle::from_eigen(f.adjoint() * oracle::to_eigen(v));
    CHECK(max_abs_diff(unitary_dft(v), fv) <= 1e-12);
    CHECK(max_abs_diff(unitary_dft(v, true), fadj_v) <= 1e-12);
    CHECK(max_abs_diff(unitary_dft(unitary_dft(v), true), v) <= 1e-13 * std::max(1.0, norm2(v)));
    CHECK(std::abs(norm2(unitary_dft(v)) - norm2(v)) <= 1e-13 * norm2(v));
  }
}

TEST_CASE("radix-2 fast path matches the direct reference") {
  oracle::Rng rng(5);
  for (std::size_t n = 1; n <= 1024; n *= 2) {
    const CVector v = rng.cvector(n);
    for (bool inv : {false, true}) {
      CHECK(max_abs_diff(fft_radix2(v, inv), dft_direct_serial(v, inv)) <= 1e-12);
      CHECK(max_abs_diff(dft_direct(v, inv), dft_direct_serial(v, inv)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(fft_radix2(CVector(6), false), ShapeError);
}

TEST_CASE("orthogonality of exponentials") {
  for (int n = 1; n <= 16; ++n) {
    for (int a = 0; a < 3 * n; ++a) {
      for (int b = 0; b < 3 * n; ++b) {
        cplx s = 0.0;
        for (int k = 0; k < n; ++k) s += unit_root(static_cast<long long>(k) * (a - b), static_cast<std::size_t>(n));
        const double want = (a - b) % n == 0 ? n : 0.0;
        CHECK(std::abs(s - want) <= 1e-12);
      }
    }
  }
}

TEST_CASE("DFT rejects empty and non-finite input") {
  CHECK_THROWS_AS(unitary_dft(CVector{}), ShapeError);
  CHECK_THROWS_AS(unitary_dft(CVector{{NAN, 0}}), ShapeError);
}
