#pragma once

// Dense, formula-level reference implementations.  Nothing here calls into the
// library's fast paths, so agreement is an independent check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "holosamp/numerics.hpp"

namespace oracle {

using holosamp::cplx;
using holosamp::CVector;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
inline constexpr double pi = 3.141592653589793238462643383279502884;

inline Vec to_eigen(const CVector& v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

inline CVector from_eigen(const Vec& v) { return CVector(v.data(), v.data() + v.size()); }

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double gauss() { return normal_(gen_); }
  cplx cgauss() { return {gauss(), gauss()}; }
  CVector cvector(std::size_t n) {
    CVector v(n);
    for (auto& x : v) x = cgauss();
    return v;
  }
  // uniform in the disk |z| <= r
  cplx in_disk(double r) {
    const double rho = r * std::sqrt(uniform(0.0, 1.0));
    return std::polar(rho, uniform(0.0, 2 * pi));
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline cplx root(long long m, long long n) { return std::polar(1.0, 2.0 * pi * static_cast<double>(m) / static_cast<double>(n)); }

// Naive Pascal-triangle binomial in double (exact well past the sizes used here).
inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
  row[0] = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

// Exact binomial in base-2^32 big integers, then rounded to double.
inline double big_binom(int n, int k) {
  std::vector<std::uint32_t> limbs{1};
  auto mul = [&](std::uint32_t f) {
    std::uint64_t carry = 0;
    for (auto& l : limbs) {
      const std::uint64_t t = static_cast<std::uint64_t>(l) * f + carry;
      l = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
  };
  auto div = [&](std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | limbs[i];
      limbs[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
  };
  for (int i = 1; i <= k; ++i) {
    mul(static_cast<std::uint32_t>(n - k + i));
    div(static_cast<std::uint32_t>(i));
  }
  long double x = 0.0L;
  for (std::size_t i = limbs.size(); i-- > 0;) x = x * 4294967296.0L + limbs[i];
  return static_cast<double>(x);
}

// (F_N)_{nm} = e^{+2 pi i n m / N} / sqrt(N)
inline Mat dft_matrix(int n) {
  Mat f(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f(a, b) = root(static_cast<long long>(a) * b, n) / std::sqrt(double(n));
  return f;
}

// Rectangular N x M Fourier matrix from its entry formula.
inline Mat rfm_matrix(int n, int m) {
  Mat f(n, m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) f(a, b) = root(static_cast<long long>(a) * b, n) / std::sqrt(double(n));
  return f;
}

// <z|s, n-s> = (1+|z|^2)^{-s} binom(2s,n)^{1/2} conj(z)^n
inline cplx cs_component(int two_s, int n, cplx z) {
  return std::pow(1.0 + std::norm(z), -0.5 * two_s) * std::sqrt(binom(two_s, n)) * std::pow(std::conj(z), n);
}

inline cplx majorana(int two_s, const CVector& a, cplx z) {
  cplx acc = 0.0;
  for (int n = 0; n <= two_s; ++n) acc += a[static_cast<std::size_t>(n)] * cs_component(two_s, n, z);
  return acc;
}

inline CVector sample_points(int n, cplx c = 1.0) {
  CVector z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = c * root(k, n);
  return z;
}

// T_{kn} = <z_k|s, n-s>
inline Mat frame(int two_s, int n, cplx c = 1.0) {
  const CVector z = sample_points(n, c);
  Mat t(n, two_s + 1);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m <= two_s; ++m) t(k, m) = cs_component(two_s, m, z[static_cast<std::size_t>(k)]);
  return t;
}

inline Mat pinv(const Mat& m) { return m.completeOrthogonalDecomposition().pseudoInverse(); }

// Pseudo-inverse that drops singular values below rel_tol * largest.
inline Mat pinv(const Mat& m, double rel_tol) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

inline std::vector<double> hermitian_eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

// Wigner d^j_{m m'}(beta) from the explicit finite sum.
inline double wigner_d(int j, int m, int mp, double beta) {
  const double pre = std::sqrt(factorial(j + m) * factorial(j - m) * factorial(j + mp) * factorial(j - mp));
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  double acc = 0.0;
  for (int k = 0; k <= 2 * j; ++k) {
    const int a = j + mp - k, b = k, cc = m - mp + k, d = j - m - k;
    if (a < 0 || cc < 0 || d < 0) continue;
    const double sign = ((mp - m + k) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * std::pow(c, 2 * j + mp - m - 2 * k) * std::pow(s, m - mp + 2 * k) /
           (factorial(a) * factorial(b) * factorial(cc) * factorial(d));
  }
  return pre * acc;
}

// Determinant of a small complex matrix by cofactor expansion.
inline cplx det(const Mat& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  cplx acc = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Mat minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    acc += (c % 2 == 0 ? 1.0 : -1.0) * m(0, c) * det(minor);
  }
  return acc;
}

}  // namespace oracle
