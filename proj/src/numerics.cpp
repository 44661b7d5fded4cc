#include "holosamp/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace holosamp {

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(cplx z, const char* what) {
  if (!is_finite(z)) throw ShapeError(std::string(what) + " must be finite");
}

double binom(int n, int k) {
  if (n < 0) throw ShapeError("binom: n must be non-negative");
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  if (n <= 64) {
    // C(n,i) * (n-i) stays below 2^70 for n <= 64.
    unsigned __int128 r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    return static_cast<double>(r);
  }
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return static_cast<double>(r);
}

cplx unit_root(long long m, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  long long r = m % nn;
  if (r < 0) r += nn;
  if ((4 * r) % nn == 0) {
    static constexpr double re[] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double im[] = {0.0, 1.0, 0.0, -1.0};
    const auto q = static_cast<std::size_t>(4 * r / nn);
    return {re[q], im[q]};
  }
  // reduce to (-N/2, N/2] for a smaller argument
  if (2 * r > nn) r -= nn;
  const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(nn);
  return {std::cos(angle), std::sin(angle)};
}

CVector roots_of_unity(std::size_t n) {
  if (n == 0) throw ShapeError("roots_of_unity: N must be positive");
  CVector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = unit_root(static_cast<long long>(k), n);
  return out;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

CVector twiddles(std::size_t n, bool inverse) {
  CVector w = roots_of_unity(n);
  if (inverse)
    for (auto& x : w) x = std::conj(x);
  return w;
}

}  // namespace

CVector dft_direct_serial(std::span<const cplx> v, bool inverse) {
  const std::size_t n = v.size();
  if (n == 0) throw ShapeError("DFT of an empty vector");
  const CVector w = twiddles(n, inverse);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) acc += w[(k * m) % n] * v[m];
    out[k] = acc * scale;
  }
  return out;
}

CVector dft_direct(std::span<const cplx> v, bool inverse) {
  const std::size_t n = v.size();
  if (n == 0) throw ShapeError("DFT of an empty vector");
  const CVector w = twiddles(n, inverse);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CVector out(n);
  const auto nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (n >= 256)
  for (long long k = 0; k < nn; ++k) {
    cplx acc = 0.0;
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t m = 0; m < n; ++m) acc += w[(kk * m) % n] * v[m];
    out[kk] = acc * scale;
  }
  return out;
}

CVector fft_radix2(std::span<const cplx> v, bool inverse) {
  const std::size_t n = v.size();
  if (!is_power_of_two(n)) throw ShapeError("fft_radix2: length must be a power of two");
  CVector a(v.begin(), v.end());
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const CVector w = twiddles(n, inverse);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx u = a[i + j];
        const cplx t = w[j * stride] * a[i + j + half];
        a[i + j] = u + t;
        a[i + j + half] = u - t;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& x : a) x *= scale;
  return a;
}

CVector unitary_dft(std::span<const cplx> v, bool inverse) {
  if (v.empty()) throw ShapeError("DFT of an empty vector");
  for (const auto& x : v) require_finite(x, "DFT input");
  if (is_power_of_two(v.size()) && v.size() >= 8) return fft_radix2(v, inverse);
  return dft_direct(v, inverse);
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ShapeError("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace holosamp
