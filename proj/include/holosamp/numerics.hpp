#pragma once

// Foundation arithmetic shared by every other module: complex values,
// twice-spin bookkeeping, binomial weights and the unitary DFT.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace holosamp {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Error hierarchy.  Every failure raised by the library derives from Error so
// that the CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong lengths, out-of-range indices, non-finite values.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the sampling regime of the frame.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: singular or ill-conditioned operator.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Spin s carried as the integer 2s so half-integer spins are exact.
class TwiceSpin {
 public:
  constexpr TwiceSpin() = default;
  explicit TwiceSpin(int two_s) : two_s_(two_s) {
    if (two_s < 0) throw ShapeError("twice-spin must be non-negative, got " + std::to_string(two_s));
  }
  static TwiceSpin from_integer_spin(int j) { return TwiceSpin(2 * j); }

  constexpr int twice() const { return two_s_; }
  constexpr int dim() const { return two_s_ + 1; }
  constexpr double spin() const { return 0.5 * two_s_; }
  constexpr bool is_integer() const { return two_s_ % 2 == 0; }

  friend constexpr bool operator==(TwiceSpin, TwiceSpin) = default;

 private:
  int two_s_ = 0;
};

bool is_finite(cplx z);
void require_finite(cplx z, const char* what);

// Binomial coefficient.  Exact integer arithmetic for n <= 64; 0 outside 0 <= k <= n.
double binom(int n, int k);

// e^{2 pi i k / N}, k = 0..N-1.
CVector roots_of_unity(std::size_t n);

// e^{2 pi i m / N} for an arbitrary integer m, reduced modulo N first.
cplx unit_root(long long m, std::size_t n);

// Unitary DFT with kernel e^{+2 pi i n m / N} / sqrt(N); `inverse` applies the adjoint.
// Uses the radix-2 path when N is a power of two, the direct sum otherwise.
CVector unitary_dft(std::span<const cplx> v, bool inverse = false);

// Direct O(N^2) sum, parallel over output index.  Serial variant kept as reference.
CVector dft_direct(std::span<const cplx> v, bool inverse);
CVector dft_direct_serial(std::span<const cplx> v, bool inverse);

// Iterative radix-2 transform; N must be a power of two.
CVector fft_radix2(std::span<const cplx> v, bool inverse);

bool is_power_of_two(std::size_t n);

double norm2(std::span<const cplx> v);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace holosamp
