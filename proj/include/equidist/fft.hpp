#pragma once

#include <complex>
#include <vector>

namespace equidist::fft {

using cd = std::complex<double>;

// In-place radix-2 transform; size must be a power of two.
// sign = -1: forward (kernel e(-jk/N)); sign = +1: inverse without the 1/N.
void fft_pow2(std::vector<cd>& a, int sign);

// DFT of arbitrary length via Bluestein's chirp-z reduction:
// X_k = sum_j x_j e(sign * jk / L).
std::vector<cd> dft(const std::vector<cd>& x, int sign);

// Brute-force DFT; the oracle the fast path is tested against.
std::vector<cd> dft_direct(const std::vector<cd>& x, int sign);

// r-fold cyclic self-convolution of f (length L), i.e. the coefficient array
// of f^(*r):  out[m] = sum over j_1+...+j_r = m (mod L) of prod f[j_i].
std::vector<cd> cyclic_convolution_power(const std::vector<cd>& f, unsigned r);

}  // namespace equidist::fft
