#include "equidist/fft.hpp"

#include <cmath>
#include <numbers>

namespace equidist::fft {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}
}  // namespace

void fft_pow2(std::vector<cd>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * kTau / double(len);
    cd wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cd w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        cd u = a[i + k];
        cd v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

std::vector<cd> dft(const std::vector<cd>& x, int sign) {
  const std::size_t L = x.size();
  if (L == 0) return {};
  if ((L & (L - 1)) == 0) {
    std::vector<cd> a = x;
    fft_pow2(a, sign);
    return a;
  }
  // Bluestein: jk = (j^2 + k^2 - (k-j)^2)/2, chirp c_j = e(sign * j^2 / (2L)).
  // j^2 taken mod 2L keeps the phase argument small.
  std::vector<cd> chirp(L);
  for (std::size_t j = 0; j < L; ++j) {
    std::size_t j2 = (std::size_t)((unsigned __int128)j * j % (2 * L));
    chirp[j] = std::polar(1.0, sign * kTau * double(j2) / double(2 * L));
  }
  std::size_t M = next_pow2(2 * L - 1);
  std::vector<cd> a(M, 0.0), b(M, 0.0);
  for (std::size_t j = 0; j < L; ++j) a[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < L; ++j) b[j] = b[M - j] = std::conj(chirp[j]);
  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t i = 0; i < M; ++i) a[i] *= b[i];
  fft_pow2(a, +1);
  std::vector<cd> out(L);
  for (std::size_t k = 0; k < L; ++k) out[k] = a[k] / double(M) * chirp[k];
  return out;
}

std::vector<cd> dft_direct(const std::vector<cd>& x, int sign) {
  const std::size_t L = x.size();
  std::vector<cd> out(L, 0.0);
  for (std::size_t k = 0; k < L; ++k) {
    cd s = 0.0;
    for (std::size_t j = 0; j < L; ++j) {
      std::size_t e = (std::size_t)((unsigned __int128)j * k % L);
      s += x[j] * std::polar(1.0, sign * kTau * double(e) / double(L));
    }
    out[k] = s;
  }
  return out;
}

std::vector<cd> cyclic_convolution_power(const std::vector<cd>& f, unsigned r) {
  const std::size_t L = f.size();
  std::vector<cd> F = dft(f, -1);
  for (auto& v : F) {
    cd acc = 1.0, base = v;
    for (unsigned e = r; e; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    v = acc;
  }
  std::vector<cd> out = dft(F, +1);
  for (auto& v : out) v /= double(L);
  return out;
}

}  // namespace equidist::fft
