// Iterative radix-2 FFT used by the grid and solver code paths.
// Conventions: sign = -1 computes X_d = sum_j x_j e^{-2πi jd/N} (analysis),
// sign = +1 the unscaled inverse kernel (synthesis); callers divide by N
// where needed.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace trigapprox {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// e^{2πi r/N} for r = 0..N-1, cached per grid size.  Also used directly by
// the naive synthesis path: e^{ik t_j} = table[(k*j) mod N] is exact in the
// index arithmetic, so no phase drift accumulates over long grids.
inline const std::vector<std::complex<double>>& twiddle_table(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<std::complex<double>>> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<std::complex<double>> w(n);
    for (std::size_t r = 0; r < n; ++r)
        w[r] = std::polar(1.0, kTwoPi * (static_cast<double>(r) / static_cast<double>(n)));
    return cache.emplace(n, std::move(w)).first->second;
}

inline void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
    if (n == 1) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& w = twiddle_table(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = n / len;
        for (std::size_t block = 0; block < n; block += len) {
            std::size_t idx = 0;
            for (std::size_t k = 0; k < half; ++k, idx += step) {
                const std::complex<double> tw = sign < 0 ? std::conj(w[idx]) : w[idx];
                const std::complex<double> u = a[block + k];
                const std::complex<double> v = a[block + k + half] * tw;
                a[block + k] = u + v;
                a[block + k + half] = u - v;
            }
        }
    }
}

// Compensated (Kahan) accumulator; the quadrature sums run over grids of up
// to 2^18 points while Parseval checks ask for 1e-10 relative agreement.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace detail
}  // namespace trigapprox
