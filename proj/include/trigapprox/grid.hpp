// Uniform sampling of 2π-periodic functions and L_s / L_∞ norms over [0, 2π).
//
// Quadrature is the uniform-node rectangle rule (identical to the trapezoid
// rule for periodic data): spectrally accurate for trigonometric polynomials
// and exact for |p|^2 once the grid resolves 2*degree.  Integrands with kinks
// (|f|^s around zeros of f) converge like O(N^-2); callers oversample, the
// conventional factor being 16x the aliasing-free minimum.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

#include "trigapprox/fft.hpp"
#include "trigapprox/trig_polynomial.hpp"

namespace trigapprox {

inline constexpr int kDefaultOversample = 16;

// Complex samples at t_j = 2π j / N.
struct GridFunction {
    std::vector<Complex> samples;
    std::size_t size() const { return samples.size(); }
};

// Smallest grid that represents degree-d polynomials without aliasing.
inline std::size_t nyquist_size(int degree) {
    return 2 * static_cast<std::size_t>(std::abs(degree)) + 1;
}

namespace detail {

// |z|^s with fast kernels for the exponents the harness sweeps.
inline double abs_pow(double a, double s) {
    if (s == 1.0) return a;
    if (s == 2.0) return a * a;
    if (s == 1.5) return a * std::sqrt(a);
    if (s == 4.0) {
        const double q = a * a;
        return q * q;
    }
    return std::pow(a, s);
}

}  // namespace detail

// mean^{1/s}: the outer root of the L_s quadrature.
inline double norm_root(double mean, double s) {
    if (s == 1.0) return mean;
    if (s == 2.0) return std::sqrt(mean);
    if (s == 4.0) return std::sqrt(std::sqrt(mean));
    return std::pow(mean, 1.0 / s);
}

inline GridFunction synthesize(const TrigPolynomial& p, std::size_t n_samples) {
    if (n_samples == 0) throw std::invalid_argument("synthesize: grid size must be positive");
    GridFunction g;
    g.samples.assign(n_samples, Complex{0.0, 0.0});
    if (p.is_zero()) return g;

    const auto n = static_cast<long long>(n_samples);
    // Dense spectra on power-of-two grids go through one inverse FFT; sparse
    // spectra sum rotated harmonics off the exact twiddle table.  Frequencies
    // are reduced mod N in both paths, which is precisely what sampling does.
    if (detail::is_pow2(n_samples) && n_samples >= 64 && p.support_size() >= 32) {
        for (const auto& [k, c] : p.coeffs()) {
            const auto slot = static_cast<std::size_t>(((k % n) + n) % n);
            g.samples[slot] += c;
        }
        detail::fft_pow2(g.samples, +1);
        return g;
    }
    const auto& w = detail::twiddle_table(n_samples);
    for (const auto& [k, c] : p.coeffs()) {
        const auto stride = static_cast<std::size_t>(((k % n) + n) % n);
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n_samples; ++j) {
            g.samples[j] += c * w[idx];
            idx += stride;
            if (idx >= n_samples) idx -= n_samples;
        }
    }
    return g;
}

// Discrete Fourier coefficients f̂(k) = (1/N) Σ_j g_j e^{-ik t_j} for
// |k| <= max_degree; exact (to rounding) when g was synthesized from a
// polynomial of degree <= max_degree.
inline TrigPolynomial analyze(const GridFunction& g, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("analyze: max_degree must be nonnegative");
    const std::size_t n_samples = g.size();
    if (n_samples < nyquist_size(max_degree))
        throw std::invalid_argument("analyze: grid too coarse for requested degree (aliasing risk)");

    const auto n = static_cast<long long>(n_samples);
    std::vector<std::pair<int, Complex>> entries;
    entries.reserve(2 * static_cast<std::size_t>(max_degree) + 1);

    if (detail::is_pow2(n_samples) && max_degree >= 16) {
        std::vector<Complex> spectrum = g.samples;
        detail::fft_pow2(spectrum, -1);
        for (int k = -max_degree; k <= max_degree; ++k) {
            const auto slot = static_cast<std::size_t>(((k % n) + n) % n);
            entries.emplace_back(k, spectrum[slot] / static_cast<double>(n_samples));
        }
    } else {
        const auto& w = detail::twiddle_table(n_samples);
        for (int k = -max_degree; k <= max_degree; ++k) {
            const auto stride = static_cast<std::size_t>((((-k) % n) + n) % n);
            detail::KahanSum re, im;
            std::size_t idx = 0;
            for (std::size_t j = 0; j < n_samples; ++j) {
                const Complex term = g.samples[j] * w[idx];
                re.add(term.real());
                im.add(term.imag());
                idx += stride;
                if (idx >= n_samples) idx -= n_samples;
            }
            entries.emplace_back(k, Complex(re.sum, im.sum) / static_cast<double>(n_samples));
        }
    }
    return TrigPolynomial::from_coeffs(entries);
}

// ((2π/N) Σ_j |g_j|^s)^{1/s}, 1 <= s < ∞.
inline double norm_ls(std::span<const Complex> samples, double s) {
    if (!(s >= 1.0) || !std::isfinite(s))
        throw std::invalid_argument("norm_ls: requires finite s >= 1");
    if (samples.empty()) throw std::invalid_argument("norm_ls: empty grid");
    detail::KahanSum acc;
    for (const Complex& z : samples) acc.add(detail::abs_pow(std::abs(z), s));
    return norm_root(acc.sum * (kTwoPi / static_cast<double>(samples.size())), s);
}

inline double norm_ls(const GridFunction& g, double s) {
    return norm_ls(std::span<const Complex>(g.samples), s);
}

// Grid max: a lower estimate of the essential sup, converging as N grows.
inline double norm_linf(std::span<const Complex> samples) {
    double m = 0.0;
    for (const Complex& z : samples) m = std::max(m, std::abs(z));
    return m;
}

inline double norm_linf(const GridFunction& g) {
    return norm_linf(std::span<const Complex>(g.samples));
}

}  // namespace trigapprox
