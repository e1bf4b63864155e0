// Lower-bound witnesses: the single-harmonic function f1, the Rudin-Shapiro
// sign sequence with its flatness bound, the flat-spectrum function f2 built
// from it, and the closed-form I-quantity whose two evaluations squeeze
// e⊥_{2n}(f2) from below.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trigapprox/fft.hpp"
#include "trigapprox/grid.hpp"
#include "trigapprox/psi.hpp"
#include "trigapprox/trig_polynomial.hpp"

namespace trigapprox {

// Grid sup of Σ_{k=0}^{m} signs[k] e^{ikx} on a grid oversampling the
// aliasing-free minimum by the given factor (rounded up to a power of two).
inline double flat_sum_grid_sup(std::span<const int> signs, int oversample = kDefaultOversample) {
    if (signs.empty()) throw std::invalid_argument("flat_sum_grid_sup: empty sign sequence");
    if (oversample < 1) throw std::invalid_argument("flat_sum_grid_sup: oversample must be >= 1");
    const std::size_t m = signs.size() - 1;
    const std::size_t n_samples = detail::next_pow2(
        static_cast<std::size_t>(oversample) * (2 * m + 1));
    std::vector<Complex> a(n_samples, Complex{0.0, 0.0});
    for (std::size_t k = 0; k <= m; ++k) a[k] = static_cast<double>(signs[k]);
    detail::fft_pow2(a, +1);
    return norm_linf(a);
}

// ±1 signs ε_0..ε_m whose exponential sum stays below 5·sqrt(m+1) in sup
// norm; the bound is checked at construction on a 16x-oversampled grid and a
// violation is treated as an internal defect, not an input error.
struct SignSequence {
    std::vector<int> signs;

    explicit SignSequence(std::vector<int> values) : signs(std::move(values)) {
        if (signs.empty()) throw std::invalid_argument("SignSequence: empty");
        for (int v : signs)
            if (v != 1 && v != -1) throw std::invalid_argument("SignSequence: entries must be +-1");
        const double sup = flat_sum_grid_sup(signs);
        const double bound = 5.0 * std::sqrt(static_cast<double>(signs.size()));
        if (sup > bound)
            throw std::logic_error("SignSequence: flatness bound violated (construction defect)");
    }

    std::size_t size() const { return signs.size(); }
    int operator[](std::size_t k) const { return signs[k]; }
};

// First m+1 terms of the Rudin-Shapiro sequence via the pair recursion
// P_{j+1} = P_j || Q_j, Q_{j+1} = P_j || -Q_j, signs read off P_j.
inline SignSequence rudin_shapiro(int m) {
    if (m < 0) throw std::invalid_argument("rudin_shapiro: m must be >= 0");
    std::vector<int> p{1}, q{1};
    while (p.size() < static_cast<std::size_t>(m) + 1) {
        std::vector<int> p_next = p;
        p_next.insert(p_next.end(), q.begin(), q.end());
        std::vector<int> q_next = p;
        for (int v : q) q_next.push_back(-v);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    p.resize(static_cast<std::size_t>(m) + 1);
    return SignSequence(std::move(p));
}

// f1(ψ; n; t) = ψ(n) cos nt: orthogonal to all of T_{2n-1}, and its
// (ψ,β)-derivative is the pure cosine cos(nt + βπ/2) of sup norm one.
inline TrigPolynomial f1(const PsiSequence& psi, int n) {
    if (n < 1) throw std::invalid_argument("f1: n must be >= 1");
    const double half = psi.eval(n) / 2.0;
    return TrigPolynomial::from_coeffs({{n, Complex(half, 0)}, {-n, Complex(half, 0)}});
}

// f2(ψ; n; t) = (10·sqrt(2n)+2)^{-1} Σ_{|k|<=2n-1} ξ_{|k|} ψ(|k|) e^{ikt}
// with ξ the Rudin-Shapiro signs for m = 2n-1.
inline TrigPolynomial f2(const PsiSequence& psi, int n) {
    if (n < 1) throw std::invalid_argument("f2: n must be >= 1");
    const SignSequence xi = rudin_shapiro(2 * n - 1);
    const double scale = 1.0 / (10.0 * std::sqrt(2.0 * n) + 2.0);
    std::vector<std::pair<int, Complex>> entries;
    entries.reserve(4 * static_cast<std::size_t>(n) - 1);
    for (int k = -(2 * n - 1); k <= 2 * n - 1; ++k) {
        const int a = std::abs(k);
        entries.emplace_back(k, Complex(xi[a] * psi.eval(a) * scale, 0.0));
    }
    return TrigPolynomial::from_coeffs(entries);
}

// I = π/(5·sqrt(2n)+1) · min over retained γ_{2n} of the discarded ψ mass:
// the infimum keeps the 2n largest of the 4n-1 values {ψ(|k|) : |k|<=2n-1},
// so sorting and summing the 2n-1 smallest is exact.
inline double i_quantity_exact(const PsiSequence& psi, int n) {
    if (n < 1) throw std::invalid_argument("i_quantity_exact: n must be >= 1");
    std::vector<double> values;
    values.reserve(4 * static_cast<std::size_t>(n) - 1);
    values.push_back(psi.eval(0));
    for (int k = 1; k <= 2 * n - 1; ++k) {
        const double v = psi.eval(k);
        values.push_back(v);
        values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    detail::KahanSum smallest;
    for (int i = 0; i < 2 * n - 1; ++i) smallest.add(values[static_cast<std::size_t>(i)]);
    return kPi / (5.0 * std::sqrt(2.0 * n) + 1.0) * smallest.sum;
}

// Certified lower bound on e⊥_{2n}(f2)_s, valid for every s in [1, ∞):
// I <= 2π(10·sqrt(2n)+1)·e⊥_{2n}(f2)_s.
inline double f2_lower_bound(const PsiSequence& psi, int n, double s) {
    if (!(s >= 1.0) || !std::isfinite(s))
        throw std::invalid_argument("f2_lower_bound: requires finite s >= 1");
    return i_quantity_exact(psi, n) / (kTwoPi * (10.0 * std::sqrt(2.0 * n) + 1.0));
}

}  // namespace trigapprox
