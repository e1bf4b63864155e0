// The three approximation quantities on trigonometric polynomials:
//
//   deviation_norm   L_s distance from the Fourier partial sum S_{n-1}
//   best_approx      E_n: best L_s approximation from T_{2n-1}
//                    (Parseval closed form at s = 2, grid IRLS otherwise,
//                    always paired with a dual lower-bound certificate)
//   best_orthogonal  e⊥_m: best m-term approximation that keeps Fourier
//                    coefficients verbatim (provably optimal coefficient
//                    sort at s = 2, exhaustive subset search on small
//                    supports, forward greedy upper bound in general)
//
// IRLS solves the weighted least-squares subproblems through the Toeplitz
// structure of the normal equations in the exponential basis: one FFT of the
// weight vector assembles the Gram matrix, one FFT of (weights * samples)
// the right-hand side.  For s > 2 the update is under-relaxed by 1/(s-1),
// the classical step that keeps the iteration contractive.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trigapprox/fft.hpp"
#include "trigapprox/grid.hpp"
#include "trigapprox/trig_polynomial.hpp"

namespace trigapprox {

// Retained harmonics of an m-term approximant; members need not be symmetric.
struct FrequencySet {
    std::set<int> members;
    std::size_t size() const { return members.size(); }
    bool contains(int k) const { return members.count(k) != 0; }
};

enum class ApproxMethod { ClosedFormL2, Irls, ExactL2, Exhaustive, Greedy };

inline const char* to_string(ApproxMethod m) {
    switch (m) {
        case ApproxMethod::ClosedFormL2: return "closed_form_l2";
        case ApproxMethod::Irls: return "irls";
        case ApproxMethod::ExactL2: return "exact_l2";
        case ApproxMethod::Exhaustive: return "exhaustive";
        case ApproxMethod::Greedy: return "greedy";
    }
    return "?";
}

struct ApproxResult {
    double value = 0.0;
    TrigPolynomial minimizer_poly;  // set by best_approx
    FrequencySet minimizer_set;     // set by best_orthogonal
    ApproxMethod method = ApproxMethod::ClosedFormL2;
    std::optional<double> certificate;  // lower bound on the true infimum
    bool converged = true;
    int iterations = 0;
    std::optional<double> discretization_gap;  // |value on 2N - value on N| of the minimizer
};

struct SolverOptions {
    double tol = 1e-9;    // relative change of the attained value per iteration
    int max_iter = 500;
    int grid_oversample = kDefaultOversample;
    double weight_floor = 1e-10;  // IRLS residual smoothing: weights (max(|r|, floor))^{s-2}
    bool report_discretization_gap = true;
};

// S_{n-1}(f): retains exactly the frequencies |k| <= n-1.
inline TrigPolynomial partial_sum(const TrigPolynomial& f, int n) {
    if (n < 1) throw std::invalid_argument("partial_sum: n must be >= 1");
    std::vector<std::pair<int, Complex>> entries;
    for (const auto& [k, c] : f.coeffs())
        if (std::abs(k) <= n - 1) entries.emplace_back(k, c);
    return TrigPolynomial::from_coeffs(entries);
}

// S_gamma(f): copies the coefficients named by gamma.
inline TrigPolynomial retained_sum(const TrigPolynomial& f, const FrequencySet& gamma) {
    std::vector<std::pair<int, Complex>> entries;
    for (const auto& [k, c] : f.coeffs())
        if (gamma.contains(k)) entries.emplace_back(k, c);
    return TrigPolynomial::from_coeffs(entries);
}

// ||f - S_{n-1}(f)||_s on an explicit grid.  The residual is formed in
// coefficient space first, so polynomials inside the window give exact zero.
inline double deviation_norm(const TrigPolynomial& f, int n, double s, std::size_t n_samples) {
    if (n_samples < nyquist_size(f.degree()))
        throw std::invalid_argument("deviation_norm: grid below the aliasing-free minimum");
    return norm_ls(synthesize(f - partial_sum(f, n), n_samples), s);
}

// Lower bound on E_n(f)_s from the test harmonic e^{ijt}, |j| >= n: pairing
// the residual against it kills every competitor in T_{2n-1}, and Hölder
// with the norm-nesting inequality turns |2π f̂(j)| into (2π)^{1/s} |f̂(j)|.
inline double dual_lower_bound(const TrigPolynomial& f, const TrigPolynomial& t, int n, double s,
                               int j) {
    if (n < 1) throw std::invalid_argument("dual_lower_bound: n must be >= 1");
    if (!(s >= 1.0) || !std::isfinite(s))
        throw std::invalid_argument("dual_lower_bound: requires finite s >= 1");
    if (std::abs(j) < n)
        throw std::invalid_argument("dual_lower_bound: test frequency must satisfy |j| >= n");
    if (t.degree() > n - 1)
        throw std::invalid_argument("dual_lower_bound: competitor must lie in T_{2n-1}");
    return std::pow(kTwoPi, 1.0 / s) * std::abs(f.coefficient(j));
}

// Best dual bound over the test frequencies present in f.
inline double dual_certificate(const TrigPolynomial& f, int n, double s) {
    if (n < 1) throw std::invalid_argument("dual_certificate: n must be >= 1");
    if (!(s >= 1.0) || !std::isfinite(s))
        throw std::invalid_argument("dual_certificate: requires finite s >= 1");
    double largest = 0.0;
    for (const auto& [k, c] : f.coeffs())
        if (std::abs(k) >= n) largest = std::max(largest, std::abs(c));
    return std::pow(kTwoPi, 1.0 / s) * largest;
}

namespace detail {

inline double irls_weight(double r, double s, double floor) {
    const double a = std::max(r, floor);
    if (s == 1.0) return 1.0 / a;
    if (s == 1.5) return 1.0 / std::sqrt(a);
    if (s == 2.0) return 1.0;
    if (s == 4.0) return a * a;
    return std::pow(a, s - 2.0);
}

// Dense Hermitian Cholesky solve of A x = b (A row-major, overwritten).
inline std::vector<Complex> cholesky_solve(std::vector<Complex>& a, std::vector<Complex> b,
                                           std::size_t d) {
    for (std::size_t j = 0; j < d; ++j) {
        double diag = a[j * d + j].real();
        for (std::size_t k = 0; k < j; ++k) diag -= std::norm(a[j * d + k]);
        if (!(diag > 0.0)) throw std::runtime_error("cholesky_solve: matrix not positive definite");
        const double ljj = std::sqrt(diag);
        a[j * d + j] = ljj;
        for (std::size_t i = j + 1; i < d; ++i) {
            Complex v = a[i * d + j];
            for (std::size_t k = 0; k < j; ++k) v -= a[i * d + k] * std::conj(a[j * d + k]);
            a[i * d + j] = v / ljj;
        }
    }
    for (std::size_t i = 0; i < d; ++i) {  // L y = b
        Complex v = b[i];
        for (std::size_t k = 0; k < i; ++k) v -= a[i * d + k] * b[k];
        b[i] = v / a[i * d + i].real();
    }
    for (std::size_t ii = d; ii-- > 0;) {  // L^H x = y
        Complex v = b[ii];
        for (std::size_t k = ii + 1; k < d; ++k) v -= std::conj(a[k * d + ii]) * b[k];
        b[ii] = v / a[ii * d + ii].real();
    }
    return b;
}

// argmin_c Σ_j w_j |f_j - Σ_{|k|<=dmax} c_k e^{ik t_j}|^2 on a power-of-two
// grid.  Returns c packed as c[k + dmax].
inline std::vector<Complex> weighted_projection(const std::vector<double>& w,
                                                const std::vector<Complex>& f_grid, int dmax) {
    const std::size_t n = w.size();
    const auto nn = static_cast<long long>(n);
    const std::size_t d = 2 * static_cast<std::size_t>(dmax) + 1;
    std::vector<Complex> w_hat(n), wf_hat(n);
    for (std::size_t j = 0; j < n; ++j) {
        w_hat[j] = w[j];
        wf_hat[j] = w[j] * f_grid[j];
    }
    fft_pow2(w_hat, -1);
    fft_pow2(wf_hat, -1);

    const auto slot = [&](long long k) {
        return static_cast<std::size_t>(((k % nn) + nn) % nn);
    };
    std::vector<Complex> gram(d * d);
    std::vector<Complex> rhs(d);
    for (long long l = -dmax; l <= dmax; ++l) {
        rhs[static_cast<std::size_t>(l + dmax)] = wf_hat[slot(l)];
        for (long long k = -dmax; k <= dmax; ++k)
            gram[static_cast<std::size_t>(l + dmax) * d + static_cast<std::size_t>(k + dmax)] =
                w_hat[slot(l - k)];
    }
    const double ridge = 1e-12 * w_hat[0].real();
    for (std::size_t i = 0; i < d; ++i) gram[i * d + i] += ridge;
    return cholesky_solve(gram, std::move(rhs), d);
}

inline TrigPolynomial poly_from_packed(const std::vector<Complex>& c, int dmax) {
    std::vector<std::pair<int, Complex>> entries;
    entries.reserve(c.size());
    for (int k = -dmax; k <= dmax; ++k)
        entries.emplace_back(k, c[static_cast<std::size_t>(k + dmax)]);
    return TrigPolynomial::from_coeffs(entries);
}

// Σ_j |r_j - v_j|^s without materializing the difference.
inline double shifted_power_sum(std::span<const Complex> r, std::span<const Complex> v, double s) {
    KahanSum acc;
    for (std::size_t j = 0; j < r.size(); ++j) acc.add(abs_pow(std::abs(r[j] - v[j]), s));
    return acc.sum;
}

inline double power_sum(std::span<const Complex> r, double s) {
    KahanSum acc;
    for (const Complex& z : r) acc.add(abs_pow(std::abs(z), s));
    return acc.sum;
}

}  // namespace detail

// Grid IRLS solver behind best_approx for s != 2.  Exposed on its own so the
// s = 2 closed form can be validated against the iterative path.
inline ApproxResult best_approx_irls(const TrigPolynomial& f, int n, double s,
                                     const SolverOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("best_approx_irls: n must be >= 1");
    if (!(s >= 1.0) || !std::isfinite(s))
        throw std::invalid_argument("best_approx_irls: requires finite s >= 1");
    if (!f.is_real_valued(1e-12))
        throw std::invalid_argument("best_approx_irls: f must be real-valued");
    if (opts.max_iter < 1 || opts.grid_oversample < 1 || !(opts.tol > 0.0))
        throw std::invalid_argument("best_approx_irls: bad solver options");

    ApproxResult res;
    res.certificate = dual_certificate(f, n, s);

    const int dmax = n - 1;
    const int deg = std::max(f.degree(), dmax);
    const std::size_t n_samples = detail::next_pow2(
        static_cast<std::size_t>(opts.grid_oversample) * nyquist_size(deg));

    const std::vector<Complex> f_grid = synthesize(f, n_samples).samples;
    TrigPolynomial t = partial_sum(f, n);
    std::vector<Complex> residual = synthesize(f - t, n_samples).samples;
    double value = norm_ls(residual, s);

    TrigPolynomial best_t = t;
    double best_value = value;
    double prev = value;
    bool converged = false;
    int iterations = 0;

    std::vector<Complex> coeffs(2 * static_cast<std::size_t>(dmax) + 1);
    for (int k = -dmax; k <= dmax; ++k)
        coeffs[static_cast<std::size_t>(k + dmax)] = t.coefficient(k);

    std::vector<double> weights(n_samples);
    for (int it = 1; it <= opts.max_iter; ++it) {
        iterations = it;
        for (std::size_t j = 0; j < n_samples; ++j)
            weights[j] = detail::irls_weight(std::abs(residual[j]), s, opts.weight_floor);
        const std::vector<Complex> ls = detail::weighted_projection(weights, f_grid, dmax);
        if (s > 2.0) {
            const double step = 1.0 / (s - 1.0);
            for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += step * (ls[i] - coeffs[i]);
        } else {
            coeffs = ls;
        }
        t = detail::poly_from_packed(coeffs, dmax);
        residual = synthesize(f - t, n_samples).samples;
        value = norm_ls(residual, s);
        if (value < best_value) {
            best_value = value;
            best_t = t;
        }
        if (std::abs(value - prev) <= opts.tol * std::max(prev, 1e-300)) {
            converged = true;
            break;
        }
        prev = value;
    }

    res.value = best_value;
    res.minimizer_poly = best_t;
    res.method = ApproxMethod::Irls;
    res.converged = converged;
    res.iterations = iterations;
    if (opts.report_discretization_gap) {
        const double refined = norm_ls(synthesize(f - best_t, 2 * n_samples), s);
        res.discretization_gap = std::abs(refined - best_value);
    }
    return res;
}

// E_n(f)_s over real-coefficient competitors of degree <= n-1.  s = 2 is the
// Parseval closed form; other s run IRLS on the oversampled grid, warm-started
// at the partial sum (a feasible competitor, so the reported value never
// exceeds the deviation norm) and tracking the best iterate seen.
inline ApproxResult best_approx(const TrigPolynomial& f, int n, double s,
                                const SolverOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("best_approx: n must be >= 1");
    if (!(s >= 1.0) || !std::isfinite(s))
        throw std::invalid_argument("best_approx: requires finite s >= 1");
    if (!f.is_real_valued(1e-12))
        throw std::invalid_argument("best_approx: competitors have real coefficients; f must be real-valued");

    if (s == 2.0) {
        ApproxResult res;
        res.certificate = dual_certificate(f, n, s);
        detail::KahanSum tail;
        for (const auto& [k, c] : f.coeffs())
            if (std::abs(k) >= n) tail.add(std::norm(c));
        res.value = std::sqrt(kTwoPi * tail.sum);
        res.minimizer_poly = partial_sum(f, n);
        res.method = ApproxMethod::ClosedFormL2;
        return res;
    }
    return best_approx_irls(f, n, s, opts);
}

enum class OrthogonalMethod { ExactL2, Exhaustive, Greedy };

namespace detail {

// Candidate order used for tie-breaking and the greedy scan: larger
// |coefficient| first, then smaller |frequency|, then the positive one.
struct SupportEntry {
    int k;
    Complex c;
    double mag;
};

inline bool magnitude_order(const SupportEntry& a, const SupportEntry& b) {
    if (a.mag != b.mag) return a.mag > b.mag;
    if (std::abs(a.k) != std::abs(b.k)) return std::abs(a.k) < std::abs(b.k);
    return a.k > b.k;
}

inline bool frequency_order(const SupportEntry& a, const SupportEntry& b) {
    if (std::abs(a.k) != std::abs(b.k)) return std::abs(a.k) < std::abs(b.k);
    return a.k > b.k;
}

inline FrequencySet pad_to_size(std::vector<int> chosen, std::size_t m, int degree) {
    FrequencySet gamma;
    for (int k : chosen) gamma.members.insert(k);
    for (int k = degree + 1; gamma.members.size() < m; ++k) gamma.members.insert(k);
    return gamma;
}

}  // namespace detail

// e⊥_m(f)_s.  ExactL2 keeps the m largest coefficients (optimal for s = 2,
// by Parseval).  Exhaustive enumerates every retained subset of the support
// of size <= min(m, |support|): fewer than m retained frequencies is
// feasible because gamma can be padded with frequencies outside the support,
// where S_gamma copies nothing.  Greedy adds one frequency at a time and
// reports the best prefix, which is a feasible upper bound for the same
// padding reason, and makes the value nonincreasing in m.
inline ApproxResult best_orthogonal(const TrigPolynomial& f, int m, double s,
                                    OrthogonalMethod method, std::size_t n_samples) {
    if (m < 1) throw std::invalid_argument("best_orthogonal: m must be >= 1");
    if (!(s >= 1.0) || !std::isfinite(s))
        throw std::invalid_argument("best_orthogonal: requires finite s >= 1");

    std::vector<detail::SupportEntry> support;
    support.reserve(f.support_size());
    for (const auto& [k, c] : f.coeffs()) support.push_back({k, c, std::abs(c)});
    const std::size_t n_support = support.size();
    const std::size_t keep = std::min<std::size_t>(m, n_support);

    ApproxResult res;

    if (method == OrthogonalMethod::ExactL2) {
        if (s != 2.0) throw std::invalid_argument("best_orthogonal: exact_l2 requires s = 2");
        std::sort(support.begin(), support.end(), detail::magnitude_order);
        detail::KahanSum tail;
        for (std::size_t i = n_support; i-- > keep;) tail.add(support[i].mag * support[i].mag);
        std::vector<int> chosen;
        for (std::size_t i = 0; i < keep; ++i) chosen.push_back(support[i].k);
        res.value = std::sqrt(kTwoPi * tail.sum);
        res.minimizer_set = detail::pad_to_size(std::move(chosen), static_cast<std::size_t>(m),
                                                f.degree());
        res.method = ApproxMethod::ExactL2;
        res.certificate = res.value;  // provably optimal
        return res;
    }

    if (n_samples < nyquist_size(f.degree()))
        throw std::invalid_argument("best_orthogonal: grid below the aliasing-free minimum");
    const std::vector<Complex> f_grid = synthesize(f, n_samples).samples;

    std::sort(support.begin(), support.end(), detail::frequency_order);
    std::vector<std::vector<Complex>> columns(n_support);
    for (std::size_t i = 0; i < n_support; ++i)
        columns[i] =
            synthesize(TrigPolynomial::from_coeffs({{support[i].k, support[i].c}}), n_samples)
                .samples;

    const double root_scale = kTwoPi / static_cast<double>(n_samples);
    const auto finish_norm = [&](double raw_sum) {
        return norm_root(raw_sum * root_scale, s);
    };

    if (method == OrthogonalMethod::Exhaustive) {
        if (n_support > 16)
            throw std::invalid_argument("best_orthogonal: exhaustive limited to supports of size <= 16");
        double best_sum = detail::power_sum(f_grid, s);
        std::uint32_t best_mask = 0;
        std::vector<std::size_t> idx;
        idx.reserve(16);
        const std::uint32_t mask_end = 1u << n_support;
        for (std::uint32_t mask = 1; mask < mask_end; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) > keep) continue;
            idx.clear();
            for (std::size_t i = 0; i < n_support; ++i)
                if (mask & (1u << i)) idx.push_back(i);
            detail::KahanSum acc;
            for (std::size_t j = 0; j < n_samples; ++j) {
                Complex z = f_grid[j];
                for (std::size_t i : idx) z -= columns[i][j];
                acc.add(detail::abs_pow(std::abs(z), s));
            }
            if (acc.sum < best_sum) {
                best_sum = acc.sum;
                best_mask = mask;
            }
        }
        std::vector<int> chosen;
        for (std::size_t i = 0; i < n_support; ++i)
            if (best_mask & (1u << i)) chosen.push_back(support[i].k);
        res.value = finish_norm(best_sum);
        res.minimizer_set = detail::pad_to_size(std::move(chosen), static_cast<std::size_t>(m),
                                                f.degree());
        res.method = ApproxMethod::Exhaustive;
        return res;
    }

    // Greedy
    std::vector<Complex> residual = f_grid;
    std::vector<bool> used(n_support, false);
    std::vector<int> pick_order;
    double best_sum = detail::power_sum(residual, s);
    std::size_t best_prefix = 0;
    for (std::size_t step = 0; step < keep; ++step) {
        std::size_t best_i = n_support;
        double best_cand = 0.0;
        for (std::size_t i = 0; i < n_support; ++i) {
            if (used[i]) continue;
            const double cand = detail::shifted_power_sum(residual, columns[i], s);
            if (best_i == n_support || cand < best_cand) {
                best_i = i;
                best_cand = cand;
            }
        }
        used[best_i] = true;
        pick_order.push_back(support[best_i].k);
        for (std::size_t j = 0; j < n_samples; ++j) residual[j] -= columns[best_i][j];
        if (best_cand < best_sum) {
            best_sum = best_cand;
            best_prefix = step + 1;
        }
    }
    std::vector<int> chosen(pick_order.begin(), pick_order.begin() + best_prefix);
    res.value = finish_norm(best_sum);
    res.minimizer_set =
        detail::pad_to_size(std::move(chosen), static_cast<std::size_t>(m), f.degree());
    res.method = ApproxMethod::Greedy;
    res.iterations = static_cast<int>(keep);
    return res;
}

}  // namespace trigapprox
