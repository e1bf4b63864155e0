// The (ψ,β)-derivative and its inverse, applied as diagonal multiplier
// operators directly on Fourier coefficients: for k != 0 the derivative maps
// f̂(k) to f̂(k)/ψ(|k|) · e^{i sign(k) βπ/2} and discards the mean.  Exact
// coefficient arithmetic, no grid round trip.

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trigapprox/grid.hpp"
#include "trigapprox/psi.hpp"
#include "trigapprox/random.hpp"
#include "trigapprox/trig_polynomial.hpp"

namespace trigapprox {

struct DerivativeParams {
    PsiSequence psi;
    double beta = 0.0;  // phase unit: the rotation is sign(k) * beta * π/2
};

inline TrigPolynomial psi_beta_derivative(const TrigPolynomial& f, const DerivativeParams& params) {
    std::vector<std::pair<int, Complex>> entries;
    entries.reserve(f.support_size());
    const Complex plus = std::polar(1.0, params.beta * kPi / 2.0);
    const Complex minus = std::conj(plus);
    for (const auto& [k, c] : f.coeffs()) {
        if (k == 0) continue;
        const Complex phase = k > 0 ? plus : minus;
        entries.emplace_back(k, c / params.psi.eval(std::abs(k)) * phase);
    }
    return TrigPolynomial::from_coeffs(entries);
}

// Inverse multiplier; requires a zero-mean input (the derivative forgets the
// mean, so it must be supplied back explicitly).
inline TrigPolynomial psi_beta_integral(const TrigPolynomial& phi, const DerivativeParams& params,
                                        Complex mean) {
    if (phi.coefficient(0) != Complex{0.0, 0.0})
        throw std::invalid_argument("psi_beta_integral: input must have zero mean");
    std::vector<std::pair<int, Complex>> entries;
    entries.reserve(phi.support_size() + 1);
    const Complex plus = std::polar(1.0, -params.beta * kPi / 2.0);
    const Complex minus = std::conj(plus);
    for (const auto& [k, c] : phi.coeffs()) {
        const Complex phase = k > 0 ? plus : minus;
        entries.emplace_back(k, c * params.psi.eval(std::abs(k)) * phase);
    }
    entries.emplace_back(0, mean);
    return TrigPolynomial::from_coeffs(entries);
}

// Seeded zero-mean member of the class: draw a random real trigonometric
// polynomial φ of the requested degree, normalize it to unit grid sup on a
// 16x-oversampled grid, and integrate.  By construction the (ψ,β)-derivative
// of the result has grid sup exactly 1 on that grid.
inline TrigPolynomial random_class_member(const DerivativeParams& params, int degree,
                                          std::uint64_t seed) {
    if (degree < 1) throw std::invalid_argument("random_class_member: degree must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, Complex>> entries;
    entries.reserve(2 * static_cast<std::size_t>(degree));
    for (int k = 1; k <= degree; ++k) {
        const double a = rng.next_symmetric();
        const double b = rng.next_symmetric();
        entries.emplace_back(k, Complex(a / 2, -b / 2));
        entries.emplace_back(-k, Complex(a / 2, b / 2));
    }
    TrigPolynomial phi = TrigPolynomial::from_coeffs(entries);
    const std::size_t grid = kDefaultOversample * nyquist_size(degree);
    const double sup = norm_linf(synthesize(phi, grid));
    if (sup <= 0.0) throw std::logic_error("random_class_member: degenerate draw");
    phi *= Complex(1.0 / sup, 0.0);
    return psi_beta_integral(phi, params, Complex{0.0, 0.0});
}

}  // namespace trigapprox
