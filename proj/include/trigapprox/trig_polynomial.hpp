// Sparse trigonometric polynomials: a finite map from integer frequency k to
// the complex amplitude of e^{ikt}.  This is the universal function
// representation of the library; the extremal constructions have two-term
// spectra at arbitrarily high degree, so storage stays sparse.

#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>

namespace trigapprox {

using Complex = std::complex<double>;

class TrigPolynomial {
public:
    // Amplitudes below this modulus are dropped when polynomials are built or
    // combined, so floating-point cancellation cannot leave degree-inflating
    // dust behind.
    static constexpr double kAmplitudeDropTol = 1e-15;

    TrigPolynomial() = default;

    // Duplicate frequencies are summed, then near-zero amplitudes dropped.
    static TrigPolynomial from_coeffs(std::span<const std::pair<int, Complex>> entries) {
        TrigPolynomial p;
        for (const auto& [k, c] : entries) p.coeffs_[k] += c;
        p.canonicalize();
        return p;
    }

    static TrigPolynomial from_coeffs(std::initializer_list<std::pair<int, Complex>> entries) {
        return from_coeffs(std::span<const std::pair<int, Complex>>(entries.begin(), entries.size()));
    }

    static TrigPolynomial constant(Complex c) { return from_coeffs({{0, c}}); }

    // amplitude * cos(kt) and amplitude * sin(kt)
    static TrigPolynomial harmonic_cos(int k, double amplitude = 1.0) {
        return from_coeffs({{k, Complex(amplitude / 2, 0)}, {-k, Complex(amplitude / 2, 0)}});
    }
    static TrigPolynomial harmonic_sin(int k, double amplitude = 1.0) {
        return from_coeffs({{k, Complex(0, -amplitude / 2)}, {-k, Complex(0, amplitude / 2)}});
    }

    const std::map<int, Complex>& coeffs() const { return coeffs_; }

    Complex coefficient(int k) const {
        const auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
    }

    // max |k| over the support; 0 for the zero polynomial
    int degree() const {
        int d = 0;
        if (!coeffs_.empty()) {
            d = std::abs(coeffs_.begin()->first);
            d = std::max(d, std::abs(coeffs_.rbegin()->first));
        }
        return d;
    }

    std::size_t support_size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    // true iff max_k |f̂(-k) - conj(f̂(k))| <= tol
    bool is_real_valued(double tol) const {
        for (const auto& [k, c] : coeffs_)
            if (std::abs(coefficient(-k) - std::conj(c)) > tol) return false;
        return true;
    }

    // Pointwise evaluation; grids go through synthesize() instead.
    Complex operator()(double t) const {
        Complex acc{0.0, 0.0};
        for (const auto& [k, c] : coeffs_) acc += c * std::polar(1.0, k * t);
        return acc;
    }

    TrigPolynomial& operator+=(const TrigPolynomial& rhs) {
        for (const auto& [k, c] : rhs.coeffs_) coeffs_[k] += c;
        canonicalize();
        return *this;
    }

    TrigPolynomial& operator-=(const TrigPolynomial& rhs) {
        for (const auto& [k, c] : rhs.coeffs_) coeffs_[k] -= c;
        canonicalize();
        return *this;
    }

    TrigPolynomial& operator*=(Complex a) {
        for (auto& [k, c] : coeffs_) c *= a;
        canonicalize();
        return *this;
    }

    friend TrigPolynomial operator+(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs += rhs; }
    friend TrigPolynomial operator-(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs -= rhs; }
    friend TrigPolynomial operator*(Complex a, TrigPolynomial p) { return p *= a; }
    friend TrigPolynomial operator*(double a, TrigPolynomial p) { return p *= Complex(a, 0.0); }

    // Plain-text coefficient list, one line "k re im" per entry, k ascending.
    std::string to_text() const {
        std::string out;
        char line[96];
        for (const auto& [k, c] : coeffs_) {
            std::snprintf(line, sizeof line, "%d %.17g %.17g\n", k, c.real(), c.imag());
            out += line;
        }
        return out;
    }

private:
    void canonicalize() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (std::abs(it->second) < kAmplitudeDropTol)
                it = coeffs_.erase(it);
            else
                ++it;
        }
    }

    std::map<int, Complex> coeffs_;
};

}  // namespace trigapprox
