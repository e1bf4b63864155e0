#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "trigapprox/grid.hpp"
#include "trigapprox/random.hpp"
#include "trigapprox/trig_polynomial.hpp"

using namespace trigapprox;

namespace {

TrigPolynomial random_poly(SplitMix64& rng, int degree, bool real_valued) {
    std::vector<std::pair<int, Complex>> entries;
    for (int k = 1; k <= degree; ++k) {
        const double a = rng.next_symmetric();
        const double b = rng.next_symmetric();
        if (real_valued) {
            entries.emplace_back(k, Complex(a / 2, -b / 2));
            entries.emplace_back(-k, Complex(a / 2, b / 2));
        } else {
            entries.emplace_back(k, Complex(a, b));
            entries.emplace_back(-k, Complex(rng.next_symmetric(), rng.next_symmetric()));
        }
    }
    entries.emplace_back(0, Complex(rng.next_symmetric(), 0.0));
    return TrigPolynomial::from_coeffs(entries);
}

}  // namespace

TEST_CASE("from_coeffs canonical form") {
    const TrigPolynomial zero = TrigPolynomial::from_coeffs({});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 0);

    const TrigPolynomial cosine = TrigPolynomial::from_coeffs({{1, 0.5}, {-1, 0.5}});
    CHECK(cosine.degree() == 1);
    CHECK(cosine.coefficient(1) == Complex(0.5, 0.0));

    // duplicate frequencies cancel exactly and disappear
    const TrigPolynomial cancelled =
        TrigPolynomial::from_coeffs({{3, Complex(0, 1)}, {3, Complex(0, -1)}});
    CHECK(cancelled.is_zero());
    CHECK(cancelled.degree() == 0);

    // duplicates sum
    const TrigPolynomial summed = TrigPolynomial::from_coeffs({{2, 1.0}, {2, 2.0}});
    CHECK(summed.coefficient(2) == Complex(3.0, 0.0));
}

TEST_CASE("is_real_valued") {
    CHECK(TrigPolynomial::harmonic_cos(1).is_real_valued(0.0));
    CHECK(TrigPolynomial::harmonic_sin(5).is_real_valued(0.0));
    CHECK_FALSE(TrigPolynomial::from_coeffs({{1, 1.0}}).is_real_valued(1e-9));
}

TEST_CASE("coefficient lookup") {
    const TrigPolynomial cosine = TrigPolynomial::harmonic_cos(1);
    CHECK(cosine.coefficient(1) == Complex(0.5, 0.0));
    CHECK(cosine.coefficient(2) == Complex(0.0, 0.0));
    CHECK(cosine.coefficient(-7) == Complex(0.0, 0.0));
}

TEST_CASE("degree tracks the largest frequency in modulus") {
    const TrigPolynomial p = TrigPolynomial::from_coeffs({{-9, 1.0}, {4, 1.0}});
    CHECK(p.degree() == 9);
}

TEST_CASE("round trip through the entry list is idempotent") {
    SplitMix64 rng(2024);
    for (int rep = 0; rep < 50; ++rep) {
        const TrigPolynomial p = random_poly(rng, 16, rep % 2 == 0);
        std::vector<std::pair<int, Complex>> entries(p.coeffs().begin(), p.coeffs().end());
        const TrigPolynomial q = TrigPolynomial::from_coeffs(entries);
        CHECK(q.coeffs() == p.coeffs());
    }
}

TEST_CASE("linearity of coefficients is exact") {
    SplitMix64 rng(77);
    for (int rep = 0; rep < 50; ++rep) {
        const TrigPolynomial p = random_poly(rng, 12, false);
        const TrigPolynomial q = random_poly(rng, 12, false);
        const Complex a(rng.next_symmetric(), rng.next_symmetric());
        const TrigPolynomial combo = a * p + q;
        for (int k = -12; k <= 12; ++k)
            CHECK(combo.coefficient(k) == a * p.coefficient(k) + q.coefficient(k));
    }
}

TEST_CASE("Parseval against grid quadrature") {
    SplitMix64 rng(31337);
    for (int rep = 0; rep < 20; ++rep) {
        const TrigPolynomial p = random_poly(rng, 20, true);
        double coefficient_energy = 0.0;
        for (const auto& [k, c] : p.coeffs()) coefficient_energy += std::norm(c);
        const double expected = kTwoPi * coefficient_energy;
        const std::size_t grid = 2 * nyquist_size(p.degree());
        const double quadrature = norm_ls(synthesize(p, grid), 2.0);
        CHECK(quadrature * quadrature ==
              doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("text serialization is sorted and reproducible") {
    const TrigPolynomial p = TrigPolynomial::from_coeffs({{2, Complex(0.25, -1)}, {-1, 0.5}});
    const std::string text = p.to_text();
    CHECK(text == "-1 0.5 0\n2 0.25 -1\n");
}
