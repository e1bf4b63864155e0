// Small walkthrough: build the two witness functions for psi(k) = 1/k,
// compute the approximation quantities at a few n, and print the ratios to
// psi(n) that the two-sided order estimates say must stay bounded.

#include <cstdio>

#include "trigapprox/trigapprox.hpp"

int main() {
    using namespace trigapprox;

    const PsiSequence psi = PsiSequence::power(1.0);
    std::printf("%4s %12s %12s %12s %12s\n", "n", "E_n(f1)_2", "E/psi", "eperp_2n(f2)_2",
                "eperp/psi");
    for (int n : {4, 8, 16, 32, 64}) {
        const TrigPolynomial w1 = f1(psi, n);
        const TrigPolynomial w2 = f2(psi, n);
        const std::size_t grid = detail::next_pow2(
            static_cast<std::size_t>(kDefaultOversample) * nyquist_size(w2.degree()));
        const double e_n = best_approx(w1, n, 2.0).value;
        const double eperp = best_orthogonal(w2, 2 * n, 2.0, OrthogonalMethod::ExactL2, grid).value;
        const double psi_n = psi.eval(n);
        std::printf("%4d %12.6f %12.6f %12.6f %12.6f\n", n, e_n, e_n / psi_n, eperp,
                    eperp / psi_n);
    }

    const double sup = flat_sum_grid_sup(rudin_shapiro(255).signs);
    std::printf("\nRudin-Shapiro m=255: grid sup %.4f vs bound %.4f\n", sup, 5.0 * 16.0);
    return 0;
}
