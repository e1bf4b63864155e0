#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "trigapprox/psi.hpp"

using namespace trigapprox;

TEST_CASE("eval rules and the psi(0) = psi(1) convention") {
    const PsiSequence pw = PsiSequence::power(1.0);
    CHECK(pw.eval(4) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(pw.eval(0) == pw.eval(1));
    CHECK(pw.eval(1) == 1.0);

    const PsiSequence lg = PsiSequence::log(1.0);
    CHECK(lg.eval(1) == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-15));
    CHECK(lg.eval(0) == lg.eval(1));

    const PsiSequence tab = PsiSequence::table({3.0, 2.0, 1.0});
    CHECK(tab.eval(0) == 3.0);
    CHECK(tab.eval(2) == 2.0);
    CHECK_THROWS_AS(tab.eval(4), std::out_of_range);
    CHECK_THROWS_AS(pw.eval(-1), std::invalid_argument);

    // psi = 1 is allowed (unit multiplier); negative exponents are not
    CHECK(PsiSequence::power(0.0).eval(17) == 1.0);
    CHECK_THROWS_AS(PsiSequence::power(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(PsiSequence::log(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PsiSequence::table({1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("family strings parse back") {
    CHECK(PsiSequence::parse("power:2").eval(2) == doctest::Approx(0.25));
    CHECK(PsiSequence::parse("log:0.5").eval(1) ==
          doctest::Approx(1.0 / std::sqrt(std::log(2.0))));
    CHECK_THROWS(PsiSequence::parse("weird:1"));
    CHECK_THROWS(PsiSequence::parse("power"));
}

TEST_CASE("table files load with 1-based indexing") {
    const std::string path = "psi_table_test.txt";
    {
        std::ofstream out(path);
        out << "0.9\n0.5\n0.25\n";
    }
    const PsiSequence tab = PsiSequence::parse("table:" + path);
    CHECK(tab.eval(1) == 0.9);
    CHECK(tab.eval(0) == 0.9);  // synthesized from line 1
    CHECK(tab.eval(3) == 0.25);
    CHECK(tab.table_size() == 3);
    CHECK_THROWS(PsiSequence::parse("table:no_such_file_anywhere.txt"));
    std::remove(path.c_str());
}

TEST_CASE("almost decreasing constant") {
    const ClassReport monotone = verify_almost_decreasing(PsiSequence::power(1.0), 1000);
    CHECK(monotone.empirical_constant == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(monotone.passes);

    const ClassReport log_half = verify_almost_decreasing(PsiSequence::log(0.5), 1000);
    CHECK(log_half.empirical_constant == doctest::Approx(1.0).epsilon(1e-15));

    std::vector<double> bump{1.0, 2.0};
    bump.resize(64, 1.0);
    const ClassReport bumped = verify_almost_decreasing(PsiSequence::table(bump), 64);
    CHECK(bumped.empirical_constant == doctest::Approx(2.0));
    CHECK(bumped.witness_index == 2);
    CHECK(bumped.passes);

    CHECK_THROWS_AS(verify_almost_decreasing(PsiSequence::power(1.0), 1),
                    std::invalid_argument);
}

namespace {

// straight double-loop oracle for the dyadic block variation
double dyadic_oracle(const PsiSequence& psi, long n, int m_max) {
    const auto truncated = [&](long k) { return k < n ? 0.0 : psi.eval(k); };
    double worst = 0.0;
    for (int m = 0; m <= m_max; ++m) {
        double block = 0.0;
        for (long k = 1L << m; k <= (2L << m); ++k)
            block += std::abs(truncated(k + 1) - truncated(k));
        worst = std::max(worst, block / psi.eval(n));
    }
    return worst;
}

}  // namespace

TEST_CASE("dyadic variation of the truncated sequence") {
    const PsiSequence pw = PsiSequence::power(1.0);

    const ClassReport base = verify_dyadic_variation(pw, 1, 10);
    CHECK(base.empirical_constant == doctest::Approx(dyadic_oracle(pw, 1, 10)).epsilon(1e-14));
    CHECK(base.empirical_constant <= 1.0 + 1e-12);  // telescoping bound for monotone psi

    // truncation above the checked range kills every block
    const ClassReport vanished = verify_dyadic_variation(pw, (2L << 10) + 2, 10);
    CHECK(vanished.empirical_constant == 0.0);

    // the jump of psi_n at k = n contributes once
    const ClassReport jump = verify_dyadic_variation(pw, 16, 10);
    CHECK(jump.empirical_constant == doctest::Approx(dyadic_oracle(pw, 16, 10)).epsilon(1e-14));
    CHECK(jump.witness_index == 3);  // block 8..16 sees the jump to psi(16)
    CHECK(jump.passes);

    // per-block telescoping for monotone psi: block sum <= psi(2^m) + jump
    for (int m = 0; m <= 8; ++m) {
        double block = 0.0;
        for (long k = 1L << m; k <= (2L << m); ++k)
            block += std::abs(pw.eval(k + 1) - pw.eval(k));
        CHECK(block <= pw.eval(1L << m) + 1e-15);
    }

    CHECK_THROWS_AS(verify_dyadic_variation(PsiSequence::table({1.0, 1.0}), 1, 4),
                    std::invalid_argument);
}

TEST_CASE("doubling-ratio constant for class B") {
    for (double r : {0.5, 1.0, 2.0}) {
        const ClassReport rep = verify_B(PsiSequence::power(r), 4096);
        CHECK(rep.empirical_constant == doctest::Approx(std::pow(2.0, r)).epsilon(1e-12));
        CHECK(rep.passes);
    }

    const PsiSequence lg = PsiSequence::log(1.0);
    const ClassReport rep = verify_B(lg, 10000);
    const double expected = std::log(3.0) / std::log(2.0);  // attained at k = 1
    CHECK(rep.empirical_constant == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rep.witness_index == 1);
    double scan = 0.0;
    for (long k = 1; k <= 10000; ++k) scan = std::max(scan, lg.eval(k) / lg.eval(2 * k));
    CHECK(rep.empirical_constant == doctest::Approx(scan).epsilon(1e-15));

    // geometric decay is not in B: constant 2^{k_max} blows past any fixed cap
    std::vector<double> geometric;
    for (int k = 1; k <= 2 * 8 + 2; ++k) geometric.push_back(std::pow(2.0, -k));
    const ClassReport geo = verify_B(PsiSequence::table(geometric), 8);
    CHECK(geo.empirical_constant == doctest::Approx(256.0).epsilon(1e-12));
    CHECK_FALSE(geo.passes);
    CHECK(geo.witness_index == 8);

    CHECK_THROWS_AS(verify_B(PsiSequence::table({1.0, 1.0, 1.0}), 4), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
    const PsiSequence lg = PsiSequence::log(1.0);
    const ClassReport a = verify_B(lg, 2000);
    const ClassReport b = verify_B(lg, 2000);
    CHECK(a.empirical_constant == b.empirical_constant);
    CHECK(a.witness_index == b.witness_index);
    CHECK(a.k_max == b.k_max);
}
