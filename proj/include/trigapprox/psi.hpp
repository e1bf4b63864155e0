// Weight sequences ψ(k) and finite-range verification of the sequence
// classes the two-sided order estimates assume.
//
// The classes are asymptotic, so membership can only be checked empirically
// on a finite index range; every report records the range it covered and the
// library never claims more than that.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigapprox {

// Evaluation rule for ψ(k), k >= 0, with the convention ψ(0) := ψ(1).
// Families: power  ψ(k) = k^{-r}
//           log    ψ(k) = ln^{-ε}(k+1)
//           table  explicit positive values, 1-based index
class PsiSequence {
public:
    enum class Family { Power, Log, Table };

    static PsiSequence power(double r) {
        if (!(r >= 0.0) || !std::isfinite(r))
            throw std::invalid_argument("PsiSequence::power: exponent must be finite and >= 0");
        PsiSequence psi;
        psi.family_ = Family::Power;
        psi.param_ = r;
        return psi;
    }

    static PsiSequence log(double eps) {
        if (!(eps > 0.0) || !std::isfinite(eps))
            throw std::invalid_argument("PsiSequence::log: exponent must be positive");
        PsiSequence psi;
        psi.family_ = Family::Log;
        psi.param_ = eps;
        return psi;
    }

    // values[0] is ψ(1); ψ(0) is synthesized as ψ(1).
    static PsiSequence table(std::vector<double> values) {
        if (values.empty()) throw std::invalid_argument("PsiSequence::table: empty table");
        for (double v : values)
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument("PsiSequence::table: entries must be positive and finite");
        PsiSequence psi;
        psi.family_ = Family::Table;
        psi.table_ = std::move(values);
        return psi;
    }

    double eval(long k) const {
        if (k < 0) throw std::invalid_argument("PsiSequence::eval: negative index");
        if (k == 0) k = 1;
        switch (family_) {
            case Family::Power:
                return std::pow(static_cast<double>(k), -param_);
            case Family::Log:
                return std::pow(std::log(static_cast<double>(k) + 1.0), -param_);
            case Family::Table:
                if (static_cast<std::size_t>(k) > table_.size())
                    throw std::out_of_range("PsiSequence::eval: index beyond table range");
                return table_[static_cast<std::size_t>(k - 1)];
        }
        throw std::logic_error("PsiSequence::eval: bad family");
    }

    double operator()(long k) const { return eval(k); }

    Family family() const { return family_; }
    std::size_t table_size() const { return table_.size(); }

    // Harness spelling: "power:r", "log:eps", "table:<path>" (one positive
    // real per line, 1-based index).
    static PsiSequence parse(const std::string& spec) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("psi spec must look like power:r, log:eps or table:path");
        const std::string head = spec.substr(0, colon);
        const std::string tail = spec.substr(colon + 1);
        if (head == "power") return power(std::stod(tail));
        if (head == "log") return log(std::stod(tail));
        if (head == "table") {
            std::ifstream in(tail);
            if (!in) throw std::runtime_error("psi table file not readable: " + tail);
            std::vector<double> values;
            double v = 0.0;
            while (in >> v) values.push_back(v);
            return table(std::move(values));
        }
        throw std::invalid_argument("unknown psi family: " + head);
    }

    std::string spec_string() const {
        char buf[64];
        switch (family_) {
            case Family::Power:
                std::snprintf(buf, sizeof buf, "power:%.17g", param_);
                return buf;
            case Family::Log:
                std::snprintf(buf, sizeof buf, "log:%.17g", param_);
                return buf;
            case Family::Table:
                std::snprintf(buf, sizeof buf, "table:%zu", table_.size());
                return buf;
        }
        return "?";
    }

private:
    Family family_ = Family::Power;
    double param_ = 1.0;
    std::vector<double> table_;
};

inline constexpr double kDefaultClassCap = 64.0;

// Outcome of one finite-range class check.
struct ClassReport {
    enum class SequenceClass { P, B };
    SequenceClass class_name;
    long k_max;                 // largest index examined
    double empirical_constant;  // smallest constant valid on the range
    long witness_index;         // index (or dyadic block) attaining it
    double cap;                 // pass threshold the caller configured
    bool passes;
};

// Almost-decreasing constant: max over k1 <= k2 <= k_max of ψ(k2)/ψ(k1),
// computed with a running minimum.
inline ClassReport verify_almost_decreasing(const PsiSequence& psi, long k_max,
                                            double cap = kDefaultClassCap) {
    if (k_max < 2) throw std::invalid_argument("verify_almost_decreasing: k_max must be >= 2");
    double running_min = psi.eval(1);
    double worst = 1.0;
    long witness = 1;
    for (long k = 1; k <= k_max; ++k) {
        const double v = psi.eval(k);
        const double ratio = v / running_min;
        if (ratio > worst) {
            worst = ratio;
            witness = k;
        }
        running_min = std::min(running_min, v);
    }
    return {ClassReport::SequenceClass::P, k_max, worst, witness, cap, worst <= cap};
}

// Dyadic variation of the truncated sequence ψ_n (zero below n):
// max over 0 <= m <= m_max of Σ_{k=2^m}^{2^{m+1}} |ψ_n(k+1) - ψ_n(k)| / ψ(n).
inline ClassReport verify_dyadic_variation(const PsiSequence& psi, long n, int m_max,
                                           double cap = kDefaultClassCap) {
    if (n < 1) throw std::invalid_argument("verify_dyadic_variation: n must be >= 1");
    if (m_max < 0) throw std::invalid_argument("verify_dyadic_variation: m_max must be >= 0");
    const long top = (2L << m_max) + 1;  // largest index touched: 2^{m_max+1}+1
    if (psi.family() == PsiSequence::Family::Table &&
        static_cast<long>(psi.table_size()) < top)
        throw std::invalid_argument("verify_dyadic_variation: table too short for requested m_max");

    const auto truncated = [&](long k) { return k < n ? 0.0 : psi.eval(k); };
    const double scale = psi.eval(n);
    double worst = 0.0;
    long witness = 0;
    for (int m = 0; m <= m_max; ++m) {
        double block = 0.0;
        for (long k = 1L << m; k <= (2L << m); ++k)
            block += std::abs(truncated(k + 1) - truncated(k));
        const double ratio = block / scale;
        if (ratio > worst) {
            worst = ratio;
            witness = m;
        }
    }
    return {ClassReport::SequenceClass::P, top, worst, witness, cap, worst <= cap};
}

// Doubling constant: max over 1 <= k <= k_max of ψ(k)/ψ(2k).
inline ClassReport verify_B(const PsiSequence& psi, long k_max, double cap = kDefaultClassCap) {
    if (k_max < 1) throw std::invalid_argument("verify_B: k_max must be >= 1");
    if (psi.family() == PsiSequence::Family::Table &&
        static_cast<long>(psi.table_size()) < 2 * k_max + 2)
        throw std::invalid_argument("verify_B: table must supply at least 2*k_max+2 values");
    double worst = 0.0;
    long witness = 1;
    for (long k = 1; k <= k_max; ++k) {
        const double ratio = psi.eval(k) / psi.eval(2 * k);
        if (ratio > worst) {
            worst = ratio;
            witness = k;
        }
    }
    return {ClassReport::SequenceClass::B, k_max, worst, witness, cap, worst <= cap};
}

}  // namespace trigapprox
