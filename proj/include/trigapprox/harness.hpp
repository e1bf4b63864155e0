// Parameter sweeps over (n, s) cells and the bound checker behind the CLI.
//
// Every fully explicit inequality behind the order estimates is evaluated as
// a BoundReport row; the class-level suprema are not computable, so the sweep
// reports witness maxima (labeled as such) instead.  Failures are data: a
// violated inequality produces a failing row and a nonzero exit status from
// the CLI, never an exception.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigapprox/approx.hpp"
#include "trigapprox/derivative.hpp"
#include "trigapprox/extremal.hpp"
#include "trigapprox/grid.hpp"
#include "trigapprox/psi.hpp"
#include "trigapprox/random.hpp"

namespace trigapprox {

struct SweepConfig {
    std::string psi_spec = "power:1";
    double beta = 0.0;
    std::vector<double> s_values = {1.0, 1.5, 2.0, 4.0};
    std::vector<int> n_values = {1, 2, 4, 8};
    int grid_oversample = kDefaultOversample;
    double tol = 1e-9;
    int max_iter = 500;
    std::uint64_t seed = 1;
    int seed_count = 8;           // random class members per (n, s) cell
    std::string method = "auto";  // m-term estimator for s != 2: auto | greedy | exhaustive
    std::string out_path;         // optional; the CLI --out flag overrides it

    void validate() const {
        if (s_values.empty() || n_values.empty())
            throw std::invalid_argument("config: s_values and n_values must be nonempty");
        for (double s : s_values)
            if (!(s >= 1.0) || !std::isfinite(s))
                throw std::invalid_argument("config: s values must be finite and >= 1");
        for (int n : n_values)
            if (n < 1) throw std::invalid_argument("config: n values must be >= 1");
        if (grid_oversample < 1) throw std::invalid_argument("config: grid_oversample must be >= 1");
        if (!(tol > 0.0)) throw std::invalid_argument("config: tol must be positive");
        if (max_iter < 1) throw std::invalid_argument("config: max_iter must be >= 1");
        if (seed_count < 0) throw std::invalid_argument("config: seed_count must be >= 0");
        if (method != "auto" && method != "greedy" && method != "exhaustive")
            throw std::invalid_argument("config: method must be auto, greedy or exhaustive");
        PsiSequence::parse(psi_spec);  // reject bad specs early
    }
};

struct BoundReport {
    std::string inequality;
    int n = 0;
    double s = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SweepRow {
    int n = 0;
    double s = 0.0;
    double psi_n = 0.0;
    double rho_f1 = 0.0;
    double e_f1_value = 0.0;
    double e_f1_cert = 0.0;
    double e_f1_gap = 0.0;       // grid-refinement sensitivity of the IRLS value (0 for s=2)
    bool e_f1_converged = true;  // solver non-convergence is data, not an error
    double cert_floor = 0.0;     // psi(n)/2, the explicit lower bound
    double rho_f2 = 0.0;
    double eperp_2n_f2 = 0.0;
    std::string eperp_method;
    double f2_lower = 0.0;
    double ratio_rho_f1 = 0.0;   // columns scaled by psi(n)
    double ratio_e_f1 = 0.0;
    double ratio_eperp_f2 = 0.0;
    double witness_max_rho_ratio = 0.0;  // lower estimate of the class supremum
    double prop1_ratio_max = 0.0;        // empirical constant of the partial-sum bound
};

namespace detail {

inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Comma lists; integer lists also accept "a..b" spans.
inline std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const int lo = std::stoi(item.substr(0, dots));
            const int hi = std::stoi(item.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("config: empty range " + item);
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(std::stoi(item));
        }
    }
    return out;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline std::size_t sweep_grid(int degree, int oversample) {
    return next_pow2(static_cast<std::size_t>(oversample) * nyquist_size(degree));
}

}  // namespace detail

// Flat key = value text; '#' starts a comment.  Keys mirror SweepConfig:
// psi, beta, s_values, n_values, grid_oversample, tol, max_iter, seed,
// seed_count, out.
inline SweepConfig parse_config_text(const std::string& text) {
    SweepConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key == "psi") cfg.psi_spec = value;
        else if (key == "beta") cfg.beta = std::stod(value);
        else if (key == "s_values") cfg.s_values = detail::parse_double_list(value);
        else if (key == "n_values") cfg.n_values = detail::parse_int_list(value);
        else if (key == "grid_oversample") cfg.grid_oversample = std::stoi(value);
        else if (key == "tol") cfg.tol = std::stod(value);
        else if (key == "max_iter") cfg.max_iter = std::stoi(value);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
        else if (key == "seed_count") cfg.seed_count = std::stoi(value);
        else if (key == "method") cfg.method = value;
        else if (key == "out") cfg.out_path = value;
        else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
    cfg.validate();
    return cfg;
}

inline SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

namespace detail {

// Upper estimate of e⊥_m(f2)_s for s != 2.  The default pairs the greedy
// value with the feasible window gamma = {-n+1..n-1}, whose residual is
// exactly rho_n; `exhaustive` searches every retained support subset instead
// (only possible while the support is small).
inline std::pair<double, const char*> eperp_upper_estimate(const TrigPolynomial& f, int m,
                                                           double s, std::size_t n_samples,
                                                           double window_value,
                                                           const std::string& method) {
    if (method == "exhaustive") {
        const double value =
            best_orthogonal(f, m, s, OrthogonalMethod::Exhaustive, n_samples).value;
        return {value, "exhaustive"};
    }
    const double greedy = best_orthogonal(f, m, s, OrthogonalMethod::Greedy, n_samples).value;
    return {std::min(greedy, window_value), "greedy+window"};
}

struct WitnessCache {
    std::vector<TrigPolynomial> members;
    std::vector<TrigPolynomial> member_derivatives;
};

inline WitnessCache make_witnesses(const DerivativeParams& params, int n, const SweepConfig& cfg) {
    WitnessCache cache;
    SplitMix64 mixer(cfg.seed);
    for (int i = 0; i < cfg.seed_count; ++i) {
        const std::uint64_t member_seed =
            mixer.fork(static_cast<std::uint64_t>(n) * 1315423911ULL + static_cast<std::uint64_t>(i));
        TrigPolynomial f = random_class_member(params, 2 * n, member_seed);
        cache.member_derivatives.push_back(psi_beta_derivative(f, params));
        cache.members.push_back(std::move(f));
    }
    return cache;
}

}  // namespace detail

inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const PsiSequence psi = PsiSequence::parse(cfg.psi_spec);
    const DerivativeParams params{psi, cfg.beta};
    const auto n_values = detail::sorted_unique(cfg.n_values);
    const auto s_values = detail::sorted_unique(cfg.s_values);

    SolverOptions opts;
    opts.tol = cfg.tol;
    opts.max_iter = cfg.max_iter;
    opts.grid_oversample = cfg.grid_oversample;

    SolverOptions witness_opts = opts;
    witness_opts.report_discretization_gap = false;

    std::vector<SweepRow> rows;
    rows.reserve(n_values.size() * s_values.size());
    for (int n : n_values) {
        const double psi_n = psi.eval(n);
        const TrigPolynomial witness1 = f1(psi, n);
        const TrigPolynomial witness2 = f2(psi, n);
        const std::size_t grid1 = detail::sweep_grid(n, cfg.grid_oversample);
        const std::size_t grid2 = detail::sweep_grid(2 * n - 1, cfg.grid_oversample);
        const detail::WitnessCache witnesses = detail::make_witnesses(params, n, cfg);
        const std::size_t grid_w = detail::sweep_grid(2 * n, cfg.grid_oversample);

        for (double s : s_values) {
            SweepRow row;
            row.n = n;
            row.s = s;
            row.psi_n = psi_n;
            row.cert_floor = psi_n / 2.0;
            row.rho_f1 = deviation_norm(witness1, n, s, grid1);
            const ApproxResult e1 = best_approx(witness1, n, s, opts);
            row.e_f1_value = e1.value;
            row.e_f1_cert = e1.certificate.value_or(0.0);
            row.e_f1_gap = e1.discretization_gap.value_or(0.0);
            row.e_f1_converged = e1.converged;
            row.rho_f2 = deviation_norm(witness2, n, s, grid2);
            if (s == 2.0) {
                row.eperp_2n_f2 =
                    best_orthogonal(witness2, 2 * n, 2.0, OrthogonalMethod::ExactL2, grid2).value;
                row.eperp_method = "exact_l2";
            } else {
                const auto [value, label] = detail::eperp_upper_estimate(
                    witness2, 2 * n, s, grid2, row.rho_f2, cfg.method);
                row.eperp_2n_f2 = value;
                row.eperp_method = label;
            }
            row.f2_lower = f2_lower_bound(psi, n, s);
            row.ratio_rho_f1 = row.rho_f1 / psi_n;
            row.ratio_e_f1 = row.e_f1_value / psi_n;
            row.ratio_eperp_f2 = row.eperp_2n_f2 / psi_n;

            double witness_max = 0.0;
            double prop1_max = 0.0;
            for (int i = 0; i < cfg.seed_count; ++i) {
                const double rho = deviation_norm(witnesses.members[static_cast<std::size_t>(i)],
                                                  n, s, grid_w);
                witness_max = std::max(witness_max, rho / psi_n);
                const double e_der =
                    best_approx(witnesses.member_derivatives[static_cast<std::size_t>(i)], n, s,
                                witness_opts)
                        .value;
                const double denom = psi_n * e_der;
                prop1_max = std::max(prop1_max, denom > 0.0 ? rho / denom
                                                 : (rho > 0.0 ? std::numeric_limits<double>::infinity()
                                                              : 0.0));
            }
            row.witness_max_rho_ratio = witness_max;
            row.prop1_ratio_max = prop1_max;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::vector<BoundReport> check_bounds(const SweepConfig& cfg) {
    cfg.validate();
    const PsiSequence psi = PsiSequence::parse(cfg.psi_spec);
    const DerivativeParams params{psi, cfg.beta};
    const auto n_values = detail::sorted_unique(cfg.n_values);
    const auto s_values = detail::sorted_unique(cfg.s_values);

    SolverOptions opts;
    opts.tol = cfg.tol;
    opts.max_iter = cfg.max_iter;
    opts.grid_oversample = cfg.grid_oversample;
    opts.report_discretization_gap = false;

    const auto emit = [](std::vector<BoundReport>& out, std::string id, int n, double s,
                         double lhs, double rhs, double tol) {
        BoundReport r;
        r.inequality = std::move(id);
        r.n = n;
        r.s = s;
        r.lhs = lhs;
        r.rhs = rhs;
        r.ratio = lhs / rhs;
        r.tolerance = tol;
        r.pass = lhs <= rhs * (1.0 + tol);
        out.push_back(std::move(r));
    };

    std::vector<BoundReport> reports;
    for (int n : n_values) {
        const double psi_n = psi.eval(n);
        const TrigPolynomial witness1 = f1(psi, n);
        const TrigPolynomial witness2 = f2(psi, n);
        const std::size_t grid2 = detail::sweep_grid(2 * n - 1, cfg.grid_oversample);

        const double xi_sup =
            flat_sum_grid_sup(rudin_shapiro(2 * n - 1).signs, cfg.grid_oversample);
        const double member_sup =
            norm_linf(synthesize(psi_beta_derivative(witness2, params), grid2));
        const double lower = f2_lower_bound(psi, n, 2.0);
        const double eperp_2n_l2 =
            best_orthogonal(witness2, 2 * n, 2.0, OrthogonalMethod::ExactL2, grid2).value;
        const double eperp_2n1_l2 =
            best_orthogonal(witness2, 2 * n - 1, 2.0, OrthogonalMethod::ExactL2, grid2).value;

        for (double s : s_values) {
            const double rho2 = deviation_norm(witness2, n, s, grid2);
            double eperp_2n = 0.0, eperp_2n1 = 0.0;
            if (s == 2.0) {
                eperp_2n = eperp_2n_l2;
                eperp_2n1 = eperp_2n1_l2;
            } else {
                eperp_2n =
                    detail::eperp_upper_estimate(witness2, 2 * n, s, grid2, rho2, cfg.method)
                        .first;
                eperp_2n1 =
                    detail::eperp_upper_estimate(witness2, 2 * n - 1, s, grid2, rho2, cfg.method)
                        .first;
            }
            const ApproxResult e1 = best_approx(witness1, n, s, opts);

            emit(reports, "chain-stst-1", n, s, eperp_2n, eperp_2n1, 1e-9);
            emit(reports, "chain-stst-2", n, s, eperp_2n1, rho2, 1e-9);
            emit(reports, "eq-q5", n, s, psi_n / 2.0, e1.certificate.value_or(0.0), 1e-12);
            emit(reports, "thm1-lower", n, s, psi_n / 2.0, e1.value, 1e-12);
            emit(reports, "prop3", n, s, xi_sup, 5.0 * std::sqrt(2.0 * n), 0.0);
            emit(reports, "f2-member", n, s, member_sup, 1.0, 1e-9);
            if (s == 2.0) emit(reports, "thm2-lower-s2", n, s, lower, eperp_2n_l2, 1e-12);
        }
    }
    return reports;
}

inline bool all_pass(const std::vector<BoundReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const BoundReport& r) { return r.pass; });
}

// CSV emission.  First line pins the schema version, then a header row, then
// data rows already ordered by (n, s) by construction.
inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "schema=1\n";
    out +=
        "n,s,psi_n,rho_f1,E_f1_value,E_f1_cert,E_f1_gap,E_f1_converged,cert_floor,rho_f2,"
        "eperp_2n_f2,eperp_method,f2_lower,ratio_rho_f1,ratio_E_f1,ratio_eperp_f2,"
        "witness_max_rho_ratio,prop1_ratio_max\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + detail::fmt_g17(r.s) + ',' + detail::fmt_g17(r.psi_n) +
               ',' + detail::fmt_g17(r.rho_f1) + ',' + detail::fmt_g17(r.e_f1_value) + ',' +
               detail::fmt_g17(r.e_f1_cert) + ',' + detail::fmt_g17(r.e_f1_gap) + ',' +
               (r.e_f1_converged ? "1" : "0") + ',' + detail::fmt_g17(r.cert_floor) + ',' +
               detail::fmt_g17(r.rho_f2) + ',' + detail::fmt_g17(r.eperp_2n_f2) + ',' +
               r.eperp_method + ',' + detail::fmt_g17(r.f2_lower) + ',' +
               detail::fmt_g17(r.ratio_rho_f1) + ',' + detail::fmt_g17(r.ratio_e_f1) + ',' +
               detail::fmt_g17(r.ratio_eperp_f2) + ',' +
               detail::fmt_g17(r.witness_max_rho_ratio) + ',' +
               detail::fmt_g17(r.prop1_ratio_max) + '\n';
    }
    return out;
}

inline std::string bounds_csv(const std::vector<BoundReport>& reports) {
    std::string out = "schema=1\n";
    out += "inequality,n,s,lhs,rhs,ratio,tolerance,pass\n";
    for (const auto& r : reports) {
        out += r.inequality + ',' + std::to_string(r.n) + ',' + detail::fmt_g17(r.s) + ',' +
               detail::fmt_g17(r.lhs) + ',' + detail::fmt_g17(r.rhs) + ',' +
               detail::fmt_g17(r.ratio) + ',' + detail::fmt_g17(r.tolerance) + ',' +
               (r.pass ? "1" : "0") + '\n';
    }
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace trigapprox
