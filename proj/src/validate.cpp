#include "pppcov/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <vector>

#include "pppcov/analytic.hpp"
#include "pppcov/errors.hpp"
#include "pppcov/montecarlo.hpp"
#include "pppcov/quadrature.hpp"
#include "pppcov/rng.hpp"
#include "pppcov/scenario.hpp"
#include "pppcov/specfun.hpp"
#include "pppcov/stats.hpp"

namespace pppcov {

namespace {

using stats::erlang_survival;
using stats::ks_critical;
using stats::ks_statistic;
using stats::mean_var;

constexpr double PI = 3.14159265358979323846;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double rel_err(Cplx got, Cplx want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

CheckResult check_log_identity() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double z = -4.0 + 4.75 * i / 49.0;
        if (std::abs(z) < 1e-12) continue;
        Hyp2F1Params p;
        p.a = 1.0;
        p.b = 1.0;
        p.c = 2.0;
        p.z = z;
        const double want = -std::log1p(-z) / z;
        worst = std::max(worst, rel_err(hyp2f1(p), want));
    }
    return {"hyp2f1 log identity", worst < 1e-9, "max rel err " + fmt(worst)};
}

CheckResult check_arctan_identity() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double t = 0.05 + (10.0 - 0.05) * i / 49.0;
        Hyp2F1Params p;
        p.a = 1.0;
        p.b = -0.5;
        p.c = 0.5;
        p.z = -t * t;
        const double want = 1.0 + t * std::atan(t);
        worst = std::max(worst, rel_err(hyp2f1(p), want));
    }
    return {"hyp2f1 arctan identity", worst < 1e-9, "max rel err " + fmt(worst)};
}

CheckResult check_series_pfaff_overlap(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mod(0.5, 0.8);
    // left half-plane keeps |z/(z-1)| < 1, matching the transform's argument rays
    std::uniform_real_distribution<double> arg(0.5 * PI, 1.5 * PI);
    const int ks[] = {1, 2, 4, 8};
    const double alphas[] = {3.0, 4.0, 5.0};
    double worst = 0.0;
    for (int k : ks) {
        for (double a : alphas) {
            for (int rep = 0; rep < 6; ++rep) {
                Hyp2F1Params p;
                p.a = k;
                p.b = -2.0 / a;
                p.c = 1.0 + p.b;
                p.z = std::polar(mod(rng), arg(rng));
                worst = std::max(worst, rel_err(hyp2f1_series(p), hyp2f1_pfaff(p)));
            }
        }
    }
    return {"hyp2f1 series/Pfaff overlap", worst < 1e-9, "max rel err " + fmt(worst)};
}

CheckResult check_interference_oracle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> logmag(-3.0, 3.0);
    const int ks[] = {1, 2, 4, 8};
    const double alphas[] = {3.0, 4.0, 5.0};
    const double r0s[] = {0.3, 1.0, 2.5};
    double worst = 0.0;
    std::string worst_case;
    for (int k : ks) {
        for (double a : alphas) {
            for (double r0 : r0s) {
                for (int rep = 0; rep < 2; ++rep) {
                    const double mag = std::pow(10.0, logmag(rng));
                    const Cplx s = rep == 0 ? Cplx{mag, 0.0} : Cplx{0.0, mag};
                    const Cplx got =
                        laplace_interference_exponent(s, r0, k, a, 4.0);
                    const Cplx want =
                        laplace_interference_quadrature_oracle_exponent(s, r0, k, a, 4.0);
                    // exponent agreement implies transform agreement wherever the
                    // transform is representable; the transform itself underflows
                    // once Re(exponent) passes ~700
                    double e = std::abs(got - want) / std::max(std::abs(want), 1e-10);
                    if (want.real() < 500.0)
                        e = std::max(e, rel_err(std::exp(-got), std::exp(-want)));
                    if (e > worst) {
                        worst = e;
                        std::ostringstream os;
                        os << "K=" << k << " alpha=" << a << " r0=" << r0 << " |s|=" << fmt(mag);
                        worst_case = os.str();
                    }
                }
            }
        }
    }
    return {"interference transform vs quadrature oracle", worst < 1e-8,
            "max rel err " + fmt(worst) + " at " + worst_case};
}

CheckResult check_interference_closed_form() {
    double worst = 0.0;
    for (double s : {0.05, 0.3, 1.0, 4.0, 30.0, 400.0}) {
        const Cplx got = laplace_interference(Cplx{s, 0.0}, 1.0, 1, 4.0, 1.0);
        const double rs = std::sqrt(s);
        const double want = std::exp(-PI * rs * std::atan(rs));
        worst = std::max(worst, rel_err(got, want));
    }
    return {"interference transform closed form (K=1, alpha=4)", worst < 1e-9,
            "max rel err " + fmt(worst)};
}

CheckResult check_transform_axis_properties() {
    bool ok = true;
    std::string detail = "all held";
    double prev_i = 2.0, prev_d = 2.0;
    for (int i = 0; i < 40; ++i) {
        const double s = std::pow(10.0, -2.0 + 4.0 * i / 39.0);
        const Cplx on_axis = laplace_interference(Cplx{0.0, s}, 0.7, 4, 4.0, 4.0);
        if (std::abs(on_axis) > 1.0 + 1e-12) {
            ok = false;
            detail = "|L_I(is)| = " + fmt(std::abs(on_axis)) + " at s = " + fmt(s);
            break;
        }
        const Cplx real_i = laplace_interference(Cplx{s, 0.0}, 0.7, 4, 4.0, 4.0);
        const Cplx real_d = laplace_desired(Cplx{s, 0.0}, 5);
        if (std::abs(real_i.imag()) > 1e-14 || real_i.real() <= 0.0 ||
            real_i.real() >= prev_i || std::abs(real_d.imag()) > 1e-14 ||
            real_d.real() <= 0.0 || real_d.real() >= prev_d) {
            ok = false;
            detail = "real-axis monotonicity broke at s = " + fmt(s);
            break;
        }
        prev_i = real_i.real();
        prev_d = real_d.real();

        const Cplx up = laplace_interference(Cplx{0.3, s}, 0.7, 4, 4.0, 4.0);
        const Cplx dn = laplace_interference(Cplx{0.3, -s}, 0.7, 4, 4.0, 4.0);
        if (std::abs(up - std::conj(dn)) > 1e-12 * std::max(1.0, std::abs(up))) {
            ok = false;
            detail = "conjugate symmetry broke at s = " + fmt(s);
            break;
        }
    }
    return {"transform axis properties", ok, detail};
}

CheckResult check_desired_transform() {
    bool ok = true;
    std::string detail = "values and pole behave";
    if (std::abs(laplace_desired(Cplx{0.0, 0.0}, 3) - 1.0) != 0.0) ok = false;
    if (std::abs(laplace_desired(Cplx{1.0, 0.0}, 1) - 0.5) > 1e-15) ok = false;
    if (std::abs(laplace_desired(Cplx{1.0, 0.0}, 2) - 0.25) > 1e-15) ok = false;
    bool threw = false;
    try {
        laplace_desired(Cplx{-1.0, 0.0}, 2);
    } catch (const PoleAtMinusOne&) {
        threw = true;
    }
    if (!threw) {
        ok = false;
        detail = "pole at s = -1 not reported";
    }
    return {"desired-signal transform", ok, detail};
}

CheckResult check_association_pdf() {
    const double lambda = 1.0 / PI;
    const double at_one = association_distance_pdf(1.0, lambda);
    const double want = 2.0 * std::exp(-1.0);
    bool ok = rel_err(at_one, want) < 1e-12;

    const double lam = 4.0;
    const double upper = std::sqrt(35.0 / (PI * lam));
    auto r = quad::adaptive_gk15_real(
        [&](double x) { return association_distance_pdf(x, lam); }, 0.0, upper, 1e-12, 1e-12,
        2000);
    const double mass = 1.0 - std::exp(-35.0);
    const double norm_err = std::abs(r.value - mass);
    ok = ok && r.converged && norm_err < 1e-10;
    return {"association distance pdf", ok,
            "point err " + fmt(rel_err(at_one, want)) + ", mass err " + fmt(norm_err)};
}

CheckResult check_distance_sampler(std::mt19937_64& rng) {
    const double lambda = 4.0;
    const long n = 10000;
    std::vector<double> samples(n);
    for (auto& s : samples) s = sample_association_distance(lambda, rng);
    const double ks = ks_statistic(
        samples, [&](double r) { return 1.0 - std::exp(-lambda * PI * r * r); });
    const double crit = ks_critical(0.01, n);
    return {"association distance sampler KS", ks < crit,
            "D = " + fmt(ks) + ", crit = " + fmt(crit)};
}

CheckResult check_ppp_moments(std::mt19937_64& rng) {
    const double lambda = 4.0, radius = 10.0;
    const long reps = 10000;
    std::vector<double> counts(reps);
    for (auto& c : counts)
        c = static_cast<double>(sample_ppp_disk(lambda, radius, rng).size());
    const auto [mean, var] = mean_var(counts);
    const double want = lambda * PI * radius * radius;
    const double sigma = std::sqrt(want / reps);
    const bool mean_ok = std::abs(mean - want) < 3.0 * sigma;
    const double ratio = var / want;
    const bool var_ok = ratio > 0.95 && ratio < 1.05;
    return {"ppp count moments", mean_ok && var_ok,
            "mean " + fmt(mean) + " vs " + fmt(want) + ", var/mean " + fmt(ratio)};
}

CheckResult check_zf_serving_ks(std::mt19937_64& rng) {
    const std::pair<int, int> cases[] = {{8, 8}, {8, 4}, {4, 2}};
    bool ok = true;
    std::string detail;
    for (auto [m, k] : cases) {
        Scenario sc;
        sc.m_antennas = m;
        sc.k_users = k;
        const int delta = m - k + 1;
        const long n = 10000;
        std::vector<double> s_draws(n);
        for (auto& v : s_draws) v = sample_gains_exact_zf(sc, 0, rng).s;
        const double ks =
            ks_statistic(s_draws, [&](double x) { return 1.0 - erlang_survival(x, delta); });
        const double crit = ks_critical(0.01, n);
        if (!detail.empty()) detail += "; ";
        detail += "(M=" + std::to_string(m) + ",K=" + std::to_string(k) + ") D=" + fmt(ks);
        if (ks >= crit) {
            ok = false;
            detail += " >= crit " + fmt(crit);
        }
    }
    return {"exact-ZF serving gain KS", ok, detail};
}

CheckResult check_zf_interferer_mean(std::mt19937_64& rng) {
    Scenario sc;
    sc.m_antennas = 8;
    sc.k_users = 4;
    const long batches = 50, per = 200;
    std::vector<double> gains;
    gains.reserve(batches * per);
    for (long b = 0; b < batches; ++b) {
        const GainsSample g = sample_gains_exact_zf(sc, per, rng);
        gains.insert(gains.end(), g.g.begin(), g.g.end());
    }
    const auto [mean, var] = mean_var(gains);
    const double n = static_cast<double>(gains.size());
    const double sigma = std::sqrt(var / n);
    const bool ok = std::abs(mean - sc.k_users) < 3.0 * sigma;
    // the Gamma(K,1) shape is an approximation; its KS distance is informational
    const double ks = ks_statistic(
        gains, [&](double x) { return 1.0 - erlang_survival(x, sc.k_users); });
    return {"exact-ZF interferer gain mean", ok,
            "mean " + fmt(mean) + " vs 4, KS-vs-Gamma(K,1) D = " + fmt(ks) + " (reported only)"};
}

CheckResult check_gamma_sampler_moments(std::mt19937_64& rng) {
    Scenario sc;
    sc.m_antennas = 8;
    sc.k_users = 4;
    const long n = 100000;
    std::vector<double> s_draws(n), g_draws;
    g_draws.reserve(n);
    for (long i = 0; i < n; ++i) {
        const GainsSample g = sample_gains_gamma(sc, 1, rng);
        s_draws[static_cast<std::size_t>(i)] = g.s;
        g_draws.push_back(g.g[0]);
    }
    const auto [s_mean, s_var] = mean_var(s_draws);
    const auto [g_mean, g_var] = mean_var(g_draws);
    const double nd = static_cast<double>(n);
    bool ok = std::abs(s_mean - 5.0) < 3.0 * std::sqrt(s_var / nd);
    ok = ok && std::abs(g_mean - 4.0) < 3.0 * std::sqrt(g_var / nd);
    ok = ok && std::abs(g_var - 4.0) < 3.0 * 4.0 * std::sqrt(2.0 / nd) * 1.5;
    return {"gamma gain sampler moments", ok,
            "S mean " + fmt(s_mean) + ", g mean " + fmt(g_mean) + ", g var " + fmt(g_var)};
}

NetworkParams rayleigh_params() {
    NetworkParams p;
    p.lambda_bs = 4.0;
    p.lambda_ue = 4.0;   // one antenna, one user per cell
    p.num_subbands = 1;
    p.pathloss_alpha = 4.0;
    p.sinr_threshold_db = 0.0;
    return p;
}

CheckResult check_rayleigh_closed_form() {
    CoverageOptions opts;
    opts.include_noise = false;
    const double got = coverage_probability(rayleigh_params(), opts).value;
    const double want = 1.0 / (1.0 + PI / 4.0);
    const double err = std::abs(got - want);
    return {"interference-limited Rayleigh closed form", err < 1e-4,
            "got " + fmt(got) + ", want " + fmt(want) + ", err " + fmt(err)};
}

CheckResult check_rayleigh_monte_carlo() {
    SimConfig sim;
    sim.trials = 100000;
    sim.seed = 314159;
    sim.include_noise = false;
    const SimOutcome out = simulate_coverage(rayleigh_params(), sim);
    const double want = 1.0 / (1.0 + PI / 4.0);
    const double err = std::abs(out.estimate - want);
    return {"interference-limited Rayleigh Monte Carlo", err < out.half_width,
            "estimate " + fmt(out.estimate) + " +/- " + fmt(out.half_width) + ", true " +
                fmt(want)};
}

CheckResult check_gamma_oracle_agreement() {
    const NetworkParams table1;   // defaults are the reference configuration
    const double analytic = coverage_probability(table1).value;
    const double oracle = coverage_probability_gamma_oracle(table1).value;
    const double err = std::abs(analytic - oracle);
    return {"spectral inversion vs conditional-Erlang oracle", err < 2e-3,
            "analytic " + fmt(analytic) + ", oracle " + fmt(oracle) + ", diff " + fmt(err)};
}

} // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed) {
    std::mt19937_64 rng = derive_stream(seed, 7);
    std::vector<CheckResult> out;
    out.push_back(check_log_identity());
    out.push_back(check_arctan_identity());
    out.push_back(check_series_pfaff_overlap(rng));
    out.push_back(check_interference_oracle(rng));
    out.push_back(check_interference_closed_form());
    out.push_back(check_transform_axis_properties());
    out.push_back(check_desired_transform());
    out.push_back(check_association_pdf());
    out.push_back(check_distance_sampler(rng));
    out.push_back(check_ppp_moments(rng));
    out.push_back(check_zf_serving_ks(rng));
    out.push_back(check_zf_interferer_mean(rng));
    out.push_back(check_gamma_sampler_moments(rng));
    out.push_back(check_rayleigh_closed_form());
    out.push_back(check_rayleigh_monte_carlo());
    out.push_back(check_gamma_oracle_agreement());
    return out;
}

} // namespace pppcov
