#include "pppcov/analytic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "pppcov/errors.hpp"
#include "pppcov/quadrature.hpp"
#include "pppcov/rng.hpp"
#include "pppcov/specfun.hpp"
#include "pppcov/stats.hpp"

namespace pppcov {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr double OUTER_CUT = 40.0;     // e^{-u} weight below 4.3e-18 past this
constexpr double OUTER_SKIP = 30.0;    // inner integral skipped, bound folded into error
constexpr int MAX_INNER_BLOCKS = 64;

Cplx cpow_int(Cplx w, long n) {
    Cplx r{1.0, 0.0};
    while (n > 0) {
        if (n & 1) r *= w;
        w *= w;
        n >>= 1;
    }
    return r;
}

// (L_S(-w) - 1)/w for S ~ Gamma(delta,1), w = i2pi s; series guards the
// cancellation when delta*|w| is small, limit at w=0 is E[S] = delta
Cplx psi_factor(Cplx w, int delta) {
    const double d = static_cast<double>(delta);
    if (std::abs(w) * d <= 0.1) {
        Cplx term{d, 0.0}, sum{d, 0.0};
        for (int n = 1; n < 64; ++n) {
            term *= (d + n) / (n + 1.0) * w;
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }
    return (cpow_int(1.0 / (1.0 - w), delta) - 1.0) / w;
}

struct InnerResult {
    double value = 0.0;       // J(u), already doubled for the half-line symmetry
    double error = 0.0;
    double s_end = 0.0;
    long evals = 0;
};

// memoizes phi(s) = 2F1(K, -2/a; 1-2/a; -i2pi T s) - 1, shared across outer nodes
class PhiCache {
public:
    PhiCache(int k_users, double alpha, double t_linear)
        : k_(k_users), alpha_(alpha), t_(t_linear) {}

    Cplx operator()(double s) {
        const std::uint64_t key = std::bit_cast<std::uint64_t>(s);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        Hyp2F1Params p;
        p.a = static_cast<double>(k_);
        p.b = -2.0 / alpha_;
        p.c = 1.0 + p.b;
        p.z = Cplx{0.0, -2.0 * PI * t_ * s};
        const Cplx phi = hyp2f1(p) - 1.0;
        map_.emplace(key, phi);
        return phi;
    }

private:
    int k_;
    double alpha_, t_;
    std::unordered_map<std::uint64_t, Cplx> map_;
};

InnerResult inner_integral(double u, double noise_phase_rate, PhiCache& phi, int delta,
                           double alpha) {
    InnerResult out;
    auto integrand = [&](double s) -> double {
        ++out.evals;
        if (s == 0.0) return static_cast<double>(delta);
        const Cplx ph = phi(s);
        const Cplx psi = psi_factor(Cplx{0.0, 2.0 * PI * s}, delta);
        const Cplx g = std::exp(-u * ph - Cplx{0.0, noise_phase_rate * s}) * psi;
        return g.real();
    };

    double lo = 0.0, hi = 1.0;
    int tiny_streak = 0;
    for (int block = 0; block < MAX_INNER_BLOCKS; ++block) {
        auto r = quad::adaptive_gk15_real(integrand, lo, hi, 1e-9, 5e-8, 1500);
        if (!r.converged)
            throw IntegrationFailure("coverage: spectral block quadrature stalled near s = " +
                                     std::to_string(hi));
        out.value += r.value;
        out.error += r.error;
        out.s_end = hi;

        const double scale = std::max(std::abs(out.value), 1e-2);
        tiny_streak = std::abs(r.value) < 1e-9 * scale ? tiny_streak + 1 : 0;

        // remaining tail <= (alpha/2pi) e^{-w}/w with w = u Re phi(s_end),
        // from the 1/(pi s) envelope and the power-law growth of Re phi
        const double w_end = u * phi(hi).real();
        if (w_end > 2.0) {
            const double tail = (alpha / (2.0 * PI)) * std::exp(-w_end) / w_end;
            if (tail < 1e-9 * scale) {
                out.error += tail;
                break;
            }
        }
        if (tiny_streak >= 3 && block >= 4) break;

        if (block + 1 == MAX_INNER_BLOCKS)
            throw IntegrationFailure("coverage: spectral integral did not decay by s = " +
                                     std::to_string(hi));
        lo = hi;
        hi *= 2.0;
    }
    out.value *= 2.0;
    out.error *= 2.0;
    return out;
}

} // namespace

namespace detail {

std::complex<double> coverage_integrand(double u, double s, const NetworkParams& params,
                                        const Scenario& sc, bool include_noise) {
    const int delta = sc.m_antennas - sc.k_users + 1;
    const Cplx psi = psi_factor(Cplx{0.0, 2.0 * PI * s}, delta);
    if (u <= 0.0) return psi;
    const double r0 = std::sqrt(u / (PI * params.lambda_bs));
    const double x = sc.t_linear * std::pow(r0, params.pathloss_alpha);
    Cplx li{1.0, 0.0};
    if (s != 0.0)
        li = laplace_interference(Cplx{0.0, 2.0 * PI * x * s}, r0, sc.k_users,
                                  params.pathloss_alpha, params.lambda_bs);
    Cplx noise{1.0, 0.0};
    if (include_noise)
        noise = std::exp(Cplx{0.0, -2.0 * PI * x * sc.noise_term * s});
    return li * noise * psi;
}

} // namespace detail

CoverageResult coverage_probability(const NetworkParams& params, const CoverageOptions& opts) {
    validate_params(params);
    const Scenario sc = derive_scenario(params);
    const int delta = sc.m_antennas - sc.k_users + 1;
    const double lambda = params.lambda_bs;
    const double alpha = params.pathloss_alpha;
    const double half_alpha = 0.5 * alpha;

    PhiCache phi(sc.k_users, alpha, sc.t_linear);

    CoverageResult res;
    res.outer_truncation = OUTER_CUT;
    double max_inner_error = 0.0;

    auto outer_integrand = [&](double u) -> double {
        if (u >= OUTER_SKIP) return 0.0;
        double rate = 0.0;
        if (opts.include_noise) {
            const double r0_pow = std::pow(u / (PI * lambda), half_alpha);
            rate = 2.0 * PI * sc.t_linear * r0_pow * sc.noise_term;
        }
        InnerResult j = inner_integral(u, rate, phi, delta, alpha);
        res.evaluations += j.evals;
        res.inner_truncation = std::max(res.inner_truncation, j.s_end);
        max_inner_error = std::max(max_inner_error, j.error);
        return std::exp(-u) * j.value;
    };

    const double edges[] = {0.0, 0.5, 2.0, 8.0, OUTER_CUT};
    double total = 0.0, outer_error = 0.0;
    for (int i = 0; i < 4; ++i) {
        auto r = quad::adaptive_gk15_real(outer_integrand, edges[i], edges[i + 1],
                                          0.25 * opts.abs_tol, opts.rel_tol, 500);
        if (!r.converged)
            throw IntegrationFailure("coverage: radial integral stalled on [" +
                                     std::to_string(edges[i]) + ", " +
                                     std::to_string(edges[i + 1]) + "]");
        total += r.value;
        outer_error += r.error;
    }

    res.value = total;
    res.abs_error_estimate = outer_error + max_inner_error + std::exp(-OUTER_SKIP);

    const double slack = std::max(res.abs_error_estimate, 1e-8);
    if (res.value < -slack || res.value > 1.0 + slack)
        throw IntegrationFailure("coverage: value " + std::to_string(res.value) +
                                 " outside [0,1] beyond the error estimate");
    res.value = std::clamp(res.value, 0.0, 1.0);
    return res;
}

CoverageResult coverage_probability_gamma_oracle(const NetworkParams& params,
                                                 const CoverageOptions& opts, long draws,
                                                 std::uint64_t seed) {
    validate_params(params);
    if (draws < 100) throw InvalidConfig("gamma oracle: needs at least 100 draws");
    const Scenario sc = derive_scenario(params);
    const int delta = sc.m_antennas - sc.k_users + 1;
    const double lambda = params.lambda_bs;
    const double alpha = params.pathloss_alpha;
    const double noise = opts.include_noise ? sc.noise_term : 0.0;
    const double k = static_cast<double>(sc.k_users);

    std::mt19937_64 rng = derive_stream(seed, 0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::gamma_distribution<double> gain(k, 1.0);

    CoverageResult res;
    res.outer_truncation = 0.0;
    const double n = static_cast<double>(draws);
    double sum = 0.0, sum_sq = 0.0;

    for (long j = 0; j < draws; ++j) {
        // stratified exponential draw for u = pi*lambda*r0^2
        double q = (static_cast<double>(j) + uni(rng)) / n;
        q = std::min(q, 1.0 - 1e-16);
        const double u = -std::log1p(-q);
        const double r0_sq = u / (PI * lambda);
        const double r0 = std::sqrt(r0_sq);
        res.outer_truncation = std::max(res.outer_truncation, u);

        // annulus out to R, remainder restored as its exact mean
        const double out_sq = 9.0 * r0_sq + 50.0 / (PI * lambda);
        const double out_r = std::sqrt(out_sq);
        res.inner_truncation = std::max(res.inner_truncation, out_r);
        std::poisson_distribution<int> count(lambda * PI * (out_sq - r0_sq));
        double interf = 2.0 * PI * lambda * k * std::pow(out_r, 2.0 - alpha) / (alpha - 2.0);
        const int m = count(rng);
        for (int i = 0; i < m; ++i) {
            const double v_sq = r0_sq + uni(rng) * (out_sq - r0_sq);
            interf += gain(rng) * std::pow(v_sq, -0.5 * alpha);
        }

        const double x = sc.t_linear * std::pow(r0, alpha) * (interf + noise);
        const double p = stats::erlang_survival(x, delta);
        sum += p;
        sum_sq += p * p;
    }

    res.value = sum / n;
    const double var = std::max(0.0, (sum_sq - n * res.value * res.value) / (n - 1.0));
    res.abs_error_estimate = 3.0 * std::sqrt(var / n);
    res.evaluations = draws;
    res.value = std::clamp(res.value, 0.0, 1.0);
    return res;
}

double average_rate(const NetworkParams& params, const CoverageOptions& opts, bool use_nats) {
    const CoverageResult cov = coverage_probability(params, opts);
    const Scenario sc = derive_scenario(params);
    const double gain = use_nats ? std::log(1.0 + sc.t_linear) : std::log2(1.0 + sc.t_linear);
    return gain * cov.value;
}

EnergyReport energy_report_from_coverage(const NetworkParams& params, double coverage) {
    const Scenario sc = derive_scenario(params);
    EnergyReport rep;
    rep.coverage = coverage;
    rep.avg_rate = std::log2(1.0 + sc.t_linear) * rep.coverage;
    rep.ase = params.lambda_bs * sc.k_users * rep.avg_rate;
    const double k = static_cast<double>(sc.k_users);
    rep.aec = sc.p_bs / params.eta + sc.m_antennas * params.p_c + k * k * k * params.p_pre +
              params.p_0;
    rep.ee = rep.ase / rep.aec;
    return rep;
}

EnergyReport energy_report(const NetworkParams& params, const CoverageOptions& opts) {
    return energy_report_from_coverage(params, coverage_probability(params, opts).value);
}

} // namespace pppcov
