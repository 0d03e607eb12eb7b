#include "pppcov/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "pppcov/errors.hpp"
#include "pppcov/rng.hpp"
#include "pppcov/stats.hpp"

namespace pppcov {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr int MAX_CHANNEL_RESAMPLES = 64;

// neglected interference beyond R: exact conditional mean, and the standard
// deviation of the neglected sum (both from Campbell's theorem)
double tail_mean(double radius, double lambda, int k_users, double alpha) {
    return 2.0 * PI * lambda * k_users * std::pow(radius, 2.0 - alpha) / (alpha - 2.0);
}

double tail_std(double radius, double lambda, int k_users, double alpha) {
    const double k = static_cast<double>(k_users);
    return std::sqrt(2.0 * PI * lambda * (k * k + k) / (2.0 * alpha - 2.0)) *
           std::pow(radius, 1.0 - alpha);
}

double pilot_interference(double lambda, int k_users, double alpha) {
    const double r_med = std::sqrt(std::log(2.0) / (PI * lambda));
    return 2.0 * PI * lambda * k_users * std::pow(r_med, 2.0 - alpha) / (alpha - 2.0);
}

void check_window(double radius, const NetworkParams& params, int k_users) {
    const double lambda = params.lambda_bs;
    const double alpha = params.pathloss_alpha;
    if (radius * radius * PI * lambda < 30.0)
        throw WindowTooSmall("window holds fewer than 30 base stations on average");
    const double budget = 1e-3 * pilot_interference(lambda, k_users, alpha);
    if (tail_std(radius, lambda, k_users, alpha) > budget * 1.0000001)
        throw WindowTooSmall("neglected-tail fluctuation exceeds 1e-3 of the pilot level");
}

int thread_count() {
    if (const char* env = std::getenv("PPPCOV_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hc, 1u, 16u));
}

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

void fill_complex_gaussian(CMat& m, std::normal_distribution<double>& gauss,
                           std::mt19937_64& rng) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            m(r, c) = std::complex<double>(gauss(rng), gauss(rng));
}

// B = (H H^H)^{-1} for a fresh channel draw; resamples measure-zero singular draws
void draw_gram_inverse(CMat& h, CMat& b, std::normal_distribution<double>& gauss,
                       std::mt19937_64& rng) {
    const auto k = h.rows();
    for (int attempt = 0; attempt < MAX_CHANNEL_RESAMPLES; ++attempt) {
        fill_complex_gaussian(h, gauss, rng);
        const CMat gram = h * h.adjoint();
        Eigen::LLT<CMat> llt(gram);
        if (llt.info() == Eigen::Success) {
            b = llt.solve(CMat::Identity(k, k));
            if (b.allFinite()) return;
        }
    }
    throw SingularChannel("channel Gram matrix stayed singular after resampling");
}

} // namespace

std::vector<Point> sample_ppp_disk(double lambda, double radius, std::mt19937_64& rng) {
    if (!(lambda > 0.0) || !(radius > 0.0))
        throw InvalidConfig("sample_ppp_disk: lambda and radius must be positive");
    std::poisson_distribution<long> count(lambda * PI * radius * radius);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const long n = count(rng);
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
        const double r = radius * std::sqrt(uni(rng));
        const double theta = 2.0 * PI * uni(rng);
        p.x = r * std::cos(theta);
        p.y = r * std::sin(theta);
    }
    return pts;
}

GainsSample sample_gains_gamma(const Scenario& sc, long n_interferers, std::mt19937_64& rng) {
    const int delta = sc.m_antennas - sc.k_users + 1;
    std::gamma_distribution<double> serving(static_cast<double>(delta), 1.0);
    std::gamma_distribution<double> cross(static_cast<double>(sc.k_users), 1.0);
    GainsSample out;
    out.s = serving(rng);
    out.g.resize(static_cast<std::size_t>(n_interferers));
    for (auto& v : out.g) v = cross(rng);
    return out;
}

GainsSample sample_gains_exact_zf(const Scenario& sc, long n_interferers,
                                  std::mt19937_64& rng) {
    const int m = sc.m_antennas;
    const int k = sc.k_users;
    if (k > m) throw InvalidConfig("sample_gains_exact_zf: needs K <= M");
    std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));  // CN(0,1) parts

    CMat h(k, m), b(k, k);
    CVec cross(m), v(k), bv(k);
    GainsSample out;

    draw_gram_inverse(h, b, gauss, rng);
    out.s = 1.0 / b(0, 0).real();

    out.g.resize(static_cast<std::size_t>(n_interferers));
    for (auto& gi : out.g) {
        draw_gram_inverse(h, b, gauss, rng);
        for (int i = 0; i < m; ++i) cross(i) = std::complex<double>(gauss(rng), gauss(rng));
        v.noalias() = h * cross;
        bv.noalias() = b * v;
        double sum = 0.0;
        for (int i = 0; i < k; ++i) sum += std::norm(bv(i)) / b(i, i).real();
        gi = sum;
    }
    return out;
}

double default_window_radius(const NetworkParams& params) {
    validate_params(params);
    const Scenario sc = derive_scenario(params);
    const double lambda = params.lambda_bs;
    const double alpha = params.pathloss_alpha;
    const double budget = 1e-3 * pilot_interference(lambda, sc.k_users, alpha);
    const double coef = tail_std(1.0, lambda, sc.k_users, alpha);
    const double r_fluct = std::pow(coef / budget, 1.0 / (alpha - 1.0));
    return std::max(r_fluct, std::sqrt(40.0 / (PI * lambda)));
}

SimOutcome simulate_coverage(const NetworkParams& params, const SimConfig& sim) {
    validate_params(params);
    if (sim.trials < 1) throw InvalidConfig("simulate_coverage: trials must be >= 1");
    if (!(sim.confidence_level > 0.0 && sim.confidence_level < 1.0))
        throw InvalidConfig("simulate_coverage: confidence_level must lie in (0,1)");
    const Scenario sc = derive_scenario(params);
    const double radius =
        sim.window_radius > 0.0 ? sim.window_radius : default_window_radius(params);
    check_window(radius, params, sc.k_users);

    const double lambda = params.lambda_bs;
    const double alpha = params.pathloss_alpha;
    const double noise = sim.include_noise ? sc.noise_term : 0.0;
    const double compensation = tail_mean(radius, lambda, sc.k_users, alpha);
    const bool exact = sim.gain_model == GainModel::ExactZF;

    std::atomic<long> successes{0};
    std::atomic<long> resamples{0};

    auto run_range = [&](long first, long last) {
        long ok = 0, redraws = 0;
        for (long t = first; t < last; ++t) {
            std::mt19937_64 rng = derive_stream(sim.seed, static_cast<std::uint64_t>(t));
            std::vector<Point> pts = sample_ppp_disk(lambda, radius, rng);
            while (pts.empty()) {
                ++redraws;
                pts = sample_ppp_disk(lambda, radius, rng);
            }

            std::size_t nearest = 0;
            double best = pts[0].x * pts[0].x + pts[0].y * pts[0].y;
            for (std::size_t i = 1; i < pts.size(); ++i) {
                const double d = pts[i].x * pts[i].x + pts[i].y * pts[i].y;
                if (d < best) {
                    best = d;
                    nearest = i;
                }
            }

            const long n_interf = static_cast<long>(pts.size()) - 1;
            const GainsSample gains = exact ? sample_gains_exact_zf(sc, n_interf, rng)
                                            : sample_gains_gamma(sc, n_interf, rng);

            double interference = compensation;
            std::size_t gi = 0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (i == nearest) continue;
                const double d_sq = pts[i].x * pts[i].x + pts[i].y * pts[i].y;
                interference += gains.g[gi++] * std::pow(d_sq, -0.5 * alpha);
            }

            const double signal = gains.s * std::pow(best, -0.5 * alpha);
            const double sinr = signal / (interference + noise);
            if (sinr > sc.t_linear) ++ok;
        }
        successes.fetch_add(ok, std::memory_order_relaxed);
        resamples.fetch_add(redraws, std::memory_order_relaxed);
    };

    const int workers = std::min<long>(thread_count(), sim.trials);
    if (workers <= 1) {
        run_range(0, sim.trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const long chunk = (sim.trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long first = w * chunk;
            const long last = std::min(sim.trials, first + chunk);
            if (first >= last) break;
            pool.emplace_back(run_range, first, last);
        }
        for (auto& th : pool) th.join();
    }

    SimOutcome out;
    out.trials_used = sim.trials;
    out.empty_window_resamples = resamples.load();
    const double n = static_cast<double>(sim.trials);
    out.estimate = static_cast<double>(successes.load()) / n;
    const double z = stats::inv_norm_cdf(0.5 * (1.0 + sim.confidence_level));
    out.half_width = z * std::sqrt(out.estimate * (1.0 - out.estimate) / n);
    return out;
}

EnergyReport simulate_energy(const NetworkParams& params, const SimConfig& sim) {
    const SimOutcome cov = simulate_coverage(params, sim);
    return energy_report_from_coverage(params, cov.estimate);
}

} // namespace pppcov
