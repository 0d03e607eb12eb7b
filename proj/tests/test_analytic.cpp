#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "pppcov/analytic.hpp"
#include "pppcov/rng.hpp"
#include "pppcov/scenario.hpp"

using namespace pppcov;

namespace {

constexpr double PI = 3.14159265358979323846;

NetworkParams rayleigh_point() {
    NetworkParams p;
    p.lambda_bs = 4.0;
    p.lambda_ue = 4.0; // M = K = 1
    p.num_subbands = 1;
    p.pathloss_alpha = 4.0;
    p.sinr_threshold_db = 0.0;
    return p;
}

} // namespace

TEST_CASE("single-antenna interference-limited coverage has a closed form") {
    NetworkParams p = rayleigh_point();
    CoverageOptions opts;
    opts.include_noise = false;
    CoverageResult r = coverage_probability(p, opts);
    const double want = 1.0 / (1.0 + PI / 4.0);
    CHECK(std::abs(r.value - want) < 1e-5);
    CHECK(r.abs_error_estimate < 1e-4);
    CHECK(r.value >= 0.0);
    CHECK(r.value <= 1.0);
    CHECK(r.evaluations > 0);
    CHECK(r.inner_truncation > 0.0);
    CHECK(r.outer_truncation > 0.0);
}

TEST_CASE("spectral integrand is conjugate-symmetric in s") {
    // equality of the two half-line inversion conventions reduces to this
    NetworkParams p;
    Scenario sc = derive_scenario(p);
    std::mt19937_64 rng = derive_stream(77, 0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double u = 0.05 + 6.0 * u01(rng);
        const double s = std::pow(10.0, -2.0 + 3.0 * u01(rng));
        const auto up = detail::coverage_integrand(u, s, p, sc, true);
        const auto dn = detail::coverage_integrand(u, -s, p, sc, true);
        const double scale = std::max(std::abs(up), 1e-12);
        CHECK(std::abs(up - std::conj(dn)) / scale < 1e-12);
    }
}

TEST_CASE("integrand at s approaching 0 matches the mean serving gain") {
    NetworkParams p;
    Scenario sc = derive_scenario(p);
    const auto at0 = detail::coverage_integrand(1.0, 0.0, p, sc, true);
    const int delta = sc.m_antennas - sc.k_users + 1;
    CHECK(at0.real() == doctest::Approx(static_cast<double>(delta)).epsilon(1e-12));
    CHECK(at0.imag() == doctest::Approx(0.0).epsilon(1e-12));
    const auto near0 = detail::coverage_integrand(1.0, 1e-7, p, sc, true);
    CHECK(std::abs(near0 - at0) < 1e-4);
}

TEST_CASE("coverage decreases strictly in the SINR threshold") {
    NetworkParams p;
    double prev = 1.1;
    for (double t_db : {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0}) {
        p.sinr_threshold_db = t_db;
        const double c = coverage_probability(p).value;
        CAPTURE(t_db);
        CHECK(c < prev);
        CHECK(c > 0.0);
        CHECK(c < 1.0);
        prev = c;
    }
}

TEST_CASE("coverage approaches one at a vanishing threshold") {
    NetworkParams p;
    p.sinr_threshold_db = -45.0;
    CoverageOptions opts;
    opts.include_noise = false;
    CHECK(coverage_probability(p, opts).value > 0.99);
}

TEST_CASE("noise can only reduce coverage") {
    NetworkParams p;
    CoverageOptions with, without;
    without.include_noise = false;
    const double cn = coverage_probability(p, with).value;
    const double ci = coverage_probability(p, without).value;
    CHECK(cn <= ci + 1e-9);
    // at 4 BS/km^2 and 10 W/km^2 the network is interference-limited
    CHECK(ci - cn < 0.05);
}

TEST_CASE("sampled-field oracle agrees with the spectral inversion") {
    struct Pt {
        double lambda_bs, lambda_ue, alpha, t_db;
        int L;
    };
    const Pt pts[] = {
        {4.0, 32.0, 4.0, 1.0, 1},   // reference operating point
        {4.0, 32.0, 3.0, 0.0, 1},
        {4.0, 32.0, 4.0, 10.0, 1},
        {4.0, 32.0, 4.5, 0.0, 4},
        {16.0, 32.0, 4.0, 5.0, 1},
    };
    for (const auto& q : pts) {
        NetworkParams p;
        p.lambda_bs = q.lambda_bs;
        p.lambda_ue = q.lambda_ue;
        p.pathloss_alpha = q.alpha;
        p.sinr_threshold_db = q.t_db;
        p.num_subbands = q.L;
        CAPTURE(q.lambda_bs);
        CAPTURE(q.alpha);
        CAPTURE(q.t_db);
        CAPTURE(q.L);
        const CoverageResult a = coverage_probability(p);
        const CoverageResult o = coverage_probability_gamma_oracle(p);
        const double tol =
            std::max(2e-3, a.abs_error_estimate + o.abs_error_estimate);
        CHECK(std::abs(a.value - o.value) < tol);
    }
}

TEST_CASE("energy report arithmetic") {
    NetworkParams p;
    EnergyReport er = energy_report(p);
    Scenario sc = derive_scenario(p);

    const double aec_want = sc.p_bs / p.eta + sc.m_antennas * p.p_c +
                            std::pow(sc.k_users, 3.0) * p.p_pre + p.p_0;
    CHECK(er.aec == doctest::Approx(1082.9416352201258).epsilon(1e-12));
    CHECK(er.aec == doctest::Approx(aec_want).epsilon(1e-14));

    const double rate_want = std::log2(1.0 + sc.t_linear) * er.coverage;
    CHECK(er.avg_rate == doctest::Approx(rate_want).epsilon(1e-13));
    CHECK(er.ase ==
          doctest::Approx(p.lambda_bs * sc.k_users * er.avg_rate).epsilon(1e-13));
    CHECK(er.ee == doctest::Approx(er.ase / er.aec).epsilon(1e-14));

    CHECK(er.coverage == doctest::Approx(coverage_probability(p).value).epsilon(1e-12));
}

TEST_CASE("energy report from a supplied coverage is linear in it") {
    NetworkParams p;
    EnergyReport half = energy_report_from_coverage(p, 0.5);
    EnergyReport full = energy_report_from_coverage(p, 1.0);
    CHECK(half.coverage == 0.5);
    CHECK(half.aec == full.aec);
    CHECK(half.ase == doctest::Approx(0.5 * full.ase).epsilon(1e-14));
    CHECK(half.ee == doctest::Approx(0.5 * full.ee).epsilon(1e-13));
}

TEST_CASE("average rate is bounded by the log of the threshold") {
    NetworkParams p;
    const double cap = std::log2(1.0 + derive_scenario(p).t_linear);
    const double r = average_rate(p);
    CHECK(r > 0.0);
    CHECK(r <= cap);
    const double rn = average_rate(p, {}, true);
    CHECK(rn == doctest::Approx(r * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("oracle reports its own uncertainty") {
    NetworkParams p = rayleigh_point();
    CoverageResult o = coverage_probability_gamma_oracle(p, {}, 40000, 99);
    CHECK(o.abs_error_estimate > 0.0);
    CHECK(o.abs_error_estimate < 0.02);
    CHECK(o.evaluations == 40000);
    const double want = 1.0 / (1.0 + PI / 4.0);
    // noise shifts the true value a little below the interference-only form
    CHECK(o.value < want + o.abs_error_estimate);
    CHECK(o.value > want - 0.05);
}
