#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "pppcov/errors.hpp"
#include "pppcov/rng.hpp"
#include "pppcov/specfun.hpp"

using namespace pppcov;

namespace {

constexpr double PI = 3.14159265358979323846;

double rel_err(Cplx got, Cplx want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

Hyp2F1Params family(int k, double alpha, Cplx z) {
    Hyp2F1Params p;
    p.a = static_cast<double>(k);
    p.b = -2.0 / alpha;
    p.c = 1.0 - 2.0 / alpha;
    p.z = z;
    return p;
}

} // namespace

TEST_CASE("log identity: F(1,1;2;z) = -log(1-z)/z") {
    for (int i = 0; i < 50; ++i) {
        const double z = -4.0 + 4.75 * i / 49.0;
        if (std::abs(z) < 1e-12) continue;
        Hyp2F1Params p{1.0, 1.0, 2.0, Cplx(z, 0.0)};
        const double want = -std::log1p(-z) / z;
        CHECK(rel_err(hyp2f1(p), want) < 1e-10);
    }
}

TEST_CASE("arctan identity: F(1,-1/2;1/2;-t^2) = 1 + t atan t") {
    for (int i = 0; i < 50; ++i) {
        const double t = 0.05 + (10.0 - 0.05) * i / 49.0;
        Hyp2F1Params p{1.0, -0.5, 0.5, Cplx(-t * t, 0.0)};
        const double want = 1.0 + t * std::atan(t);
        CHECK(rel_err(hyp2f1(p), want) < 1e-10);
    }
}

TEST_CASE("reference values across all dispatch regions") {
    struct Case {
        int k;
        double alpha;
        Cplx z;
        Cplx want;
    };
    // high-precision references, 17 significant digits
    const Case cases[] = {
        {8, 4.0, {-0.3, 0.7}, {3.594710356476842, -2.3755099338773819}},
        {8, 4.0, {-2.0, 0.0}, {6.9799811752566078, 0.0}},
        {8, 4.0, {0.0, -3.0}, {6.0448260519716345, 6.0448347850490739}},
        {8, 4.0, {-40.0, -90.0}, {41.070544075675329, 26.690641349002715}},
        {8, 4.0, {0.0, -600.0}, {85.486808414408144, 85.486808414408144}},
        {1, 4.0, {0.0, -0.5}, {1.0756074403942601, 0.47796691850278517}},
        {1, 4.0, {-7.0, 2.0}, {4.2383592578244651, -0.5770256030617694}},
        {2, 3.0, {-0.6, -0.1}, {3.0285186118186801, 0.29226852879843305}},
        {2, 3.0, {0.0, -9.0}, {8.7168158184466514, 15.102711228865509}},
        {4, 5.0, {-1.5, -1.5}, {3.2312606591615713, 1.0491071241929915}},
        {4, 5.0, {0.0, -100.0}, {12.841865800000987, 9.3301616420078836}},
        {12, 3.5, {-1.0, -0.4}, {8.6252053279133043, 1.9055154215340128}},
        {16, 4.0, {-0.5, -0.2}, {5.0690721144845589, 0.97615499188219804}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.k);
        CAPTURE(c.alpha);
        CAPTURE(c.z.real());
        CAPTURE(c.z.imag());
        CHECK(rel_err(hyp2f1(family(c.k, c.alpha, c.z)), c.want) < 1e-9);
    }
}

TEST_CASE("routes agree on their overlap regions") {
    std::mt19937_64 rng = derive_stream(0xabcdef, 3);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    SUBCASE("series vs pfaff, left half-plane moderate z") {
        for (int k : {1, 2, 4, 8}) {
            for (double alpha : {3.0, 4.0, 5.0}) {
                for (int i = 0; i < 6; ++i) {
                    const double mod = 0.5 + 0.3 * u(rng);
                    const double arg = PI / 2 + PI * u(rng);
                    const Cplx z = std::polar(mod, arg);
                    auto p = family(k, alpha, z);
                    CHECK(rel_err(hyp2f1_series(p), hyp2f1_pfaff(p)) < 1e-9);
                }
            }
        }
    }

    SUBCASE("series vs euler integral, small z") {
        for (int k : {1, 3, 8}) {
            for (double alpha : {3.0, 4.5}) {
                for (int i = 0; i < 4; ++i) {
                    const Cplx z = std::polar(0.2 + 0.5 * u(rng), PI / 2 + PI * u(rng));
                    auto p = family(k, alpha, z);
                    CHECK(rel_err(hyp2f1_euler_integral(p), hyp2f1_series(p)) < 1e-9);
                }
            }
        }
    }

    SUBCASE("euler integral vs large-z connection, big z") {
        for (int k : {1, 2, 4}) {
            for (double alpha : {3.0, 4.0, 5.0}) {
                for (int i = 0; i < 4; ++i) {
                    const Cplx z = std::polar(12.0 + 30.0 * u(rng), PI / 2 + PI * u(rng));
                    auto p = family(k, alpha, z);
                    CHECK(rel_err(hyp2f1_large_z(p), hyp2f1_euler_integral(p)) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("trivial arguments") {
    Hyp2F1Params p = family(8, 4.0, Cplx(0.0, 0.0));
    CHECK(hyp2f1(p) == Cplx(1.0, 0.0));
    p.a = 0.0;
    p.z = Cplx(0.4, -0.3);
    CHECK(hyp2f1(p) == Cplx(1.0, 0.0));
}

TEST_CASE("interference transform reference values") {
    struct Case {
        Cplx s;
        double r0;
        int k;
        double alpha;
        double lam;
        Cplx want;
    };
    const Case cases[] = {
        {{2.5, 0.0}, 0.5, 8, 4.0, 4.0, {94.924380935971455, 0.0}},
        {{0.0, -40.0}, 0.5, 8, 4.0, 4.0, {274.23086706176867, -277.37245971535847}},
        {{0.0, 125.0}, 0.25, 8, 4.0, 4.0, {489.54446978440867, 490.32986794780612}},
        {{3.0, -7.0}, 1.2, 4, 3.0, 2.0, {104.82911479296572, -112.04390315211894}},
        {{0.0, -1000.0}, 0.8, 2, 5.0, 1.0, {72.503588952465875, -54.137741260952915}},
        {{1e-3, 0.0}, 0.3, 1, 4.0, 4.0, {0.13427176664891068, 0.0}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.s.real());
        CAPTURE(c.s.imag());
        const Cplx got = laplace_interference_exponent(c.s, c.r0, c.k, c.alpha, c.lam);
        CHECK(rel_err(got, c.want) < 1e-9);
        if (c.want.real() < 500.0) {
            CHECK(rel_err(laplace_interference(c.s, c.r0, c.k, c.alpha, c.lam),
                          std::exp(-c.want)) < 1e-8);
        }
    }
}

TEST_CASE("interference transform closed form at K=1, alpha=4") {
    // exponent = pi lam r0^2 sqrt(s r0^-4) atan(sqrt(s r0^-4))
    const double r0 = 0.7, lam = 4.0;
    for (double s : {0.05, 3.0, 400.0}) {
        const double st = s * std::pow(r0, -4.0);
        const double want = PI * lam * r0 * r0 * std::sqrt(st) * std::atan(std::sqrt(st));
        const Cplx got = laplace_interference_exponent(Cplx(s, 0.0), r0, 1, 4.0, lam);
        CHECK(rel_err(got, want) < 1e-10);
    }
}

TEST_CASE("interference transform basic properties") {
    CHECK(laplace_interference_exponent(Cplx(0.0, 0.0), 0.5, 8, 4.0, 4.0) == Cplx(0.0, 0.0));
    CHECK(laplace_interference(Cplx(0.0, 0.0), 0.5, 8, 4.0, 4.0) == Cplx(1.0, 0.0));
    CHECK_THROWS_AS(laplace_interference_exponent(Cplx(1.0, 0.0), 0.0, 8, 4.0, 4.0),
                    InvalidConfig);

    // |L_I(i s)| <= 1 on the imaginary axis; real-axis values decrease in s
    double prev = 1.0;
    for (double s : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const Cplx onaxis = laplace_interference(Cplx(0.0, s), 0.6, 4, 4.0, 4.0);
        CHECK(std::abs(onaxis) <= 1.0 + 1e-12);
        const Cplx real = laplace_interference(Cplx(s, 0.0), 0.6, 4, 4.0, 4.0);
        CHECK(real.imag() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(real.real() < prev);
        CHECK(real.real() > 0.0);
        prev = real.real();
    }

    // conjugate symmetry
    const Cplx up = laplace_interference(Cplx(0.3, 2.0), 0.6, 4, 4.0, 4.0);
    const Cplx dn = laplace_interference(Cplx(0.3, -2.0), 0.6, 4, 4.0, 4.0);
    CHECK(std::abs(up - std::conj(dn)) < 1e-12 * std::abs(up));
}

TEST_CASE("quadrature oracle agrees with the hypergeometric form") {
    std::mt19937_64 rng = derive_stream(0xfeed, 11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k : {1, 4, 8}) {
        for (double alpha : {3.0, 4.0, 5.0}) {
            for (int i = 0; i < 2; ++i) {
                const double mag = std::pow(10.0, -2.0 + 4.0 * u(rng));
                const Cplx s = (i == 0) ? Cplx(mag, 0.0) : Cplx(0.0, -mag);
                const double r0 = 0.3 + u(rng);
                const Cplx want = laplace_interference_exponent(s, r0, k, alpha, 4.0);
                const Cplx got =
                    laplace_interference_quadrature_oracle_exponent(s, r0, k, alpha, 4.0);
                CAPTURE(k);
                CAPTURE(alpha);
                CHECK(rel_err(got, want) < 1e-8);
            }
        }
    }
}

TEST_CASE("desired-signal transform") {
    CHECK(laplace_desired(Cplx(0.0, 0.0), 5) == Cplx(1.0, 0.0));
    CHECK(rel_err(laplace_desired(Cplx(1.0, 0.0), 1), 0.5) < 1e-15);
    CHECK(rel_err(laplace_desired(Cplx(1.0, 0.0), 2), 0.25) < 1e-15);
    CHECK(rel_err(laplace_desired(Cplx(3.0, 0.0), 3), 1.0 / 64.0) < 1e-15);
    const Cplx v = laplace_desired(Cplx(0.0, 2.0), 4);
    CHECK(rel_err(v, std::pow(Cplx(1.0, 2.0), -4.0)) < 1e-13);
    CHECK_THROWS_AS(laplace_desired(Cplx(-1.0, 0.0), 3), PoleAtMinusOne);
    CHECK_THROWS_AS(laplace_desired(Cplx(1.0, 0.0), 0), InvalidConfig);
}

TEST_CASE("association distance density and sampler") {
    const double lam = 4.0;
    CHECK(association_distance_pdf(0.0, lam) == 0.0);
    // mode at r = 1/sqrt(2 pi lam)
    const double rm = 1.0 / std::sqrt(2.0 * PI * lam);
    CHECK(association_distance_pdf(rm, lam) >
          association_distance_pdf(rm * 0.8, lam));
    CHECK(association_distance_pdf(rm, lam) >
          association_distance_pdf(rm * 1.2, lam));

    // density integrates to 1 (trapezoid on a fine grid is enough at 1e-6)
    double mass = 0.0;
    const int n = 200000;
    const double hi = 6.0 / std::sqrt(lam);
    for (int i = 0; i < n; ++i) {
        const double r = hi * (i + 0.5) / n;
        mass += association_distance_pdf(r, lam) * hi / n;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));

    // sampled moments: E[R] = 1/(2 sqrt(lam)), E[R^2] = 1/(pi lam)
    std::mt19937_64 rng = derive_stream(42, 0);
    double s1 = 0.0, s2 = 0.0;
    const int m = 200000;
    for (int i = 0; i < m; ++i) {
        const double r = sample_association_distance(lam, rng);
        s1 += r;
        s2 += r * r;
    }
    s1 /= m;
    s2 /= m;
    CHECK(s1 == doctest::Approx(0.5 / std::sqrt(lam)).epsilon(5e-3));
    CHECK(s2 == doctest::Approx(1.0 / (PI * lam)).epsilon(1e-2));
}
