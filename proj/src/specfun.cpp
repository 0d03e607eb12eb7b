#include "pppcov/specfun.hpp"

#include <cmath>
#include <string>

#include "pppcov/errors.hpp"
#include "pppcov/quadrature.hpp"

namespace pppcov {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr long MAX_SERIES_TERMS = 1000000;

bool near_int(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) < tol;
}

// w^n for integer n >= 0 by binary exponentiation
Cplx cpow_int(Cplx w, long n) {
    Cplx r{1.0, 0.0};
    while (n > 0) {
        if (n & 1) r *= w;
        w *= w;
        n >>= 1;
    }
    return r;
}

// generic power series sum_{n} (a)_n (b)_n / ((c)_n n!) z^n
Cplx gauss_series(double a, double b, double c, Cplx z) {
    if (c <= 0.0 && near_int(c))
        throw NoConvergence("hyp2f1: c is a non-positive integer");
    Cplx term{1.0, 0.0}, sum{1.0, 0.0};
    int small_streak = 0;
    for (long n = 0; n < MAX_SERIES_TERMS; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1.1e-16 * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw NoConvergence("hyp2f1: series exceeded term budget");
}

bool is_family(const Hyp2F1Params& p) {
    return std::abs(p.c - (p.b + 1.0)) < 1e-12 && p.b > -1.0 && p.b < 0.0 && p.a >= 1.0;
}

} // namespace

double association_distance_pdf(double r, double lambda_bs) {
    if (r < 0.0) return 0.0;
    return 2.0 * PI * lambda_bs * r * std::exp(-lambda_bs * PI * r * r);
}

double sample_association_distance(double lambda_bs, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double u = uni(rng);           // 1-u lies in (0,1], keeps log finite
    return std::sqrt(-std::log1p(-u) / (PI * lambda_bs));
}

Cplx hyp2f1_series(const Hyp2F1Params& p) {
    return gauss_series(p.a, p.b, p.c, p.z);
}

Cplx hyp2f1_pfaff(const Hyp2F1Params& p) {
    const Cplx w = p.z / (p.z - 1.0);
    if (std::abs(w) >= 1.0 - 1e-9)
        throw NoConvergence("hyp2f1: Pfaff-transformed argument on the unit circle");
    return std::pow(1.0 - p.z, -p.a) * gauss_series(p.a, p.c - p.b, p.c, w);
}

Cplx hyp2f1_large_z(const Hyp2F1Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    if (near_int(a - b))
        throw NoConvergence("hyp2f1: 1/z connection needs a - b non-integer");
    if (p.z.imag() == 0.0 && p.z.real() >= 0.0)
        throw NoConvergence("hyp2f1: 1/z connection invalid on [0, inf)");
    const Cplx iz = 1.0 / p.z;

    const double coef_a = std::tgamma(c) * std::tgamma(b - a) /
                          (std::tgamma(b) * std::tgamma(c - a));
    const double coef_b = std::tgamma(c) * std::tgamma(a - b) /
                          (std::tgamma(a) * std::tgamma(c - b));
    if (!std::isfinite(coef_a) || !std::isfinite(coef_b))
        throw NoConvergence("hyp2f1: connection coefficients overflow");

    // second series terminates identically at 1 when b - c + 1 == 0
    Cplx s1 = gauss_series(a, a - c + 1.0, a - b + 1.0, iz);
    Cplx s2 = near_int(b - c + 1.0) && std::abs(b - c + 1.0) < 1e-12
                  ? Cplx{1.0, 0.0}
                  : gauss_series(b, b - c + 1.0, b - a + 1.0, iz);
    return coef_a * std::pow(-p.z, -a) * s1 + coef_b * std::pow(-p.z, -b) * s2;
}

Cplx hyp2f1_euler_integral(const Hyp2F1Params& p) {
    if (!is_family(p))
        throw NoConvergence("hyp2f1: Euler-integral route requires c = b + 1, b in (-1,0)");
    if (p.z.imag() == 0.0 && p.z.real() >= 1.0)
        throw NoConvergence("hyp2f1: argument on the branch cut [1, inf)");
    const double a = p.a, b = p.b;
    const Cplx z = p.z;

    // t = tau^q removes the t^b endpoint singularity (q(b+1)-1 >= 2)
    const int q = static_cast<int>(std::ceil(3.0 / (b + 1.0)));
    const double expo = q * (b + 1.0) - 1.0;
    const bool a_is_int = near_int(a);
    const long ai = static_cast<long>(std::llround(a));

    auto integrand = [&](double tau) -> Cplx {
        if (tau <= 0.0) return Cplx{0.0, 0.0};
        const double t = std::pow(tau, q);
        const Cplx base = 1.0 - z * t;
        Cplx pw = a_is_int ? cpow_int(1.0 / base, ai + 1) : std::pow(base, -(a + 1.0));
        return std::pow(tau, expo) * pw;
    };

    auto r = quad::adaptive_gk15(integrand, 0.0, 1.0, 0.0, 5e-13, 4000);
    if (!r.converged)
        throw NoConvergence("hyp2f1: Euler-integral quadrature did not converge");
    const Cplx integral = static_cast<double>(q) * r.value;
    const Cplx head = a_is_int ? cpow_int(1.0 / (1.0 - z), ai) : std::pow(1.0 - z, -a);
    return head - a * z * integral;
}

Cplx hyp2f1(const Hyp2F1Params& p) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) ||
        !std::isfinite(p.z.real()) || !std::isfinite(p.z.imag()))
        throw NoConvergence("hyp2f1: non-finite input");
    if (p.z == Cplx{0.0, 0.0}) return Cplx{1.0, 0.0};
    if (p.a == 0.0 || p.b == 0.0) return Cplx{1.0, 0.0};

    const double az = std::abs(p.z);
    if (is_family(p)) {
        if (az <= 0.8 && p.a <= 12.5) return hyp2f1_series(p);
        if (az >= std::max(4.0, 2.0 * p.a)) return hyp2f1_large_z(p);
        return hyp2f1_euler_integral(p);
    }
    if (az <= 0.8) return hyp2f1_series(p);
    if (std::abs(p.z / (p.z - 1.0)) <= 0.85) return hyp2f1_pfaff(p);
    if (!near_int(p.a - p.b) && az >= std::max(4.0, 2.0 * std::max(std::abs(p.a), std::abs(p.b))))
        return hyp2f1_large_z(p);
    throw NoConvergence("hyp2f1: no stable route for these parameters");
}

Cplx laplace_interference_exponent(Cplx s, double r0, int k_users, double alpha,
                                   double lambda_bs) {
    if (!(r0 > 0.0)) throw InvalidConfig("laplace_interference: r0 must be > 0");
    if (s == Cplx{0.0, 0.0}) return Cplx{0.0, 0.0};
    Hyp2F1Params hp;
    hp.a = static_cast<double>(k_users);
    hp.b = -2.0 / alpha;
    hp.c = 1.0 + hp.b;
    hp.z = -s * std::pow(r0, -alpha);
    const Cplx f = hyp2f1(hp);
    return PI * lambda_bs * r0 * r0 * (f - 1.0);
}

Cplx laplace_interference(Cplx s, double r0, int k_users, double alpha, double lambda_bs) {
    return std::exp(-laplace_interference_exponent(s, r0, k_users, alpha, lambda_bs));
}

Cplx laplace_interference_quadrature_oracle_exponent(Cplx s, double r0, int k_users,
                                                     double alpha, double lambda_bs) {
    if (!(r0 > 0.0)) throw InvalidConfig("laplace oracle: r0 must be > 0");
    if (s == Cplx{0.0, 0.0}) return Cplx{0.0, 0.0};

    // truncate where the tail bound K|s| R^{2-a}/(a-2) drops below 1e-12
    const double as = std::abs(s);
    double rmax = std::pow(k_users * as / (1e-12 * (alpha - 2.0)), 1.0 / (alpha - 2.0));
    rmax = std::max(rmax, 2.0 * r0);

    // 1 - (1+w)^-K = 1 - (1-y)^K with y = w/(1+w); the finite binomial sum in y
    // avoids the cancellation that otherwise floors the tail blocks at ~eps/|w|
    auto one_minus_pow = [&](Cplx w) -> Cplx {
        const Cplx y = w / (1.0 + w);
        if (std::abs(y) > 0.5) return 1.0 - cpow_int(1.0 - y, k_users);
        Cplx sum{0.0, 0.0};
        Cplx term{1.0, 0.0};
        for (int j = 1; j <= k_users; ++j) {
            term *= -y * (static_cast<double>(k_users - j + 1) / j);
            sum -= term;
        }
        return sum;
    };
    auto integrand = [&](double v) -> Cplx {
        return v * one_minus_pow(s * std::pow(v, -alpha));
    };

    Cplx total{0.0, 0.0};
    double lo = r0;
    while (lo < rmax) {
        const double hi = std::min(lo * 2.0, rmax);
        auto r = quad::adaptive_gk15(integrand, lo, hi, 1e-15, 1e-12, 4000);
        if (!r.converged)
            throw QuadratureFailure("laplace oracle: block quadrature did not converge");
        total += r.value;
        lo = hi;
    }
    return 2.0 * PI * lambda_bs * total;
}

Cplx laplace_interference_quadrature_oracle(Cplx s, double r0, int k_users, double alpha,
                                            double lambda_bs) {
    return std::exp(
        -laplace_interference_quadrature_oracle_exponent(s, r0, k_users, alpha, lambda_bs));
}

Cplx laplace_desired(Cplx s, int gamma_shape) {
    if (gamma_shape < 1) throw InvalidConfig("laplace_desired: shape must be >= 1");
    if (s == Cplx{-1.0, 0.0})
        throw PoleAtMinusOne("laplace_desired: pole at s = -1");
    return cpow_int(1.0 / (1.0 + s), gamma_shape);
}

} // namespace pppcov
