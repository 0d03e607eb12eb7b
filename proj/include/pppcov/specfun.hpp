#pragma once

#include <complex>
#include <random>

namespace pppcov {

using Cplx = std::complex<double>;

// Nearest-BS distance density under a homogeneous PPP of intensity lambda_bs:
// f(r) = 2 pi lambda r exp(-lambda pi r^2), r >= 0.
double association_distance_pdf(double r, double lambda_bs);

// Inverse-CDF draw of the nearest-BS distance.
double sample_association_distance(double lambda_bs, std::mt19937_64& rng);

// Gauss hypergeometric parameters. Throughout this artifact c = b + 1, with
// a a positive integer (the per-sub-band user count) and b = -2/alpha in
// (-1, 0); the identity-test parameter sets also satisfy c = b + 1.
struct Hyp2F1Params {
    double a = 1.0;
    double b = -0.5;
    double c = 0.5;
    Cplx z{0.0, 0.0};
};

// Individual evaluation routes, exposed for cross-validation tests.
// Power series; converges for |z| < 1, practical for |z| <= ~0.8 and small a.
Cplx hyp2f1_series(const Hyp2F1Params& p);
// Pfaff transform (1-z)^{-a} F(a, c-b; c; z/(z-1)).
Cplx hyp2f1_pfaff(const Hyp2F1Params& p);
// z -> 1/z connection formula; requires a - b non-integer, best for large |z|.
Cplx hyp2f1_large_z(const Hyp2F1Params& p);
// Integration-by-parts Euler integral, specific to c = b + 1 with b in (-1,0):
// F = (1-z)^{-a} - a z Int_0^1 t^b (1 - z t)^{-(a+1)} dt.
// Stable for any a >= 1 at moderate |z| where the series routes cancel badly.
Cplx hyp2f1_euler_integral(const Hyp2F1Params& p);

// Analytic continuation of 2F1 on the artifact's parameter domain, relative
// accuracy target 1e-10. Dispatches between the routes above by |z| and a.
// Throws NoConvergence when no route applies or a series exceeds its budget.
Cplx hyp2f1(const Hyp2F1Params& p);

// Interference Laplace transform at the typical user, nearest BS at r0:
//   L_I(s) = exp(-pi lambda r0^2 (2F1(K, -2/a; 1-2/a; -s r0^-a) - 1)).
// exponent() returns pi lambda r0^2 (2F1 - 1); the transform is exp(-exponent).
Cplx laplace_interference_exponent(Cplx s, double r0, int k_users, double alpha,
                                   double lambda_bs);
Cplx laplace_interference(Cplx s, double r0, int k_users, double alpha, double lambda_bs);

// Independent check: the pre-hypergeometric form of the same exponent,
//   2 pi lambda Int_{r0}^{inf} (1 - (1 + s v^-a)^-K) v dv,
// evaluated by adaptive quadrature with the tail truncated where
// K |s| R^(2-a) / (a-2) < 1e-12.
Cplx laplace_interference_quadrature_oracle_exponent(Cplx s, double r0, int k_users,
                                                     double alpha, double lambda_bs);
Cplx laplace_interference_quadrature_oracle(Cplx s, double r0, int k_users, double alpha,
                                            double lambda_bs);

// Desired-signal Laplace transform, S ~ Gamma(n, 1) with integer n = M - K + 1:
//   L_S(s) = (1 + s)^{-n}.  Throws PoleAtMinusOne at s = -1.
Cplx laplace_desired(Cplx s, int gamma_shape);

} // namespace pppcov
