#pragma once

#include <complex>
#include <functional>

namespace pppcov::quad {

using Cplx = std::complex<double>;

struct QuadResult {
    Cplx value{0.0, 0.0};
    double error = 0.0;   // absolute error estimate
    long evals = 0;
    bool converged = true;
};

// Single 15-point Gauss-Kronrod panel on [a,b] with embedded 7-point error
// estimate (QUADPACK-style resasc scaling).
QuadResult gk15_panel(const std::function<Cplx(double)>& f, double a, double b);

// Globally adaptive bisection, worst-interval-first. Stops when the summed
// error estimate is below max(abs_tol, rel_tol*|value|) or max_intervals is
// reached (converged=false in that case; the reported error stays honest).
QuadResult adaptive_gk15(const std::function<Cplx(double)>& f, double a, double b,
                         double abs_tol, double rel_tol, int max_intervals = 2000);

// Real-valued convenience wrapper.
struct QuadResultR {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
    bool converged = true;
};
QuadResultR adaptive_gk15_real(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, double rel_tol, int max_intervals = 2000);

} // namespace pppcov::quad
