#include "pppcov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace pppcov::quad {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed nodes. Constants as in QUADPACK.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    Cplx value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment eval_panel(const std::function<Cplx(double)>& f, double a, double b, long& evals) {
    const double hl = 0.5 * (b - a);
    const double c = 0.5 * (a + b);

    Cplx fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - hl * xgk[i]);
        fv[14 - i] = f(c + hl * xgk[i]);
    }
    fv[7] = f(c);
    evals += 15;

    Cplx resk{0.0, 0.0}, resg{0.0, 0.0};
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) {
        resk += wgk[i] * (fv[i] + fv[14 - i]);
        resabs += wgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    }
    resk += wgk[7] * fv[7];
    resabs += wgk[7] * std::abs(fv[7]);
    for (int i = 0; i < 3; ++i)
        resg += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    resg += wg[3] * fv[7];

    const Cplx mean = resk * 0.5;
    double resasc = wgk[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += wgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

    resk *= hl;
    resabs *= std::abs(hl);
    resasc *= std::abs(hl);

    double err = std::abs(resk - hl * resg);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    err = std::max(err, eps50);

    return Segment{a, b, resk, err};
}

} // namespace

QuadResult gk15_panel(const std::function<Cplx(double)>& f, double a, double b) {
    long evals = 0;
    Segment s = eval_panel(f, a, b, evals);
    return QuadResult{s.value, s.error, evals, true};
}

QuadResult adaptive_gk15(const std::function<Cplx(double)>& f, double a, double b,
                         double abs_tol, double rel_tol, int max_intervals) {
    long evals = 0;
    std::priority_queue<Segment> heap;
    Segment first = eval_panel(f, a, b, evals);
    double total_err = first.error;
    Cplx total_val = first.value;
    heap.push(first);
    int n = 1;

    while (n < max_intervals) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total_val));
        if (total_err <= tol) break;
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // interval at rounding floor
            heap.push(worst);
            break;
        }
        Segment l = eval_panel(f, worst.a, mid, evals);
        Segment r = eval_panel(f, mid, worst.b, evals);
        total_val += l.value + r.value - worst.value;
        total_err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++n;
    }

    QuadResult out;
    out.error = total_err;
    out.evals = evals;
    out.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total_val));
    out.value = total_val;
    return out;
}

QuadResultR adaptive_gk15_real(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, double rel_tol, int max_intervals) {
    QuadResult r = adaptive_gk15([&f](double x) { return Cplx(f(x), 0.0); },
                                 a, b, abs_tol, rel_tol, max_intervals);
    return QuadResultR{r.value.real(), r.error, r.evals, r.converged};
}

} // namespace pppcov::quad
