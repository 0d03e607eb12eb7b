#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pppcov::stats {

// Inverse standard normal CDF (Acklam's rational approximation plus one
// Halley refinement; good to ~1e-15 on (0,1)).
double inv_norm_cdf(double p);

// P(X > x) for X ~ Gamma(n, 1) with integer shape n >= 1:
// e^{-x} * sum_{m<n} x^m / m!
double erlang_survival(double x, int n);

// Two-sided KS statistic of samples against cdf. Sorts a copy.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Critical KS value at significance alpha (0.01, 0.05 or 0.10) for sample
// size n, using Stephens' finite-n correction.
double ks_critical(double alpha, std::size_t n);

struct MeanVar {
    double mean = 0.0;
    double var = 0.0; // unbiased
};
MeanVar mean_var(const std::vector<double>& xs);

} // namespace pppcov::stats
