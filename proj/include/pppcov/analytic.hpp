#pragma once

#include <complex>
#include <cstdint>

#include "pppcov/scenario.hpp"

namespace pppcov {

struct CoverageOptions {
    bool include_noise = true;
    double abs_tol = 1e-6;   // outer integral
    double rel_tol = 1e-6;
};

struct CoverageResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    double inner_truncation = 0.0;   // largest spectral endpoint used
    double outer_truncation = 0.0;   // upper limit in the u = pi*lambda*r0^2 variable
    long evaluations = 0;
};

// P(SINR > threshold) for the typical user under nearest-BS association
CoverageResult coverage_probability(const NetworkParams& params,
                                    const CoverageOptions& opts = {});

namespace detail {
// real part of the spectral integrand at (u, s); exposed for symmetry checks
std::complex<double> coverage_integrand(double u, double s, const NetworkParams& params,
                                        const Scenario& sc, bool include_noise);
} // namespace detail

// conditional-Erlang average over sampled interference fields; independent of the
// spectral inversion path, used to cross-check it
CoverageResult coverage_probability_gamma_oracle(const NetworkParams& params,
                                                 const CoverageOptions& opts = {},
                                                 long draws = 100000,
                                                 std::uint64_t seed = 0x51ed2701u);

// log2(1+T) * coverage by default, natural log if use_nats
double average_rate(const NetworkParams& params, const CoverageOptions& opts = {},
                    bool use_nats = false);

struct EnergyReport {
    double coverage = 0.0;
    double avg_rate = 0.0;       // bit/s/Hz per scheduled user
    double ase = 0.0;            // bit/s/Hz/km^2
    double aec = 0.0;            // W/km^2
    double ee = 0.0;             // bit/Hz/J
};

EnergyReport energy_report(const NetworkParams& params, const CoverageOptions& opts = {});

// same arithmetic with the coverage value supplied by the caller (e.g. simulated)
EnergyReport energy_report_from_coverage(const NetworkParams& params, double coverage);

} // namespace pppcov
