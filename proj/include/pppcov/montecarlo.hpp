#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pppcov/analytic.hpp"
#include "pppcov/scenario.hpp"

namespace pppcov {

enum class GainModel { GammaSampled, ExactZF };

struct SimConfig {
    long trials = 100000;
    double window_radius = 0.0;   // km; 0 selects default_window_radius
    std::uint64_t seed = 1;
    GainModel gain_model = GainModel::GammaSampled;
    double confidence_level = 0.99;
    bool include_noise = true;
};

struct SimOutcome {
    double estimate = 0.0;
    double half_width = 0.0;
    long trials_used = 0;
    long empty_window_resamples = 0;
};

struct Point {
    double x = 0.0, y = 0.0;
};

// count ~ Poisson(lambda*pi*radius^2), positions uniform on the disk
std::vector<Point> sample_ppp_disk(double lambda, double radius, std::mt19937_64& rng);

struct GainsSample {
    double s = 0.0;                // serving-link power gain
    std::vector<double> g;         // per-interferer aggregate power gains
};

// S ~ Gamma(M-K+1,1), g_i ~ Gamma(K,1) independent
GainsSample sample_gains_gamma(const Scenario& sc, long n_interferers, std::mt19937_64& rng);

// unit-norm ZF beamformers from i.i.d. CN(0,1) user channels; the serving gain is
// exact, interferer gains use each cell's own beamformer set and an independent
// cross channel
GainsSample sample_gains_exact_zf(const Scenario& sc, long n_interferers,
                                  std::mt19937_64& rng);

// smallest radius whose neglected-tail fluctuation stays below 1e-3 of a pilot
// interference level at the median association distance
double default_window_radius(const NetworkParams& params);

SimOutcome simulate_coverage(const NetworkParams& params, const SimConfig& sim);

EnergyReport simulate_energy(const NetworkParams& params, const SimConfig& sim);

} // namespace pppcov
