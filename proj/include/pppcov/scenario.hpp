#pragma once

namespace pppcov {

// Network-level inputs. Densities are per km^2, distances km, powers watts
// unless a field name says otherwise.
struct NetworkParams {
    double lambda_bs = 4.0;        // BS density (1/km^2)
    double lambda_ue = 32.0;       // user density (1/km^2)
    int num_subbands = 1;          // L, frequency sub-bands per cell
    double pathloss_alpha = 4.0;   // path-loss exponent, > 2
    double p_max_dbm = 40.0;       // total TX power budget per unit area (dBm)
    double sinr_threshold_db = 1.0;// SINR threshold T (dB)
    double eta = 0.318;            // power amplifier efficiency, (0,1]
    double p_c = 14.8;             // per-antenna circuit power (W)
    double p_pre = 1.74;           // precoding power coefficient (W)
    double p_0 = 65.8;             // static site power (W)
};

// Throws InvalidConfig if any invariant fails.
void validate_params(const NetworkParams& p);

// Per-cell quantities derived from NetworkParams.
struct Scenario {
    int m_antennas = 1;      // M = round(lambda_ue / lambda_bs), min 1
    double k_mean_users = 1; // mean users per cell lambda_ue / lambda_bs
    int k_users = 1;         // K = max(1, floor(k_mean / L)), served per sub-band
    double p_bs = 1.0;       // per-BS power budget P = P_max_linear / lambda_bs (W)
    double noise_term = 1.0; // K / P, the normalized noise in the SINR denominator
    double t_linear = 1.0;   // 10^(threshold_db / 10)
};

// Validates and derives. K <= M holds by construction under this rounding
// policy (floor <= round); the check stays as a guard.
Scenario derive_scenario(const NetworkParams& p);

} // namespace pppcov
