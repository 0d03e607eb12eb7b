#include "pppcov/scenario.hpp"

#include <cmath>
#include <string>

#include "pppcov/errors.hpp"

namespace pppcov {

void validate_params(const NetworkParams& p) {
    auto fail = [](const std::string& msg) { throw InvalidConfig(msg); };
    if (!(p.lambda_bs > 0.0) || !std::isfinite(p.lambda_bs)) fail("lambda_bs must be > 0");
    if (!(p.lambda_ue > 0.0) || !std::isfinite(p.lambda_ue)) fail("lambda_ue must be > 0");
    if (p.num_subbands < 1) fail("num_subbands must be >= 1");
    if (!(p.pathloss_alpha > 2.0) || !std::isfinite(p.pathloss_alpha))
        fail("pathloss_alpha must be > 2");
    if (!std::isfinite(p.p_max_dbm)) fail("p_max_dbm must be finite");
    if (!std::isfinite(p.sinr_threshold_db)) fail("sinr_threshold_db must be finite");
    if (!(p.eta > 0.0 && p.eta <= 1.0)) fail("eta must lie in (0,1]");
    if (!(p.p_c >= 0.0)) fail("p_c must be >= 0");
    if (!(p.p_pre >= 0.0)) fail("p_pre must be >= 0");
    if (!(p.p_0 >= 0.0)) fail("p_0 must be >= 0");
}

Scenario derive_scenario(const NetworkParams& p) {
    validate_params(p);

    Scenario s;
    s.k_mean_users = p.lambda_ue / p.lambda_bs;
    s.m_antennas = static_cast<int>(std::llround(s.k_mean_users));
    if (s.m_antennas < 1) s.m_antennas = 1;
    s.k_users = static_cast<int>(std::floor(s.k_mean_users / p.num_subbands));
    if (s.k_users < 1) s.k_users = 1;
    if (s.k_users > s.m_antennas)
        throw InvalidConfig("derived K exceeds antenna count M");

    const double p_max_w = std::pow(10.0, (p.p_max_dbm - 30.0) / 10.0);
    s.p_bs = p_max_w / p.lambda_bs;
    s.noise_term = static_cast<double>(s.k_users) / s.p_bs;
    s.t_linear = std::pow(10.0, p.sinr_threshold_db / 10.0);
    return s;
}

} // namespace pppcov
