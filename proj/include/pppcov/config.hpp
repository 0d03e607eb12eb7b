#pragma once

#include <string>

#include "pppcov/scenario.hpp"
#include "pppcov/sweep.hpp"

namespace pppcov {

// `key = value` lines, `#` starts a comment, keys are the NetworkParams field
// names; unknown or duplicate keys and values with unit suffixes are rejected
NetworkParams parse_network_params(const std::string& text);
NetworkParams load_network_params(const std::string& path);

// same format plus axis/values/metrics and the simulation keys
// (trials, seed, window_radius, gain_model, confidence_level, include_noise)
SweepSpec parse_sweep_spec(const std::string& text);
SweepSpec load_sweep_spec(const std::string& path);

} // namespace pppcov
