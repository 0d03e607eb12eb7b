#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "pppcov/analytic.hpp"
#include "pppcov/config.hpp"
#include "pppcov/errors.hpp"
#include "pppcov/montecarlo.hpp"
#include "pppcov/sweep.hpp"
#include "pppcov/validate.hpp"

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(9);
    os << v;
    return os.str();
}

int run_coverage(const std::string& config_path, bool use_mc, long trials,
                 std::uint64_t seed, bool no_noise) {
    const pppcov::NetworkParams params = pppcov::load_network_params(config_path);
    if (use_mc) {
        pppcov::SimConfig sim;
        sim.trials = trials;
        sim.seed = seed;
        sim.include_noise = !no_noise;
        const pppcov::SimOutcome out = pppcov::simulate_coverage(params, sim);
        std::cout << "coverage = " << fmt(out.estimate) << " +/- " << fmt(out.half_width)
                  << " (99% half-width, " << out.trials_used << " trials)\n";
    } else {
        pppcov::CoverageOptions opts;
        opts.include_noise = !no_noise;
        const pppcov::CoverageResult out = pppcov::coverage_probability(params, opts);
        std::cout << "coverage = " << fmt(out.value) << " +/- " << fmt(out.abs_error_estimate)
                  << " (integration estimate)\n";
    }
    return 0;
}

int run_ee(const std::string& config_path) {
    const pppcov::NetworkParams params = pppcov::load_network_params(config_path);
    const pppcov::EnergyReport rep = pppcov::energy_report(params);
    std::cout << "coverage = " << fmt(rep.coverage) << '\n'
              << "avg_rate = " << fmt(rep.avg_rate) << " bit/symbol\n"
              << "ase      = " << fmt(rep.ase) << " bit/symbol/km^2\n"
              << "aec      = " << fmt(rep.aec) << " W\n"
              << "ee       = " << fmt(rep.ee) << " bit/symbol/W\n";
    return 0;
}

int run_sweep_cmd(const std::string& spec_path, const std::string& out_path) {
    const pppcov::SweepSpec spec = pppcov::load_sweep_spec(spec_path);
    const pppcov::SweepTable table = pppcov::run_sweep(spec);
    pppcov::write_csv(table, out_path);
    long ok = 0, infeasible = 0, failed = 0;
    for (const auto& r : table.rows) {
        if (r.status == pppcov::RowStatus::Ok) ++ok;
        else if (r.status == pppcov::RowStatus::Infeasible) ++infeasible;
        else ++failed;
    }
    std::cout << "wrote " << table.rows.size() << " rows to " << out_path << " (" << ok
              << " ok, " << infeasible << " infeasible, " << failed << " failed)\n";
    return failed > 0 ? 3 : 0;
}

int run_simulate(const std::string& config_path, long trials, std::uint64_t seed,
                 const std::string& gain_model) {
    const pppcov::NetworkParams params = pppcov::load_network_params(config_path);
    pppcov::SimConfig sim;
    sim.trials = trials;
    sim.seed = seed;
    if (gain_model == "zf") sim.gain_model = pppcov::GainModel::ExactZF;
    else if (gain_model != "gamma")
        throw pppcov::InvalidConfig("gain model must be gamma or zf");
    const pppcov::SimOutcome out = pppcov::simulate_coverage(params, sim);
    std::cout << "estimate  = " << fmt(out.estimate) << '\n'
              << "half_width = " << fmt(out.half_width) << '\n'
              << "trials    = " << out.trials_used << '\n'
              << "empty_window_resamples = " << out.empty_window_resamples << '\n';
    return 0;
}

int run_validate() {
    const auto results = pppcov::run_validation_suite();
    long failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        if (!r.pass) ++failures;
    }
    std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
    return failures > 0 ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverage probability and energy efficiency of a random cellular network"};
    app.require_subcommand(1);

    std::string cov_config, ee_config, sweep_spec, sweep_out, sim_config;
    std::string gain_model = "gamma";
    bool use_mc = false, no_noise = false;
    long trials = 100000;
    std::uint64_t seed = 1;

    auto* cov = app.add_subcommand("coverage", "Coverage probability for one configuration");
    cov->add_option("--config", cov_config, "network parameter file")->required();
    cov->add_flag("--mc", use_mc, "estimate by simulation instead of integration");
    cov->add_option("--trials", trials, "simulation trials (with --mc)");
    cov->add_option("--seed", seed, "simulation seed (with --mc)");
    cov->add_flag("--no-noise", no_noise, "interference-limited mode");

    auto* ee = app.add_subcommand("ee", "Energy-efficiency report for one configuration");
    ee->add_option("--config", ee_config, "network parameter file")->required();

    auto* sw = app.add_subcommand("sweep", "Evaluate metrics along a parameter axis");
    sw->add_option("--spec", sweep_spec, "sweep specification file")->required();
    sw->add_option("--out", sweep_out, "output CSV path")->required();

    auto* sim = app.add_subcommand("simulate", "Monte Carlo coverage estimate");
    sim->add_option("--config", sim_config, "network parameter file")->required();
    sim->add_option("--trials", trials, "number of trials");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--gain-model", gain_model, "gamma or zf");

    auto* val = app.add_subcommand("validate", "Run the numerical cross-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cov->parsed()) return run_coverage(cov_config, use_mc, trials, seed, no_noise);
        if (ee->parsed()) return run_ee(ee_config);
        if (sw->parsed()) return run_sweep_cmd(sweep_spec, sweep_out);
        if (sim->parsed()) return run_simulate(sim_config, trials, seed, gain_model);
        if (val->parsed()) return run_validate();
    } catch (const pppcov::InvalidConfig& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const pppcov::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
