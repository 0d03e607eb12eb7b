#include "pppcov/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "pppcov/analytic.hpp"
#include "pppcov/errors.hpp"
#include "pppcov/rng.hpp"

namespace pppcov {

namespace {

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 9);
    return std::string(buf, ptr);
}

const char* status_name(RowStatus s) {
    switch (s) {
        case RowStatus::Ok: return "ok";
        case RowStatus::Infeasible: return "infeasible";
        default: return "failed";
    }
}

NetworkParams apply_axis(const NetworkParams& base, SweepAxis axis, double value) {
    NetworkParams p = base;
    switch (axis) {
        case SweepAxis::ThresholdDb: p.sinr_threshold_db = value; break;
        case SweepAxis::BsDensity: p.lambda_bs = value; break;
        case SweepAxis::NumSubbands: p.num_subbands = static_cast<int>(std::llround(value)); break;
    }
    return p;
}

int sweep_workers() {
    if (const char* env = std::getenv("PPPCOV_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hc, 1u, 8u));
}

void evaluate_point(const SweepSpec& spec, std::size_t index, std::vector<SweepRow>& rows) {
    const double value = spec.values[index];
    const NetworkParams p = apply_axis(spec.base, spec.axis, value);

    rows.resize(spec.metrics.size());
    for (std::size_t m = 0; m < spec.metrics.size(); ++m) {
        rows[m].axis_value = value;
        rows[m].metric = spec.metrics[m];
    }

    try {
        validate_params(p);
        derive_scenario(p);
    } catch (const InvalidConfig& e) {
        for (auto& r : rows) {
            r.status = RowStatus::Infeasible;
            r.note = e.what();
        }
        return;
    }

    SimConfig sim = spec.sim;
    sim.seed = splitmix64(spec.sim.seed + splitmix64(static_cast<std::uint64_t>(index)));

    // both coverage paths feed two metrics each; evaluate once per point
    bool have_analytic = false, have_mc = false;
    CoverageResult analytic;
    SimOutcome mc;
    auto get_analytic = [&]() -> const CoverageResult& {
        if (!have_analytic) {
            analytic = coverage_probability(p);
            have_analytic = true;
        }
        return analytic;
    };
    auto get_mc = [&]() -> const SimOutcome& {
        if (!have_mc) {
            mc = simulate_coverage(p, sim);
            have_mc = true;
        }
        return mc;
    };

    for (std::size_t m = 0; m < spec.metrics.size(); ++m) {
        SweepRow& row = rows[m];
        try {
            switch (spec.metrics[m]) {
                case Metric::CoverageAnalytic: {
                    const CoverageResult& c = get_analytic();
                    row.result = c.value;
                    row.err = c.abs_error_estimate;
                    break;
                }
                case Metric::CoverageMC: {
                    const SimOutcome& o = get_mc();
                    row.result = o.estimate;
                    row.err = o.half_width;
                    break;
                }
                case Metric::EE_Analytic: {
                    const CoverageResult& c = get_analytic();
                    const EnergyReport base = energy_report_from_coverage(p, 1.0);
                    row.result = base.ee * c.value;
                    row.err = base.ee * c.abs_error_estimate;
                    break;
                }
                case Metric::EE_MC: {
                    const SimOutcome& o = get_mc();
                    const EnergyReport base = energy_report_from_coverage(p, 1.0);
                    row.result = base.ee * o.estimate;
                    row.err = base.ee * o.half_width;
                    break;
                }
            }
        } catch (const Error& e) {
            row.status = RowStatus::Failed;
            row.result = 0.0;
            row.err = 0.0;
            row.note = e.what();
        }
    }
}

} // namespace

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::ThresholdDb: return "threshold_db";
        case SweepAxis::BsDensity: return "bs_density";
        default: return "num_subbands";
    }
}

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::CoverageAnalytic: return "CoverageAnalytic";
        case Metric::CoverageMC: return "CoverageMC";
        case Metric::EE_Analytic: return "EE_Analytic";
        default: return "EE_MC";
    }
}

void validate_spec(const SweepSpec& spec) {
    if (spec.values.empty()) throw InvalidConfig("sweep: values must be non-empty");
    for (std::size_t i = 1; i < spec.values.size(); ++i)
        if (!(spec.values[i] > spec.values[i - 1]))
            throw InvalidConfig("sweep: values must be strictly increasing");
    if (spec.metrics.empty()) throw InvalidConfig("sweep: metrics must be non-empty");
    if (spec.axis == SweepAxis::NumSubbands) {
        for (double v : spec.values) {
            if (std::abs(v - std::llround(v)) > 0.0 || v < 1.0)
                throw InvalidConfig("sweep: sub-band axis needs positive integer values");
        }
    }
}

SweepTable run_sweep(const SweepSpec& spec) {
    validate_spec(spec);

    SweepTable table;
    table.axis = axis_name(spec.axis);
    std::vector<std::vector<SweepRow>> per_point(spec.values.size());

    const int workers =
        std::min<int>(sweep_workers(), static_cast<int>(spec.values.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < spec.values.size(); ++i)
            evaluate_point(spec, i, per_point[i]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < spec.values.size();
                     i += static_cast<std::size_t>(workers))
                    evaluate_point(spec, i, per_point[i]);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (auto& rows : per_point)
        for (auto& r : rows) table.rows.push_back(std::move(r));
    return table;
}

std::string to_csv(const SweepTable& table) {
    std::string out = "axis,value,metric,result,err,status\n";
    for (const auto& r : table.rows) {
        out += table.axis;
        out += ',';
        out += format_double(r.axis_value);
        out += ',';
        out += metric_name(r.metric);
        out += ',';
        if (r.status == RowStatus::Ok) {
            out += format_double(r.result);
            out += ',';
            out += format_double(r.err);
        } else {
            out += ',';
        }
        out += ',';
        out += status_name(r.status);
        out += '\n';
    }
    return out;
}

void write_csv(const SweepTable& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidConfig("cannot open output file: " + path);
    const std::string body = to_csv(table);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!f) throw InvalidConfig("short write to: " + path);
}

VerdictReport verdict(const NetworkParams& params, const std::vector<double>& densities) {
    if (densities.empty()) throw InvalidConfig("verdict: densities must be non-empty");

    VerdictReport rep;
    rep.entries.reserve(densities.size());
    for (double d : densities) {
        NetworkParams p = params;
        p.lambda_bs = d;
        const CoverageResult c = coverage_probability(p);
        const EnergyReport e = energy_report_from_coverage(p, c.value);
        rep.entries.push_back({d, c.value, e.ee});
    }

    const auto cov_best = std::max_element(
        rep.entries.begin(), rep.entries.end(),
        [](const VerdictEntry& a, const VerdictEntry& b) { return a.coverage < b.coverage; });
    const auto ee_best = std::max_element(
        rep.entries.begin(), rep.entries.end(),
        [](const VerdictEntry& a, const VerdictEntry& b) { return a.ee < b.ee; });
    rep.coverage_argmax_density = cov_best->density;
    rep.ee_argmax_density = ee_best->density;

    const double densest = *std::max_element(densities.begin(), densities.end());
    rep.both_at_densest =
        cov_best->density == densest && ee_best->density == densest;

    long near_best = 0;
    for (const auto& e : rep.entries)
        if (e.coverage > cov_best->coverage - 5e-3) ++near_best;
    rep.coverage_saturated = near_best >= 2;
    return rep;
}

} // namespace pppcov
