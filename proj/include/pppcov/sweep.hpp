#pragma once

#include <string>
#include <vector>

#include "pppcov/montecarlo.hpp"
#include "pppcov/scenario.hpp"

namespace pppcov {

enum class SweepAxis { ThresholdDb, BsDensity, NumSubbands };
enum class Metric { CoverageAnalytic, CoverageMC, EE_Analytic, EE_MC };
enum class RowStatus { Ok, Infeasible, Failed };

const char* axis_name(SweepAxis axis);
const char* metric_name(Metric metric);

struct SweepSpec {
    NetworkParams base;
    SweepAxis axis = SweepAxis::ThresholdDb;
    std::vector<double> values;    // strictly increasing
    std::vector<Metric> metrics;
    SimConfig sim;                 // seed is the sweep master seed for MC metrics
};

// values non-empty and strictly increasing; metrics non-empty; integral values
// for the sub-band axis
void validate_spec(const SweepSpec& spec);

struct SweepRow {
    double axis_value = 0.0;
    Metric metric = Metric::CoverageAnalytic;
    double result = 0.0;
    double err = 0.0;              // integration estimate or confidence half-width
    RowStatus status = RowStatus::Ok;
    std::string note;              // failure reason, empty otherwise
};

struct SweepTable {
    std::string axis;
    std::vector<SweepRow> rows;    // ordered by (value index, metric index)
};

SweepTable run_sweep(const SweepSpec& spec);

// header `axis,value,metric,result,err,status`, 9 significant digits, '\n' endings;
// non-ok rows leave result and err empty
std::string to_csv(const SweepTable& table);
void write_csv(const SweepTable& table, const std::string& path);

struct VerdictEntry {
    double density = 0.0;
    double coverage = 0.0;
    double ee = 0.0;
};

struct VerdictReport {
    std::vector<VerdictEntry> entries;
    double coverage_argmax_density = 0.0;
    double ee_argmax_density = 0.0;
    bool both_at_densest = false;
    bool coverage_saturated = false;   // several densities within 5e-3 of the best
};

// coverage and EE across BS densities at fixed lambda_ue (so lambda_bs*M stays
// pinned to the user density by the antenna derivation)
VerdictReport verdict(const NetworkParams& params, const std::vector<double>& densities);

} // namespace pppcov
