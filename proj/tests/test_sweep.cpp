#include <doctest.h>

#include <cmath>
#include <string>

#include "pppcov/analytic.hpp"
#include "pppcov/errors.hpp"
#include "pppcov/sweep.hpp"

using namespace pppcov;

TEST_CASE("axis and metric names are stable identifiers") {
    CHECK(std::string(axis_name(SweepAxis::ThresholdDb)) == "threshold_db");
    CHECK(std::string(axis_name(SweepAxis::BsDensity)) == "bs_density");
    CHECK(std::string(axis_name(SweepAxis::NumSubbands)) == "num_subbands");
    CHECK(std::string(metric_name(Metric::CoverageAnalytic)) == "CoverageAnalytic");
    CHECK(std::string(metric_name(Metric::CoverageMC)) == "CoverageMC");
    CHECK(std::string(metric_name(Metric::EE_Analytic)) == "EE_Analytic");
    CHECK(std::string(metric_name(Metric::EE_MC)) == "EE_MC");
}

TEST_CASE("csv layout is fixed") {
    SweepTable t;
    t.axis = "threshold_db";
    SweepRow a;
    a.axis_value = -5.0;
    a.metric = Metric::CoverageAnalytic;
    a.result = 0.25;
    a.err = 1.5e-7;
    t.rows.push_back(a);
    SweepRow b;
    b.axis_value = 0.0;
    b.metric = Metric::EE_MC;
    b.status = RowStatus::Infeasible;
    t.rows.push_back(b);
    SweepRow c;
    c.axis_value = 5.0;
    c.metric = Metric::CoverageMC;
    c.status = RowStatus::Failed;
    t.rows.push_back(c);

    CHECK(to_csv(t) ==
          "axis,value,metric,result,err,status\n"
          "threshold_db,-5,CoverageAnalytic,0.25,1.5e-07,ok\n"
          "threshold_db,0,EE_MC,,,infeasible\n"
          "threshold_db,5,CoverageMC,,,failed\n");
}

TEST_CASE("numbers print with nine significant digits") {
    SweepTable t;
    t.axis = "bs_density";
    SweepRow r;
    r.axis_value = 4.0;
    r.metric = Metric::EE_Analytic;
    r.result = 1082.9416352201258;
    r.err = 0.000123456789123;
    t.rows.push_back(r);
    CHECK(to_csv(t) ==
          "axis,value,metric,result,err,status\n"
          "bs_density,4,EE_Analytic,1082.94164,0.000123456789,ok\n");
}

TEST_CASE("a threshold sweep produces ordered, decreasing coverage") {
    SweepSpec spec;
    spec.axis = SweepAxis::ThresholdDb;
    spec.values = {-5.0, 0.0, 5.0};
    spec.metrics = {Metric::CoverageAnalytic, Metric::EE_Analytic};
    SweepTable t = run_sweep(spec);
    REQUIRE(t.rows.size() == 6);
    CHECK(t.axis == "threshold_db");

    // rows come out grouped by axis value, metrics in spec order
    CHECK(t.rows[0].axis_value == -5.0);
    CHECK(t.rows[0].metric == Metric::CoverageAnalytic);
    CHECK(t.rows[1].axis_value == -5.0);
    CHECK(t.rows[1].metric == Metric::EE_Analytic);
    CHECK(t.rows[4].axis_value == 5.0);

    for (const auto& row : t.rows) CHECK(row.status == RowStatus::Ok);
    CHECK(t.rows[0].result > t.rows[2].result);
    CHECK(t.rows[2].result > t.rows[4].result);

    // the energy rows match the standalone report
    NetworkParams p;
    p.sinr_threshold_db = 0.0;
    const double ee = energy_report(p).ee;
    CHECK(t.rows[3].result == doctest::Approx(ee).epsilon(1e-9));
}

TEST_CASE("sweeps are deterministic") {
    SweepSpec spec;
    spec.axis = SweepAxis::BsDensity;
    spec.values = {2.0, 4.0};
    spec.metrics = {Metric::CoverageMC};
    spec.sim.trials = 4000;
    spec.sim.seed = 20250101;
    const std::string once = to_csv(run_sweep(spec));
    const std::string twice = to_csv(run_sweep(spec));
    CHECK(once == twice);
    CHECK(once.find("failed") == std::string::npos);
}

TEST_CASE("rows for an underivable point are marked infeasible") {
    SweepSpec spec;
    spec.axis = SweepAxis::BsDensity;
    spec.values = {-1.0, 4.0};
    spec.metrics = {Metric::CoverageAnalytic, Metric::EE_Analytic};
    SweepTable t = run_sweep(spec);
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0].status == RowStatus::Infeasible);
    CHECK(t.rows[1].status == RowStatus::Infeasible);
    CHECK_FALSE(t.rows[0].note.empty());
    CHECK(t.rows[2].status == RowStatus::Ok);
    CHECK(t.rows[3].status == RowStatus::Ok);

    const std::string csv = to_csv(t);
    CHECK(csv.find("bs_density,-1,CoverageAnalytic,,,infeasible\n") != std::string::npos);
}

TEST_CASE("spec validation rejects degenerate sweeps") {
    SweepSpec spec;
    spec.axis = SweepAxis::ThresholdDb;
    spec.metrics = {Metric::CoverageAnalytic};
    CHECK_THROWS_AS(validate_spec(spec), InvalidConfig); // no values
    spec.values = {1.0, 1.0};
    CHECK_THROWS_AS(validate_spec(spec), InvalidConfig); // not increasing
    spec.values = {1.0, 2.0};
    spec.metrics = {};
    CHECK_THROWS_AS(validate_spec(spec), InvalidConfig); // no metrics
    spec.metrics = {Metric::CoverageAnalytic};
    CHECK_NOTHROW(validate_spec(spec));
    spec.axis = SweepAxis::NumSubbands;
    spec.values = {1.0, 2.5};
    CHECK_THROWS_AS(validate_spec(spec), InvalidConfig); // fractional sub-band
}

TEST_CASE("densification verdict tracks the coverage maximum") {
    NetworkParams p;
    p.sinr_threshold_db = 0.0;
    VerdictReport v = verdict(p, {1.0, 4.0, 16.0});
    REQUIRE(v.entries.size() == 3);
    CHECK(v.entries[0].density == 1.0);
    CHECK(v.entries[2].density == 16.0);
    // densification helps coverage under this power normalization
    CHECK(v.entries[2].coverage > v.entries[0].coverage);
    CHECK(v.coverage_argmax_density == 16.0);
    for (const auto& e : v.entries) {
        CHECK(e.coverage > 0.0);
        CHECK(e.ee > 0.0);
    }
    const bool densest = v.coverage_argmax_density == 16.0 && v.ee_argmax_density == 16.0;
    CHECK(v.both_at_densest == densest);
}
