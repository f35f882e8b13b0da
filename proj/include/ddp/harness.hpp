#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ddp/route_cost.hpp"
#include "ddp/sa_solver.hpp"
#include "ddp/scenario.hpp"

namespace ddp {

// One experiment = `instances` random scenarios x `runs` annealing runs
// each.  Scenario i is generated from derive_seed(master_seed, i, 0) and
// run r of instance i uses derive_seed(master_seed, i, 1 + r), so results
// depend only on master_seed, never on thread count or scheduling.
struct ExperimentConfig {
    int n_locations = 6;
    double area_km2 = 0.25;
    double demand_min = 0.5;  // kg
    double demand_max = 2.0;  // kg
    int instances = 50;
    int runs = 20;
    SaConfig sa;          // annealing schedule + objective choice
    EvalOptions options;  // drone-reuse / fixed-battery switches
    Params params;
    std::uint64_t master_seed = 1;
    int threads = 0;  // OpenMP worker cap; 0 = runtime default

    void validate() const;  // throws ValidationError
};

// Objective statistics for one instance, over its runs.  stddev is the
// sample standard deviation (n-1), zero when runs == 1.
struct ResultRow {
    int instance = 0;
    double min = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    double mean_runtime_s = 0.0;
};

// Per-instance rows plus their plain averages across instances.
struct ExperimentResult {
    std::vector<ResultRow> rows;
    double avg_min = 0.0;
    double avg_mean = 0.0;
    double avg_std = 0.0;
    double avg_runtime_s = 0.0;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Which knob a sweep turns.  Instance seeds stay fixed across the swept
// values, so for TimeLimit and Budget every value sees the exact same
// scenarios and the curves are directly comparable.
enum class SweepParameter { TimeLimit, Budget, Area, Locations };

struct SweepRow {
    double value = 0.0;
    double avg_min = 0.0;
    double avg_mean = 0.0;
    double avg_std = 0.0;
};

std::vector<SweepRow> run_sweep(const ExperimentConfig& base, SweepParameter parameter,
                                const std::vector<double>& values);

// How much better x_prime is than x, in percent of x_prime
// (improving 2 -> 1 is 100).  x_prime must be nonzero.
double percent_improvement(double x, double x_prime);

extern const char* const kResultCsvHeader;  // instance,min,mean,std,mean_runtime_s
extern const char* const kSweepCsvHeader;   // value,avg_min,avg_mean,avg_std
void write_result_csv(const ExperimentResult& result, std::ostream& out);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace ddp
