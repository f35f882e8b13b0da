#include "ddp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "ddp/common.hpp"

#ifdef DDP_HAVE_OPENMP
#include <omp.h>
#endif

namespace ddp {

void ExperimentConfig::validate() const {
    if (n_locations < 1)
        throw ValidationError("ExperimentConfig: n_locations must be at least 1");
    if (!(area_km2 > 0.0)) throw ValidationError("ExperimentConfig: area_km2 must be positive");
    if (!(demand_min > 0.0) || demand_max < demand_min)
        throw ValidationError("ExperimentConfig: need 0 < demand_min <= demand_max");
    if (instances < 1) throw ValidationError("ExperimentConfig: instances must be at least 1");
    if (runs < 1) throw ValidationError("ExperimentConfig: runs must be at least 1");
    if (threads < 0) throw ValidationError("ExperimentConfig: threads must not be negative");
    sa.validate();
    options.validate();
    params.validate();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const int instances = cfg.instances, runs = cfg.runs;

    std::vector<Scenario> scenarios;
    scenarios.reserve(static_cast<std::size_t>(instances));
    for (int i = 0; i < instances; ++i)
        scenarios.push_back(generate_random(cfg.n_locations, cfg.area_km2, cfg.demand_min,
                                            cfg.demand_max,
                                            derive_seed(cfg.master_seed, static_cast<std::uint64_t>(i), 0),
                                            cfg.params));

    // Every (instance, run) cell is independent, so the flat grid can be
    // filled in any order; each cell's seed is fixed up front.
    const long total = static_cast<long>(instances) * runs;
    std::vector<double> objective(static_cast<std::size_t>(total));
    std::vector<double> runtime(static_cast<std::size_t>(total));
#ifdef DDP_HAVE_OPENMP
    const int workers = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (long cell = 0; cell < total; ++cell) {
        const int i = static_cast<int>(cell / runs);
        const int r = static_cast<int>(cell % runs);
        SaConfig sa = cfg.sa;
        sa.seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(i),
                              1 + static_cast<std::uint64_t>(r));
        auto t0 = std::chrono::steady_clock::now();
        SaResult res = simulated_annealing(scenarios[static_cast<std::size_t>(i)], sa, cfg.options);
        auto t1 = std::chrono::steady_clock::now();
        auto k = static_cast<std::size_t>(cell);
        objective[k] = sa.minimize_cost ? res.breakdown.total_cost : res.breakdown.delivery_time;
        runtime[k] = std::chrono::duration<double>(t1 - t0).count();
    }

    ExperimentResult out;
    out.rows.resize(static_cast<std::size_t>(instances));
    for (int i = 0; i < instances; ++i) {
        ResultRow& row = out.rows[static_cast<std::size_t>(i)];
        row.instance = i;
        double sum = 0.0, sum_rt = 0.0, best = objective[static_cast<std::size_t>(i) * runs];
        for (int r = 0; r < runs; ++r) {
            double v = objective[static_cast<std::size_t>(i) * runs + r];
            best = std::min(best, v);
            sum += v;
            sum_rt += runtime[static_cast<std::size_t>(i) * runs + r];
        }
        row.min = best;
        row.mean = sum / runs;
        row.mean_runtime_s = sum_rt / runs;
        double ss = 0.0;
        for (int r = 0; r < runs; ++r) {
            double d = objective[static_cast<std::size_t>(i) * runs + r] - row.mean;
            ss += d * d;
        }
        row.stddev = runs > 1 ? std::sqrt(ss / (runs - 1)) : 0.0;
        out.avg_min += row.min;
        out.avg_mean += row.mean;
        out.avg_std += row.stddev;
        out.avg_runtime_s += row.mean_runtime_s;
    }
    out.avg_min /= instances;
    out.avg_mean /= instances;
    out.avg_std /= instances;
    out.avg_runtime_s /= instances;
    return out;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& base, SweepParameter parameter,
                                const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("run_sweep: no values to sweep over");
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double value : values) {
        ExperimentConfig cfg = base;
        switch (parameter) {
            case SweepParameter::TimeLimit:
                cfg.params.time_limit = value;
                break;
            case SweepParameter::Budget:
                cfg.params.budget = value;
                break;
            case SweepParameter::Area:
                cfg.area_km2 = value;
                break;
            case SweepParameter::Locations: {
                double whole = std::floor(value);
                if (whole != value || whole < 1.0)
                    throw ValidationError("run_sweep: location counts must be whole and positive");
                cfg.n_locations = static_cast<int>(whole);
                break;
            }
        }
        ExperimentResult res = run_experiment(cfg);
        rows.push_back({value, res.avg_min, res.avg_mean, res.avg_std});
    }
    return rows;
}

double percent_improvement(double x, double x_prime) {
    if (x_prime == 0.0) throw ValidationError("percent_improvement: reference value is zero");
    return (x - x_prime) / x_prime * 100.0;
}

const char* const kResultCsvHeader = "instance,min,mean,std,mean_runtime_s";
const char* const kSweepCsvHeader = "value,avg_min,avg_mean,avg_std";

void write_result_csv(const ExperimentResult& result, std::ostream& out) {
    out << kResultCsvHeader << '\n';
    for (const ResultRow& row : result.rows)
        out << row.instance << ',' << format_double(row.min) << ',' << format_double(row.mean)
            << ',' << format_double(row.stddev) << ',' << format_double(row.mean_runtime_s)
            << '\n';
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& row : rows)
        out << format_double(row.value) << ',' << format_double(row.avg_min) << ','
            << format_double(row.avg_mean) << ',' << format_double(row.avg_std) << '\n';
}

}  // namespace ddp
