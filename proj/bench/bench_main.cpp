// Timing comparison between the serial reference implementations and their
// OpenMP counterparts.  Build target only; not part of the test suite.
//
//   ddp_bench [locations] [repetitions]
//
// defaults: 8 locations for the enumeration, 3 repetitions (best time wins).
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ddp/common.hpp"
#include "ddp/exact_oracle.hpp"
#include "ddp/harness.hpp"
#include "ddp/scenario.hpp"

#ifdef DDP_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best_seconds(F&& body, int repetitions) {
    double best = 0.0;
    for (int rep = 0; rep < repetitions; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(t1 - t0).count();
        if (rep == 0 || s < best) best = s;
    }
    return best;
}

void report(const std::string& name, double serial_s, double parallel_s) {
    std::cout << name << ": serial " << ddp::format_double(serial_s) << " s, parallel "
              << ddp::format_double(parallel_s) << " s, speedup "
              << ddp::format_double(serial_s / parallel_s) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    int locations = argc > 1 ? std::atoi(argv[1]) : 8;
    int repetitions = argc > 2 ? std::atoi(argv[2]) : 3;
    if (locations < 1 || locations > 9 || repetitions < 1) {
        std::cerr << "usage: ddp_bench [locations 1-9] [repetitions >= 1]\n";
        return 2;
    }
#ifdef DDP_HAVE_OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP not available; both columns run the serial code\n";
#endif

    ddp::Params params;
    ddp::Scenario scn = ddp::generate_random(locations, 0.25, 0.5, 2.0, 42, params);

    // Warm-up and result agreement check in one go.
    ddp::OracleResult serial_res = ddp::enumerate_optimal_serial(scn, false);
    ddp::OracleResult parallel_res = ddp::enumerate_optimal(scn, false);
    if (!(serial_res.solution.entries == parallel_res.solution.entries)) {
        std::cerr << "serial and parallel enumerations disagree -- benchmark aborted\n";
        return 1;
    }

    double oracle_serial = best_seconds(
        [&] { ddp::enumerate_optimal_serial(scn, false); }, repetitions);
    double oracle_parallel = best_seconds(
        [&] { ddp::enumerate_optimal(scn, false); }, repetitions);
    report("enumerate_optimal(" + std::to_string(locations) + " locations)", oracle_serial,
           oracle_parallel);

    ddp::ExperimentConfig cfg;
    cfg.instances = 4;
    cfg.runs = 4;
    cfg.sa.cooling_factor = 0.9;
    cfg.master_seed = 42;
    cfg.threads = 1;
    ddp::ExperimentResult one_thread = ddp::run_experiment(cfg);
    cfg.threads = 0;
    ddp::ExperimentResult all_threads = ddp::run_experiment(cfg);
    for (std::size_t i = 0; i < one_thread.rows.size(); ++i) {
        const ddp::ResultRow& a = one_thread.rows[i];
        const ddp::ResultRow& b = all_threads.rows[i];  // runtimes may differ
        if (a.min != b.min || a.mean != b.mean || a.stddev != b.stddev) {
            std::cerr << "1-thread and all-thread batches disagree -- benchmark aborted\n";
            return 1;
        }
    }
    cfg.threads = 1;
    double batch_serial = best_seconds([&] { ddp::run_experiment(cfg); }, repetitions);
    cfg.threads = 0;
    double batch_parallel = best_seconds([&] { ddp::run_experiment(cfg); }, repetitions);
    report("run_experiment(4 instances x 4 runs)", batch_serial, batch_parallel);
    return 0;
}
