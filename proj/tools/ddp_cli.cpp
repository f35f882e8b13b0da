// Command-line front end: instance generation, annealing solver, experiment
// batches and sweeps, exhaustive oracle, LP export, and validation.
#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ddp/common.hpp"
#include "ddp/energy_model.hpp"
#include "ddp/exact_oracle.hpp"
#include "ddp/harness.hpp"
#include "ddp/milp_model.hpp"
#include "ddp/route_cost.hpp"
#include "ddp/sa_solver.hpp"
#include "ddp/scenario.hpp"
#include "ddp/solution.hpp"

namespace {

using namespace ddp;

// ---------- shared flag groups ----------

void add_param_options(CLI::App* cmd, Params& p) {
    cmd->add_option("--drone-cost", p.drone_cost, "Drone purchase price, $")->capture_default_str();
    cmd->add_option("--capacity", p.capacity, "Carrying capacity (battery + payload), kg")
        ->capture_default_str();
    cmd->add_option("--speed", p.speed, "Cruise speed, m/s")->capture_default_str();
    cmd->add_option("--service-time", p.service_time, "Per-stop service time, s")
        ->capture_default_str();
    cmd->add_option("--energy-density", p.energy_density, "Battery energy density, kJ/kg")
        ->capture_default_str();
    cmd->add_option("--energy-price", p.energy_price, "Battery price, $/kJ")->capture_default_str();
    cmd->add_option("--alpha", p.power_model.alpha, "Power per carried kg, kW/kg")
        ->capture_default_str();
    cmd->add_option("--beta", p.power_model.beta, "Power at zero load, kW")->capture_default_str();
    cmd->add_option("--max-drones", p.max_drones, "Fleet size cap")->capture_default_str();
    cmd->add_option("--budget", p.budget, "Total budget, $")->capture_default_str();
    cmd->add_option("--time-limit", p.time_limit, "Delivery deadline, s")->capture_default_str();
    cmd->add_option("--big-k", p.big_k, "Penalty / linearization constant")->capture_default_str();
}

struct FrameFitFlags {
    bool enabled = false;
    FrameSpec frame;
    double fit_min = 0.0;
    double fit_max = 3.0;
    double fit_step = 0.001;
};

void add_frame_options(CLI::App* cmd, FrameFitFlags& f) {
    cmd->add_flag("--fit-frame", f.enabled,
                  "Derive --alpha/--beta by fitting the rotor-physics hover-power curve");
    cmd->add_option("--rotors", f.frame.rotor_count, "Rotor count")->capture_default_str();
    cmd->add_option("--air-density", f.frame.fluid_density, "Air density, kg/m^3")
        ->capture_default_str();
    cmd->add_option("--disc-area", f.frame.rotor_disc_area, "Swept area per rotor, m^2")
        ->capture_default_str();
    cmd->add_option("--frame-weight", f.frame.frame_weight, "Frame + battery weight, kg")
        ->capture_default_str();
    cmd->add_option("--gravity", f.frame.gravity, "Gravitational acceleration, m/s^2")
        ->capture_default_str();
    cmd->add_option("--fit-min", f.fit_min, "Fit grid low end, kg")->capture_default_str();
    cmd->add_option("--fit-max", f.fit_max, "Fit grid high end, kg")->capture_default_str();
    cmd->add_option("--fit-step", f.fit_step, "Fit grid step, kg")->capture_default_str();
}

std::optional<FrameSpec> apply_frame_fit(const FrameFitFlags& f, Params& p) {
    if (!f.enabled) return std::nullopt;
    auto [watts, report] = fit_linear(f.frame, f.fit_min, f.fit_max, f.fit_step);
    p.power_model = to_kilowatts(watts);
    std::cerr << "fitted power model: alpha=" << format_double(watts.alpha)
              << " W/kg, beta=" << format_double(watts.beta) << " W (mean error "
              << format_double(report.mean_percent_error) << "%, max diff "
              << format_double(report.max_abs_difference) << " W)\n";
    return f.frame;
}

struct SaFlags {
    double initial_temperature = 1.0;
    double final_temperature = 0.001;
    double cooling_factor = 0.99;
    int rounds_per_phase = 1000;
    std::string objective = "time";
};

void add_sa_options(CLI::App* cmd, SaFlags& f) {
    cmd->add_option("--objective", f.objective, "Objective: time (fleet within budget) or cost "
                                                "(cheapest within deadline)")
        ->check(CLI::IsMember({"time", "cost"}))
        ->capture_default_str();
    cmd->add_option("--initial-temp", f.initial_temperature, "Annealing start temperature")
        ->capture_default_str();
    cmd->add_option("--final-temp", f.final_temperature, "Annealing stop temperature")
        ->capture_default_str();
    cmd->add_option("--cooling", f.cooling_factor, "Temperature multiplier per phase")
        ->capture_default_str();
    cmd->add_option("--rounds", f.rounds_per_phase, "Exchange attempts per phase")
        ->capture_default_str();
}

SaConfig to_sa_config(const SaFlags& f) {
    SaConfig cfg;
    cfg.initial_temperature = f.initial_temperature;
    cfg.final_temperature = f.final_temperature;
    cfg.cooling_factor = f.cooling_factor;
    cfg.rounds_per_phase = f.rounds_per_phase;
    cfg.minimize_cost = f.objective == "cost";
    return cfg;
}

struct ModeFlags {
    bool no_reuse = false;
    double fixed_battery = 0.0;
    CLI::Option* fixed_battery_opt = nullptr;
};

void add_mode_options(CLI::App* cmd, ModeFlags& f) {
    cmd->add_flag("--no-reuse", f.no_reuse, "One drone per route; skip the fleet-size search");
    f.fixed_battery_opt = cmd->add_option(
        "--fixed-battery", f.fixed_battery, "Give every route a battery of this weight, kg");
}

EvalOptions to_eval_options(const ModeFlags& f) {
    EvalOptions opts;
    opts.reuse_disabled = f.no_reuse;
    if (f.fixed_battery_opt != nullptr && f.fixed_battery_opt->count() > 0)
        opts.fixed_battery_weight = f.fixed_battery;
    return opts;
}

// ---------- small IO helpers ----------

SolutionString read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solution file " + path);
    SolutionString s;
    std::string token;
    while (in >> token) {
        std::string digits;
        for (char ch : token)
            if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) digits += ch;
        if (digits.empty()) continue;
        try {
            s.entries.push_back(std::stoi(digits));
        } catch (const std::exception&) {
            throw ParseError(path + ": bad solution entry '" + token + "'");
        }
    }
    if (s.entries.empty()) throw ParseError(path + ": no solution entries found");
    return s;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open " + path + " for writing");
    return out;
}

void print_breakdown(const CostBreakdown& b) {
    std::cout << "total_cost=" << format_double(b.total_cost) << '\n'
              << "delivery_time=" << format_double(b.delivery_time) << '\n'
              << "energy_cost=" << format_double(b.energy_cost) << '\n'
              << "drone_cost=" << format_double(b.drone_cost) << '\n'
              << "drone_count=" << b.drone_count << '\n'
              << "penalized=" << (b.penalized ? 1 : 0) << '\n';
}

// ---------- subcommands ----------

struct GenerateArgs {
    int locations = 6;
    double area_km2 = 0.25;
    double demand_min = 0.5;
    double demand_max = 2.0;
    std::uint64_t seed = 1;
    std::string output;
    std::string distances;
    std::vector<std::string> battery_specs;
    Params params;
    FrameFitFlags frame;
};

int cmd_generate(GenerateArgs& a) {
    std::optional<FrameSpec> frame = apply_frame_fit(a.frame, a.params);
    std::vector<BatteryType> types;
    for (const std::string& spec : a.battery_specs) {
        BatteryType t;
        char sep1 = 0, sep2 = 0;
        std::istringstream parse(spec);
        parse >> t.weight >> sep1 >> t.energy >> sep2 >> t.cost;
        if (!parse || sep1 != ',' || sep2 != ',')
            throw ParseError("--battery-type expects weight,energy,cost; got '" + spec + "'");
        types.push_back(t);
    }
    Scenario scn = generate_random(a.locations, a.area_km2, a.demand_min, a.demand_max, a.seed,
                                   a.params);
    if (!types.empty() || frame.has_value()) {
        std::vector<double> demands;
        for (int i = 1; i <= scn.location_count(); ++i) demands.push_back(scn.demand(i));
        scn = Scenario(scn.locations(), demands, a.params, types, frame);
    }
    save_scenario(scn, a.output);
    std::cout << "wrote " << scn.location_count() << "-location scenario to " << a.output << '\n';
    if (!a.distances.empty()) {
        std::ofstream out = open_output(a.distances);
        write_distance_csv(scn, out);
        std::cout << "wrote distance matrix to " << a.distances << '\n';
    }
    return 0;
}

struct SolveArgs {
    std::string scenario;  // single-scenario mode when set, batch mode when empty
    SaFlags sa;
    ModeFlags mode;
    std::uint64_t seed = 1;
    int runs = 1;
    std::string trace;
    std::string solution_out;
    std::string costs_out;
    // batch mode
    int locations = 6;
    double area_km2 = 0.25;
    double demand_min = 0.5;
    double demand_max = 2.0;
    int instances = 50;
    int threads = 0;
    std::string output;
    Params params;
};

int solve_single(SolveArgs& a) {
    Scenario scn = load_scenario(a.scenario);
    EvalOptions opts = to_eval_options(a.mode);
    SaConfig sa = to_sa_config(a.sa);
    if (a.runs < 1) throw ValidationError("--runs must be at least 1");

    SaResult best;
    double best_objective = 0.0, sum = 0.0, sum_sq = 0.0;
    for (int r = 0; r < a.runs; ++r) {
        sa.seed = a.runs == 1 ? a.seed : derive_seed(a.seed, 0, 1 + static_cast<std::uint64_t>(r));
        SaResult res = simulated_annealing(scn, sa, opts);
        double obj = sa.minimize_cost ? res.breakdown.total_cost : res.breakdown.delivery_time;
        if (r == 0 || obj < best_objective) {
            best_objective = obj;
            best = std::move(res);
        }
        sum += obj;
        sum_sq += obj * obj;
    }

    std::cout << "objective=" << format_double(best_objective) << '\n'
              << "solution=" << to_string(best.solution) << '\n';
    print_breakdown(best.breakdown);
    if (a.runs > 1) {
        double mean = sum / a.runs;
        double var = (sum_sq - sum * mean) / (a.runs - 1);
        std::cout << "runs=" << a.runs << '\n'
                  << "min=" << format_double(best_objective) << '\n'
                  << "mean=" << format_double(mean) << '\n'
                  << "std=" << format_double(var > 0.0 ? std::sqrt(var) : 0.0) << '\n';
    }
    if (!a.solution_out.empty()) {
        std::ofstream out = open_output(a.solution_out);
        out << to_string(best.solution) << '\n';
    }
    if (!a.trace.empty()) {
        std::ofstream out = open_output(a.trace);
        write_trace_csv(best.trace, out);
    }
    if (!a.costs_out.empty()) {
        std::ofstream out = open_output(a.costs_out);
        out << kCostBreakdownCsvHeader << '\n' << to_csv_row(best.breakdown) << '\n';
    }
    if (best.breakdown.penalized) {
        std::cerr << "no penalty-free solution found; the result above is infeasible\n";
        return 3;
    }
    return 0;
}

ExperimentConfig to_experiment_config(const SolveArgs& a) {
    ExperimentConfig cfg;
    cfg.n_locations = a.locations;
    cfg.area_km2 = a.area_km2;
    cfg.demand_min = a.demand_min;
    cfg.demand_max = a.demand_max;
    cfg.instances = a.instances;
    cfg.runs = a.runs;
    cfg.sa = to_sa_config(a.sa);
    cfg.options = to_eval_options(a.mode);
    cfg.params = a.params;
    cfg.master_seed = a.seed;
    cfg.threads = a.threads;
    return cfg;
}

int solve_batch(SolveArgs& a) {
    ExperimentConfig cfg = to_experiment_config(a);
    ExperimentResult result = run_experiment(cfg);
    std::cout << "instances=" << cfg.instances << '\n'
              << "runs=" << cfg.runs << '\n'
              << "avg_min=" << format_double(result.avg_min) << '\n'
              << "avg_mean=" << format_double(result.avg_mean) << '\n'
              << "avg_std=" << format_double(result.avg_std) << '\n'
              << "avg_runtime_s=" << format_double(result.avg_runtime_s) << '\n';
    if (!a.output.empty()) {
        std::ofstream out = open_output(a.output);
        write_result_csv(result, out);
        std::cout << "wrote per-instance results to " << a.output << '\n';
    }
    return 0;
}

struct SweepArgs {
    SolveArgs base;
    std::string parameter;
    std::vector<double> values;
};

int cmd_sweep(SweepArgs& a) {
    SweepParameter parameter;
    if (a.parameter == "time-limit")
        parameter = SweepParameter::TimeLimit;
    else if (a.parameter == "budget")
        parameter = SweepParameter::Budget;
    else if (a.parameter == "area")
        parameter = SweepParameter::Area;
    else
        parameter = SweepParameter::Locations;
    std::vector<SweepRow> rows = run_sweep(to_experiment_config(a.base), parameter, a.values);
    if (a.base.output.empty()) {
        write_sweep_csv(rows, std::cout);
    } else {
        std::ofstream out = open_output(a.base.output);
        write_sweep_csv(rows, out);
        for (const SweepRow& row : rows)
            std::cout << a.parameter << '=' << format_double(row.value)
                      << " avg_min=" << format_double(row.avg_min)
                      << " avg_mean=" << format_double(row.avg_mean)
                      << " avg_std=" << format_double(row.avg_std) << '\n';
        std::cout << "wrote sweep results to " << a.base.output << '\n';
    }
    return 0;
}

struct OracleArgs {
    std::string scenario;
    std::string objective = "time";
    ModeFlags mode;
    bool serial = false;
    std::string solution_out;
};

int cmd_oracle(OracleArgs& a) {
    Scenario scn = load_scenario(a.scenario);
    EvalOptions opts = to_eval_options(a.mode);
    bool minimize_cost = a.objective == "cost";
    OracleResult res = a.serial ? enumerate_optimal_serial(scn, minimize_cost, opts)
                                : enumerate_optimal(scn, minimize_cost, opts);
    std::cout << "objective=" << format_double(res.objective) << '\n'
              << "solution=" << to_string(res.solution) << '\n';
    print_breakdown(res.breakdown);
    if (!a.solution_out.empty()) {
        std::ofstream out = open_output(a.solution_out);
        out << to_string(res.solution) << '\n';
    }
    if (res.breakdown.penalized) {
        std::cerr << "every solution of this scenario violates a constraint\n";
        return 3;
    }
    return 0;
}

struct ExportLpArgs {
    std::string scenario;
    std::string objective = "time";
    bool battery_types = false;
    std::string output;
};

int cmd_export_lp(ExportLpArgs& a) {
    Scenario scn = load_scenario(a.scenario);
    MilpModel model = build_model(
        scn, a.objective == "cost" ? MilpObjective::MinCost : MilpObjective::MinTime,
        a.battery_types);
    if (a.output.empty()) {
        export_lp(model, std::cout);
    } else {
        export_lp(model, a.output);
        std::cout << "wrote " << model.variables().size() << " variables and "
                  << model.rows().size() << " rows to " << a.output << '\n';
    }
    return 0;
}

struct ValidateArgs {
    std::string scenario;
    std::string solution;
    std::string objective = "time";
    ModeFlags mode;
    bool milp = false;
    double tol = 1e-6;
};

int cmd_validate(ValidateArgs& a) {
    Scenario scn = load_scenario(a.scenario);
    if (a.solution.empty()) {
        std::cout << "scenario OK: " << scn.location_count() << " locations, "
                  << scn.battery_types().size() << " battery types"
                  << (scn.frame().has_value() ? ", airframe attached" : "") << '\n';
        return 0;
    }
    SolutionString s = read_solution_file(a.solution);
    validate_solution(s, scn.location_count());
    EvalOptions opts = to_eval_options(a.mode);
    bool minimize_cost = a.objective == "cost";
    CostBreakdown b = cost(s, minimize_cost, scn, opts);
    std::cout << "solution OK: " << nonempty_routes(s).size() << " routes\n";
    print_breakdown(b);
    if (b.penalized) {
        std::cerr << "solution violates a constraint (penalty applied)\n";
        return 3;
    }
    if (a.milp) {
        MilpModel model = build_model(
            scn, minimize_cost ? MilpObjective::MinCost : MilpObjective::MinTime, false);
        RouteTiming u = route_times(s, scn);
        std::vector<int> route_to_drone;
        list_schedule_assign(u, b.drone_count, route_to_drone);
        MilpAssignment asn = string_to_assignment(s, route_to_drone, scn, model);
        std::vector<Violation> violations = validate_assignment(model, asn, a.tol);
        if (violations.empty()) {
            std::cout << "assignment satisfies all " << model.rows().size() << " rows\n";
        } else {
            for (const Violation& v : violations)
                std::cerr << "violated " << v.row << " by " << format_double(v.amount) << '\n';
            return 2;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-trip drone delivery toolkit: generate instances, solve by simulated "
                 "annealing, run experiment batches and sweeps, enumerate exact optima, and "
                 "export/check MILP models"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Write a random scenario as JSON");
    generate->add_option("-n,--locations", gen.locations, "Delivery locations")
        ->capture_default_str();
    generate->add_option("--area", gen.area_km2, "Square service area, km^2")
        ->capture_default_str();
    generate->add_option("--demand-min", gen.demand_min, "Smallest demand, kg")
        ->capture_default_str();
    generate->add_option("--demand-max", gen.demand_max, "Largest demand, kg")
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "Scenario seed")->capture_default_str();
    generate->add_option("-o,--output", gen.output, "Scenario JSON path")->required();
    generate->add_option("--distances", gen.distances, "Also write the distance matrix CSV here");
    generate->add_option("--battery-type", gen.battery_specs,
                         "Add a purchasable battery type as weight,energy,cost (repeatable)");
    add_param_options(generate, gen.params);
    add_frame_options(generate, gen.frame);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "Anneal one scenario file, or a batch of random instances when no "
                 "--scenario is given");
    solve->add_option("-s,--scenario", solve_args.scenario, "Scenario JSON to solve");
    solve->add_option("--seed", solve_args.seed, "Run seed (master seed in batch mode)")
        ->capture_default_str();
    solve->add_option("--runs", solve_args.runs, "Annealing runs (per instance in batch mode)")
        ->capture_default_str();
    solve->add_option("--trace", solve_args.trace, "Write the best run's phase trace CSV here");
    solve->add_option("--solution", solve_args.solution_out, "Write the best solution string here");
    solve->add_option("--costs", solve_args.costs_out, "Write the best cost breakdown CSV here");
    solve->add_option("-n,--locations", solve_args.locations, "Batch: delivery locations")
        ->capture_default_str();
    solve->add_option("--area", solve_args.area_km2, "Batch: square service area, km^2")
        ->capture_default_str();
    solve->add_option("--demand-min", solve_args.demand_min, "Batch: smallest demand, kg")
        ->capture_default_str();
    solve->add_option("--demand-max", solve_args.demand_max, "Batch: largest demand, kg")
        ->capture_default_str();
    solve->add_option("--instances", solve_args.instances, "Batch: random instances")
        ->capture_default_str();
    solve->add_option("--threads", solve_args.threads, "Batch: worker cap, 0 = all cores")
        ->capture_default_str();
    solve->add_option("-o,--output", solve_args.output, "Batch: per-instance result CSV path");
    add_sa_options(solve, solve_args.sa);
    add_mode_options(solve, solve_args.mode);
    add_param_options(solve, solve_args.params);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Re-run a batch for each value of one knob, same instances throughout");
    sweep->add_option("--parameter", sweep_args.parameter, "Knob to sweep")
        ->required()
        ->check(CLI::IsMember({"time-limit", "budget", "area", "locations"}));
    sweep->add_option("--values", sweep_args.values, "Values to sweep over")
        ->required()
        ->expected(-1);
    sweep->add_option("--seed", sweep_args.base.seed, "Master seed")->capture_default_str();
    sweep->add_option("--runs", sweep_args.base.runs, "Runs per instance")->capture_default_str();
    sweep->add_option("-n,--locations", sweep_args.base.locations, "Delivery locations")
        ->capture_default_str();
    sweep->add_option("--area", sweep_args.base.area_km2, "Square service area, km^2")
        ->capture_default_str();
    sweep->add_option("--demand-min", sweep_args.base.demand_min, "Smallest demand, kg")
        ->capture_default_str();
    sweep->add_option("--demand-max", sweep_args.base.demand_max, "Largest demand, kg")
        ->capture_default_str();
    sweep->add_option("--instances", sweep_args.base.instances, "Random instances")
        ->capture_default_str();
    sweep->add_option("--threads", sweep_args.base.threads, "Worker cap, 0 = all cores")
        ->capture_default_str();
    sweep->add_option("-o,--output", sweep_args.base.output,
                      "Sweep CSV path (omit to print the CSV)");
    add_sa_options(sweep, sweep_args.base.sa);
    add_mode_options(sweep, sweep_args.base.mode);
    add_param_options(sweep, sweep_args.base.params);

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exhaustively enumerate the optimum of a small scenario (max 9 locations)");
    oracle->add_option("-s,--scenario", oracle_args.scenario, "Scenario JSON")->required();
    oracle->add_option("--objective", oracle_args.objective, "Objective: time or cost")
        ->check(CLI::IsMember({"time", "cost"}))
        ->capture_default_str();
    oracle->add_flag("--serial", oracle_args.serial, "Use the serial reference enumeration");
    oracle->add_option("--solution", oracle_args.solution_out, "Write the optimal string here");
    add_mode_options(oracle, oracle_args.mode);

    ExportLpArgs lp_args;
    CLI::App* export_lp_cmd =
        app.add_subcommand("export-lp", "Write the scenario's MILP in LP format");
    export_lp_cmd->add_option("-s,--scenario", lp_args.scenario, "Scenario JSON")->required();
    export_lp_cmd->add_option("--objective", lp_args.objective, "Objective: time or cost")
        ->check(CLI::IsMember({"time", "cost"}))
        ->capture_default_str();
    export_lp_cmd->add_flag("--battery-types", lp_args.battery_types,
                            "Model the scenario's battery catalogue instead of continuous "
                            "battery sizing");
    export_lp_cmd->add_option("-o,--output", lp_args.output, "LP path (omit to print)");

    ValidateArgs val_args;
    CLI::App* validate = app.add_subcommand(
        "validate", "Check a scenario file, and optionally a solution string against it");
    validate->add_option("-s,--scenario", val_args.scenario, "Scenario JSON")->required();
    validate->add_option("--solution", val_args.solution, "Solution string file to check");
    validate->add_option("--objective", val_args.objective, "Objective: time or cost")
        ->check(CLI::IsMember({"time", "cost"}))
        ->capture_default_str();
    validate->add_flag("--milp", val_args.milp,
                       "Also convert the solution to a MILP assignment and check every row");
    validate->add_option("--tol", val_args.tol, "MILP feasibility tolerance")
        ->capture_default_str();
    add_mode_options(validate, val_args.mode);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) return cmd_generate(gen);
        if (*solve)
            return solve_args.scenario.empty() ? solve_batch(solve_args)
                                               : solve_single(solve_args);
        if (*sweep) return cmd_sweep(sweep_args);
        if (*oracle) return cmd_oracle(oracle_args);
        if (*export_lp_cmd) return cmd_export_lp(lp_args);
        if (*validate) return cmd_validate(val_args);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
