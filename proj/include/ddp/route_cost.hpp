#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddp/scenario.hpp"
#include "ddp/solution.hpp"

namespace ddp {

// (delivery time, depot-arrival time) for each non-empty route, in string
// order.  Delivery time is the moment of the route's last customer visit;
// the arrival time adds the return leg.
struct RouteTiming {
    std::vector<std::pair<double, double>> pairs;
};

// Everything the cost function knows about one solution.
struct CostBreakdown {
    double energy_cost = 0.0;    // $, batteries (plus any energy/capacity penalties)
    double drone_cost = 0.0;     // $, drone purchases
    double total_cost = 0.0;     // $, including budget/time penalties if any
    double delivery_time = 0.0;  // s, last delivery (same penalties applied)
    int drone_count = 0;
    bool penalized = false;      // any penalty branch fired
    std::vector<double> route_energies;  // kJ per non-empty route, string order

    bool operator==(const CostBreakdown&) const = default;
};

extern const char* const kCostBreakdownCsvHeader;
std::string to_csv_row(const CostBreakdown& b);

// Cost-function variants used by the ablation experiments.
struct EvalOptions {
    // Every route gets its own drone; no fleet-size search.
    bool reuse_disabled = false;
    // All routes fly with a battery of this weight instead of one sized to
    // the route's exact energy need.
    std::optional<double> fixed_battery_weight;  // kg

    void validate() const;  // throws ValidationError
};

// Energy a route of total time t needs from its battery, accounting for the
// battery's own weight: E = (alpha*omega + beta*t) / (1 - (alpha/xi)*t).
// Near t = xi/alpha the value diverges and beyond it turns negative; both
// are returned as-is and penalized by the caller.
double battery_energy(double route_time, double time_weight_product,
                      const LinearPowerModel& model, double energy_density);

struct EnergyCost {
    double lambda = 0.0;                 // $, batteries + penalties
    std::vector<double> route_energies;  // kJ, string order
    bool penalized = false;
};

// Back-to-front sweep over the string accumulating per-route time, the
// time-weight product and payload, pricing each route's battery at the
// depot boundary.
EnergyCost energy_cost(const SolutionString& s, const Scenario& scn,
                       const EvalOptions& opts = {});

// Front-to-back sweep producing each route's (delivery, arrival) pair.
RouteTiming route_times(const SolutionString& s, const Scenario& scn);

// Greedy assignment of routes, in order, to the drone that is back first
// (ties: lowest drone index).  Returns the latest delivery time.
double list_schedule(const RouteTiming& u, int drone_count);

// Same schedule, also reporting which drone each route went to.
double list_schedule_assign(const RouteTiming& u, int drone_count,
                            std::vector<int>& route_to_drone);

struct DroneCost {
    double drone_cost = 0.0;     // $
    double delivery_time = 0.0;  // s
    int drone_count = 0;
};

// Fleet sizing: when minimizing cost, binary-search the smallest fleet that
// meets the time limit; when minimizing time, buy every drone the remaining
// budget allows.
DroneCost drone_cost_and_delivery_time(const SolutionString& s, double lambda,
                                       bool minimize_cost, const Scenario& scn,
                                       const EvalOptions& opts = {});

// Full evaluation: battery cost, fleet cost, schedule, and the budget /
// time-limit penalty step.  minimize_cost selects which objective the
// fleet-sizing phase optimizes for.
CostBreakdown cost(const SolutionString& s, bool minimize_cost, const Scenario& scn,
                   const EvalOptions& opts = {});

// Cheapest battery combination whose usable energy covers a route needing
// Z = alpha*omega + beta*t, where carrying type j eats alpha*w_j*t of its
// own capacity.  Exact search; throws InfeasibleError when even all types
// together fall short.
struct BatterySelection {
    std::vector<int> chosen;  // indices into the type list, ascending
    double total_cost = 0.0;  // $
};
BatterySelection discrete_battery_assign(double route_time, double time_weight_product,
                                         const std::vector<BatteryType>& types,
                                         const LinearPowerModel& model);

namespace detail {
// Evaluation without the string-shape check, for callers that maintain
// validity themselves (the annealing loop and the enumeration oracle).
CostBreakdown cost_unchecked(const SolutionString& s, bool minimize_cost,
                             const Scenario& scn, const EvalOptions& opts);
}  // namespace detail

}  // namespace ddp
