#pragma once

#include <vector>

#include "ddp/route_cost.hpp"

namespace ddp {

struct OracleResult {
    double objective = 0.0;  // total cost or delivery time, per minimize_cost
    SolutionString solution;
    CostBreakdown breakdown;
};

// Exhaustive search over every solution string: all location orders times
// all ways of cutting the order into routes.  Any unpenalized solution
// beats every penalized one; ties keep the first string in enumeration
// order, so results are reproducible.  Refuses more than 9 locations.
// The parallel version splits the enumeration by first location and merges
// per-branch minima in branch order, giving bit-identical results to the
// serial one.
OracleResult enumerate_optimal(const Scenario& scn, bool minimize_cost,
                               const EvalOptions& opts = {});
OracleResult enumerate_optimal_serial(const Scenario& scn, bool minimize_cost,
                                      const EvalOptions& opts = {});

// Exact minimum over all route-to-drone assignments of the latest delivery
// time, with each drone flying its routes back-to-back.  Limits: 10 routes,
// 4 drones.
double min_makespan(const RouteTiming& u, int drone_count);

// Reference knapsack: minimum-cost subset with sum(usable_energy) >=
// required over all 2^n subsets.  usable_energy pairs up with types;
// entries may be negative (a battery not worth its own carrying cost).
// Limit: 20 types.
BatterySelection knapsack_exhaustive(const std::vector<BatteryType>& types,
                                     const std::vector<double>& usable_energy,
                                     double required);

}  // namespace ddp
