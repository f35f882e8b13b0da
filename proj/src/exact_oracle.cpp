#include "ddp/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ddp/common.hpp"

namespace ddp {

namespace {

// Penalized solutions lose to unpenalized ones; within a class, lower
// objective wins.  Strict, so the first string found in enumeration order
// is kept on ties.
bool better(bool a_pen, double a_obj, bool b_pen, double b_obj) {
    if (a_pen != b_pen) return !a_pen;
    return a_obj < b_obj;
}

struct BranchBest {
    bool found = false;
    double objective = 0.0;
    bool penalized = true;
    SolutionString solution;
};

// All strings whose first route starts with `first`: permute the remaining
// locations lexicographically, and cut every arrangement into routes with
// every separator mask.  Empty routes add nothing to cost or timing, so
// putting the spare zeros at the tail loses no distinct evaluation.
BranchBest enumerate_branch(int first, const Scenario& scn, bool minimize_cost,
                            const EvalOptions& opts) {
    int n = scn.location_count();
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i <= n; ++i)
        if (i != first) rest.push_back(i);

    std::size_t mask_count = std::size_t{1} << (n - 1);
    SolutionString s;
    s.entries.assign(2 * static_cast<std::size_t>(n) + 1, 0);

    BranchBest best;
    do {
        for (std::size_t mask = 0; mask < mask_count; ++mask) {
            // Build [0 first rest... 0...], separators where mask bits are set.
            std::size_t pos = 0;
            s.entries[pos++] = 0;
            s.entries[pos++] = first;
            for (int k = 0; k < n - 1; ++k) {
                if (mask & (std::size_t{1} << k)) s.entries[pos++] = 0;
                s.entries[pos++] = rest[static_cast<std::size_t>(k)];
            }
            while (pos < s.entries.size()) s.entries[pos++] = 0;

            CostBreakdown b = detail::cost_unchecked(s, minimize_cost, scn, opts);
            double obj = minimize_cost ? b.total_cost : b.delivery_time;
            if (!best.found || better(b.penalized, obj, best.penalized, best.objective)) {
                best.found = true;
                best.objective = obj;
                best.penalized = b.penalized;
                best.solution = s;
            }
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

OracleResult merge_branches(const std::vector<BranchBest>& branches, const Scenario& scn,
                            bool minimize_cost, const EvalOptions& opts) {
    const BranchBest* best = nullptr;
    for (const BranchBest& b : branches) {
        if (!b.found) continue;
        if (!best || better(b.penalized, b.objective, best->penalized, best->objective))
            best = &b;
    }
    if (!best) throw ValidationError("enumerate_optimal: empty enumeration");
    OracleResult out;
    out.objective = best->objective;
    out.solution = best->solution;
    out.breakdown = detail::cost_unchecked(out.solution, minimize_cost, scn, opts);
    return out;
}

void check_size(const Scenario& scn) {
    if (scn.location_count() > 9)
        throw SizeError("enumerate_optimal: refusing " +
                        std::to_string(scn.location_count()) +
                        " locations (limit 9); the search space is factorial");
}

}  // namespace

OracleResult enumerate_optimal_serial(const Scenario& scn, bool minimize_cost,
                                      const EvalOptions& opts) {
    opts.validate();
    check_size(scn);
    int n = scn.location_count();
    std::vector<BranchBest> branches(static_cast<std::size_t>(n));
    for (int f = 1; f <= n; ++f)
        branches[static_cast<std::size_t>(f - 1)] =
            enumerate_branch(f, scn, minimize_cost, opts);
    return merge_branches(branches, scn, minimize_cost, opts);
}

OracleResult enumerate_optimal(const Scenario& scn, bool minimize_cost,
                               const EvalOptions& opts) {
    opts.validate();
    check_size(scn);
    int n = scn.location_count();
    std::vector<BranchBest> branches(static_cast<std::size_t>(n));
#ifdef DDP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int f = 1; f <= n; ++f)
        branches[static_cast<std::size_t>(f - 1)] =
            enumerate_branch(f, scn, minimize_cost, opts);
    // Branch order, not completion order, decides ties.
    return merge_branches(branches, scn, minimize_cost, opts);
}

double min_makespan(const RouteTiming& u, int drone_count) {
    if (drone_count < 1) throw ValidationError("min_makespan: drone_count must be >= 1");
    std::size_t routes = u.pairs.size();
    if (routes > 10) throw SizeError("min_makespan: more than 10 routes");
    if (drone_count > 4) throw SizeError("min_makespan: more than 4 drones");
    if (routes == 0) return 0.0;
    for (const auto& [p, q] : u.pairs)
        if (!(p > 0.0) || q < p)
            throw ValidationError("min_makespan: route timings must satisfy 0 < delivery <= arrival");

    // Within one drone the best execution order is by ascending q - p
    // (arrival minus delivery): swapping an adjacent out-of-order pair
    // never increases the later of the two deliveries.  So only the
    // assignment needs enumerating, with each drone's routes taken in
    // this globally sorted order.
    std::vector<std::size_t> order(routes);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&u](std::size_t a, std::size_t b) {
        return (u.pairs[a].second - u.pairs[a].first) < (u.pairs[b].second - u.pairs[b].first);
    });

    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(drone_count), routes);
    std::vector<int> assign(routes, 0);
    std::vector<double> clock(n);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        std::fill(clock.begin(), clock.end(), 0.0);
        double makespan = 0.0;
        for (std::size_t k = 0; k < routes; ++k) {
            std::size_t r = order[k];
            double& c = clock[static_cast<std::size_t>(assign[k])];
            makespan = std::max(makespan, c + u.pairs[r].first);
            c += u.pairs[r].second;
        }
        best = std::min(best, makespan);
        // Next assignment in mixed-radix order.
        std::size_t digit = 0;
        while (digit < routes && ++assign[digit] == static_cast<int>(n)) {
            assign[digit] = 0;
            ++digit;
        }
        if (digit == routes) break;
    }
    return best;
}

BatterySelection knapsack_exhaustive(const std::vector<BatteryType>& types,
                                     const std::vector<double>& usable_energy,
                                     double required) {
    if (types.size() != usable_energy.size())
        throw ValidationError("knapsack_exhaustive: types and usable_energy sizes differ");
    if (types.size() > 20) throw SizeError("knapsack_exhaustive: more than 20 types");
    if (required <= 0.0) return {};

    std::size_t n = types.size();
    double best_cost = std::numeric_limits<double>::infinity();
    std::size_t best_mask = 0;
    bool found = false;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        double energy = 0.0;
        double cost = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) {
                energy += usable_energy[j];
                cost += types[j].cost;
            }
        }
        if (energy >= required && cost < best_cost) {
            best_cost = cost;
            best_mask = mask;
            found = true;
        }
    }
    if (!found)
        throw InfeasibleError("knapsack_exhaustive: no subset covers " + format_double(required));
    BatterySelection out;
    out.total_cost = best_cost;
    for (std::size_t j = 0; j < n; ++j)
        if (best_mask & (std::size_t{1} << j)) out.chosen.push_back(static_cast<int>(j));
    return out;
}

}  // namespace ddp
