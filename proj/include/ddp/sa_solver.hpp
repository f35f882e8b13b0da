#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ddp/common.hpp"
#include "ddp/route_cost.hpp"

namespace ddp {

struct SaConfig {
    double initial_temperature = 1.0;
    double final_temperature = 0.001;
    double cooling_factor = 0.99;  // temperature multiplier per phase
    int rounds_per_phase = 1000;
    bool minimize_cost = false;    // objective: total cost if true, delivery time if false
    std::uint64_t seed = 0;

    void validate() const;  // throws ValidationError
};

struct SaPhase {
    int phase = 0;               // 1-based
    double temperature = 0.0;
    double best_objective = 0.0; // best incumbent objective seen during the phase
    int accepted = 0;            // moves accepted during the phase
};

struct SaTrace {
    std::vector<SaPhase> phases;
};

void write_trace_csv(const SaTrace& trace, std::ostream& out);

enum class ExchangeRule { Swap = 1, Relocate = 2, TwoOpt = 3 };

// Uniformly shuffled arrangement of all locations and the interior depot
// zeros, wrapped in the fixed terminal zeros.  May be infeasible; the
// annealer's penalties take it from there.
SolutionString random_solution(int n_locations, Rng& rng);

// One neighbourhood move.  i and j must be interior indices
// (1 .. len-2); the terminal zeros never move.
//   swap:     entries i and j exchanged
//   relocate: entry i removed, re-inserted at position j
//   two_opt:  sub-sequence [min(i,j) .. max(i,j)] reversed
SolutionString apply_exchange(const SolutionString& s, ExchangeRule rule, int i, int j);

// The acceptance test: exp(-delta / temperature) >= x.
bool metropolis_accept(double delta, double temperature, double x);

struct SaResult {
    SolutionString solution;
    CostBreakdown breakdown;
    SaTrace trace;
};

// Annealing loop: each phase cools the temperature by cooling_factor and
// attempts rounds_per_phase random exchanges, accepting by the Metropolis
// rule; stops once the temperature reaches final_temperature.  Same
// scenario + config (incl. seed) always returns the same result.
SaResult simulated_annealing(const Scenario& scn, const SaConfig& cfg,
                             const EvalOptions& opts = {});

}  // namespace ddp
