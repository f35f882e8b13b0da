#include "ddp/sa_solver.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace ddp {

void SaConfig::validate() const {
    if (!(cooling_factor > 0.0) || !(cooling_factor < 1.0))
        throw ValidationError("SaConfig: cooling_factor must be in (0, 1)");
    if (!(final_temperature > 0.0) || !(final_temperature < initial_temperature))
        throw ValidationError("SaConfig: need 0 < final_temperature < initial_temperature");
    if (rounds_per_phase < 1)
        throw ValidationError("SaConfig: rounds_per_phase must be >= 1");
}

SolutionString random_solution(int n_locations, Rng& rng) {
    if (n_locations < 1)
        throw ValidationError("random_solution: n_locations must be >= 1");
    SolutionString s;
    s.entries.reserve(2 * static_cast<std::size_t>(n_locations) + 1);
    s.entries.push_back(0);
    // Interior: every location once plus n-1 separators, then shuffled.
    for (int i = 1; i <= n_locations; ++i) s.entries.push_back(i);
    for (int i = 0; i < n_locations - 1; ++i) s.entries.push_back(0);
    // Fisher-Yates over the interior only.
    for (std::size_t k = s.entries.size() - 1; k > 1; --k) {
        std::size_t pick = static_cast<std::size_t>(
            rng.uniform_int(1, static_cast<std::int64_t>(k)));
        std::swap(s.entries[k], s.entries[pick]);
    }
    s.entries.push_back(0);
    return s;
}

SolutionString apply_exchange(const SolutionString& s, ExchangeRule rule, int i, int j) {
    int last = static_cast<int>(s.entries.size()) - 1;
    if (i < 1 || i > last - 1 || j < 1 || j > last - 1)
        throw ValidationError("apply_exchange: indices must stay clear of the terminal zeros");
    SolutionString out = s;
    switch (rule) {
        case ExchangeRule::Swap:
            std::swap(out.entries[i], out.entries[j]);
            break;
        case ExchangeRule::Relocate: {
            int moved = out.entries[static_cast<std::size_t>(i)];
            out.entries.erase(out.entries.begin() + i);
            out.entries.insert(out.entries.begin() + j, moved);
            break;
        }
        case ExchangeRule::TwoOpt:
            std::reverse(out.entries.begin() + std::min(i, j),
                         out.entries.begin() + std::max(i, j) + 1);
            break;
    }
    return out;
}

bool metropolis_accept(double delta, double temperature, double x) {
    return std::exp(-delta / temperature) >= x;
}

SaResult simulated_annealing(const Scenario& scn, const SaConfig& cfg,
                             const EvalOptions& opts) {
    cfg.validate();
    opts.validate();
    Rng rng(cfg.seed);

    SolutionString s = random_solution(scn.location_count(), rng);
    CostBreakdown current = detail::cost_unchecked(s, cfg.minimize_cost, scn, opts);
    auto objective_of = [&cfg](const CostBreakdown& b) {
        return cfg.minimize_cost ? b.total_cost : b.delivery_time;
    };
    double current_obj = objective_of(current);

    int interior_hi = static_cast<int>(s.entries.size()) - 2;
    SaResult result;
    double temp = cfg.initial_temperature;
    int phase = 0;
    while (temp > cfg.final_temperature) {
        temp *= cfg.cooling_factor;
        ++phase;
        SaPhase trace_row;
        trace_row.phase = phase;
        trace_row.temperature = temp;
        trace_row.best_objective = current_obj;
        for (int round = 0; round < cfg.rounds_per_phase; ++round) {
            int i = static_cast<int>(rng.uniform_int(1, interior_hi));
            int j = static_cast<int>(rng.uniform_int(1, interior_hi));
            auto rule = static_cast<ExchangeRule>(rng.uniform_int(1, 3));
            SolutionString candidate = apply_exchange(s, rule, i, j);
            CostBreakdown evaluated =
                detail::cost_unchecked(candidate, cfg.minimize_cost, scn, opts);
            double candidate_obj = objective_of(evaluated);
            double x = rng.uniform();
            if (metropolis_accept(candidate_obj - current_obj, temp, x)) {
                s = std::move(candidate);
                current = std::move(evaluated);
                current_obj = candidate_obj;
                ++trace_row.accepted;
            }
            trace_row.best_objective = std::min(trace_row.best_objective, current_obj);
        }
        result.trace.phases.push_back(trace_row);
    }

    result.solution = std::move(s);
    result.breakdown = std::move(current);
    return result;
}

void write_trace_csv(const SaTrace& trace, std::ostream& out) {
    out << "phase,temperature,best_objective,accepted\n";
    for (const SaPhase& p : trace.phases)
        out << p.phase << ',' << format_double(p.temperature) << ','
            << format_double(p.best_objective) << ',' << p.accepted << '\n';
}

}  // namespace ddp
