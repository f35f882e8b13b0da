#include "ddp/route_cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ddp/common.hpp"

namespace ddp {

void EvalOptions::validate() const {
    if (fixed_battery_weight && !(*fixed_battery_weight > 0.0))
        throw ValidationError("EvalOptions: fixed_battery_weight must be > 0");
}

double battery_energy(double route_time, double time_weight_product,
                      const LinearPowerModel& model, double energy_density) {
    if (route_time < 0.0 || time_weight_product < 0.0)
        throw ValidationError("battery_energy: route_time and time_weight_product must be >= 0");
    // The battery's own weight E/xi consumes power too, which is what puts
    // the route time into the denominator.
    double numerator = model.alpha * time_weight_product + model.beta * route_time;
    double denominator = 1.0 - (model.alpha / energy_density) * route_time;
    if (numerator == 0.0) return 0.0;  // empty route, regardless of denominator
    return numerator / denominator;
}

namespace {

// Divergent battery energies are capped at +-K^2 so later arithmetic stays
// finite; the sign is kept so the non-positive-energy penalty still fires.
double saturate(double e, double big_k) {
    if (std::isfinite(e)) return e;
    if (std::isnan(e) || e > 0.0) return big_k * big_k;
    return -big_k * big_k;
}

EnergyCost energy_cost_impl(const SolutionString& s, const Scenario& scn,
                            const EvalOptions& opts) {
    const Params& P = scn.params();
    EnergyCost out;
    double t = 0.0;      // s, route time so far
    double omega = 0.0;  // kg*s, sum of payload * leg time
    double y = 0.0;      // kg, payload on the current leg
    // Back to front: payload starts at zero on the return leg and grows as
    // earlier legs are visited, so it always equals the weight actually
    // carried on that leg.
    for (std::size_t k = s.entries.size() - 1; k-- > 0;) {
        int i = s.entries[k + 1];
        int j = s.entries[k];
        if (i == 0 && j == 0) continue;
        double t_ij = P.service_time + scn.distance(i, j) / P.speed;
        t += t_ij;
        omega += y * t_ij;
        y += scn.demand(j);
        if (j == 0 && i != 0) {
            // Depot boundary: price this route's battery.
            if (opts.fixed_battery_weight) {
                double b = *opts.fixed_battery_weight;
                double capacity_kj = P.energy_density * b;
                double required_kj =
                    P.power_model.alpha * omega + (P.power_model.alpha * b + P.power_model.beta) * t;
                out.lambda += capacity_kj * P.energy_price;
                if (required_kj > capacity_kj) {
                    out.lambda += P.big_k * (required_kj - capacity_kj) * P.energy_price;
                    out.penalized = true;
                }
                if (y + b > P.capacity) {
                    out.lambda += P.big_k * (y + b - P.capacity);
                    out.penalized = true;
                }
                out.route_energies.push_back(capacity_kj);
            } else {
                double e = saturate(battery_energy(t, omega, P.power_model, P.energy_density),
                                    P.big_k);
                if (e > 0.0) {
                    out.lambda += e * P.energy_price;
                } else {
                    out.lambda += -P.big_k * (e * P.energy_price);
                    out.penalized = true;
                }
                if (y + e / P.energy_density > P.capacity) {
                    out.lambda += P.big_k * (y + e / P.energy_density - P.capacity);
                    out.penalized = true;
                }
                out.route_energies.push_back(e);
            }
            t = 0.0;
            omega = 0.0;
            y = 0.0;
        }
    }
    // The sweep met routes in reverse string order.
    std::reverse(out.route_energies.begin(), out.route_energies.end());
    return out;
}

RouteTiming route_times_impl(const SolutionString& s, const Scenario& scn) {
    const Params& P = scn.params();
    RouteTiming u;
    double p = 0.0;  // s, time of the most recent customer visit
    double q = 0.0;  // s, running arrival time within the route
    for (std::size_t k = 1; k < s.entries.size(); ++k) {
        int i = s.entries[k];
        int j = s.entries[k - 1];
        if (i == 0 && j == 0) continue;
        p = q;
        q += P.service_time + scn.distance(i, j) / P.speed;
        if (i == 0 && j != 0) {
            u.pairs.emplace_back(p, q);
            q = 0.0;
        }
    }
    return u;
}

struct DroneState {
    double arrival;
    int index;
    double delivery;
};

// Min-heap on (arrival, index): ties go to the lowest drone index.
struct LaterBack {
    bool operator()(const DroneState& a, const DroneState& b) const {
        if (a.arrival != b.arrival) return a.arrival > b.arrival;
        return a.index > b.index;
    }
};

double list_schedule_impl(const RouteTiming& u, int drone_count,
                          std::vector<int>* route_to_drone) {
    if (drone_count < 1) throw ValidationError("list_schedule: drone_count must be >= 1");
    std::size_t routes = u.pairs.size();
    if (route_to_drone) route_to_drone->assign(routes, -1);
    if (routes == 0) return 0.0;
    // Drones beyond the route count never get work and never hold the
    // maximum delivery, so the heap only needs min(n, routes) entries.
    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(drone_count), routes);
    std::vector<DroneState> heap;
    heap.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        heap.push_back({0.0, static_cast<int>(i), 0.0});
    // Already a valid min-heap: all keys equal arrival 0, indices ordered.
    for (std::size_t r = 0; r < routes; ++r) {
        std::pop_heap(heap.begin(), heap.end(), LaterBack{});
        DroneState d = heap.back();
        heap.pop_back();
        if (route_to_drone) (*route_to_drone)[r] = d.index;
        heap.push_back({d.arrival + u.pairs[r].second, d.index, d.arrival + u.pairs[r].first});
        std::push_heap(heap.begin(), heap.end(), LaterBack{});
    }
    double l = 0.0;
    for (const DroneState& d : heap) l = std::max(l, d.delivery);
    return l;
}

DroneCost drone_cost_impl(const SolutionString& s, double lambda, bool minimize_cost,
                          const Scenario& scn, const EvalOptions& opts) {
    const Params& P = scn.params();
    RouteTiming u = route_times_impl(s, scn);
    int route_count = static_cast<int>(u.pairs.size());
    int n;
    if (opts.reuse_disabled) {
        // Every route flies on its own drone.
        n = std::max(1, route_count);
    } else if (minimize_cost) {
        // Smallest fleet that still meets the time limit; if none does,
        // the search converges on the cap and the time penalty handles it.
        int lo = 1;
        int hi = P.max_drones;
        while (lo <= hi - 1) {
            int mid = lo + (hi - lo) / 2;
            if (list_schedule_impl(u, mid, nullptr) <= P.time_limit)
                hi = mid;
            else
                lo = mid + 1;
        }
        n = lo;
        if (list_schedule_impl(u, n, nullptr) > P.time_limit) n = hi;
    } else {
        // Spend the budget that batteries left over on drones.
        double affordable = std::floor((P.budget - lambda) / P.drone_cost);
        if (affordable < 1.0)
            n = 1;
        else if (affordable > static_cast<double>(P.max_drones))
            n = P.max_drones;
        else
            n = static_cast<int>(affordable);
    }
    DroneCost out;
    out.drone_count = n;
    out.drone_cost = static_cast<double>(n) * P.drone_cost;
    out.delivery_time = list_schedule_impl(u, n, nullptr);
    return out;
}

}  // namespace

EnergyCost energy_cost(const SolutionString& s, const Scenario& scn, const EvalOptions& opts) {
    opts.validate();
    validate_solution(s, scn.location_count());
    return energy_cost_impl(s, scn, opts);
}

RouteTiming route_times(const SolutionString& s, const Scenario& scn) {
    validate_solution(s, scn.location_count());
    return route_times_impl(s, scn);
}

double list_schedule(const RouteTiming& u, int drone_count) {
    return list_schedule_impl(u, drone_count, nullptr);
}

double list_schedule_assign(const RouteTiming& u, int drone_count,
                            std::vector<int>& route_to_drone) {
    return list_schedule_impl(u, drone_count, &route_to_drone);
}

DroneCost drone_cost_and_delivery_time(const SolutionString& s, double lambda,
                                       bool minimize_cost, const Scenario& scn,
                                       const EvalOptions& opts) {
    opts.validate();
    validate_solution(s, scn.location_count());
    return drone_cost_impl(s, lambda, minimize_cost, scn, opts);
}

CostBreakdown cost(const SolutionString& s, bool minimize_cost, const Scenario& scn,
                   const EvalOptions& opts) {
    opts.validate();
    validate_solution(s, scn.location_count());
    return detail::cost_unchecked(s, minimize_cost, scn, opts);
}

namespace detail {

CostBreakdown cost_unchecked(const SolutionString& s, bool minimize_cost,
                             const Scenario& scn, const EvalOptions& opts) {
    const Params& P = scn.params();
    EnergyCost ec = energy_cost_impl(s, scn, opts);
    DroneCost dc = drone_cost_impl(s, ec.lambda, minimize_cost, scn, opts);

    CostBreakdown b;
    b.energy_cost = ec.lambda;
    b.drone_cost = dc.drone_cost;
    b.drone_count = dc.drone_count;
    b.route_energies = std::move(ec.route_energies);
    b.penalized = ec.penalized;
    double c = ec.lambda + dc.drone_cost;
    double l = dc.delivery_time;
    // Budget first; the time limit is only enforced when the budget holds.
    // The penalty amount is computed once from the pre-update values and
    // added to both outputs.
    if (c > P.budget) {
        double penalty = P.big_k * (c - P.budget);
        c += penalty;
        l += penalty;
        b.penalized = true;
    } else if (l > P.time_limit) {
        double penalty = P.big_k * (l - P.time_limit);
        c += penalty;
        l += penalty;
        b.penalized = true;
    }
    b.total_cost = c;
    b.delivery_time = l;
    return b;
}

}  // namespace detail

const char* const kCostBreakdownCsvHeader =
    "energy_cost,drone_cost,total_cost,delivery_time,drone_count,penalized,route_energies";

std::string to_csv_row(const CostBreakdown& b) {
    std::string row = format_double(b.energy_cost);
    row += ',';
    row += format_double(b.drone_cost);
    row += ',';
    row += format_double(b.total_cost);
    row += ',';
    row += format_double(b.delivery_time);
    row += ',';
    row += std::to_string(b.drone_count);
    row += ',';
    row += b.penalized ? '1' : '0';
    row += ',';
    for (std::size_t i = 0; i < b.route_energies.size(); ++i) {
        if (i) row += ';';
        row += format_double(b.route_energies[i]);
    }
    return row;
}

namespace {

// Depth-first search over type subsets with cost and reachability pruning.
struct KnapsackSearch {
    const std::vector<double>& costs;
    const std::vector<double>& usable;       // Y_j, may be <= 0
    std::vector<double> positive_suffix;     // sum of max(Y_j, 0) from index onward
    double required;                         // Z
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best_set;
    std::vector<int> current;

    void run(std::size_t idx, double covered, double spent) {
        if (covered >= required) {
            if (spent < best_cost) {
                best_cost = spent;
                best_set = current;
            }
            return;
        }
        if (idx >= costs.size()) return;
        if (spent >= best_cost) return;
        if (covered + positive_suffix[idx] < required) return;  // unreachable
        current.push_back(static_cast<int>(idx));
        run(idx + 1, covered + usable[idx], spent + costs[idx]);
        current.pop_back();
        run(idx + 1, covered, spent);
    }
};

}  // namespace

BatterySelection discrete_battery_assign(double route_time, double time_weight_product,
                                         const std::vector<BatteryType>& types,
                                         const LinearPowerModel& model) {
    if (types.empty()) throw ValidationError("discrete_battery_assign: empty type list");
    if (route_time < 0.0 || time_weight_product < 0.0)
        throw ValidationError("discrete_battery_assign: negative route time or weight product");

    double required = model.alpha * time_weight_product + model.beta * route_time;
    if (required <= 0.0) return {};  // nothing to power

    std::vector<double> costs(types.size());
    std::vector<double> usable(types.size());
    for (std::size_t j = 0; j < types.size(); ++j) {
        costs[j] = types[j].cost;
        // Carrying the battery costs alpha * w_j per second of route time.
        usable[j] = types[j].energy - model.alpha * types[j].weight * route_time;
    }

    KnapsackSearch search{costs, usable, {}, required};
    search.positive_suffix.assign(types.size() + 1, 0.0);
    for (std::size_t j = types.size(); j-- > 0;)
        search.positive_suffix[j] = search.positive_suffix[j + 1] + std::max(usable[j], 0.0);
    if (search.positive_suffix[0] < required)
        throw InfeasibleError("discrete_battery_assign: all battery types together cannot cover " +
                              format_double(required) + " kJ");
    search.run(0, 0.0, 0.0);
    return {std::move(search.best_set), search.best_cost};
}

}  // namespace ddp
