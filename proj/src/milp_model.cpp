#include "ddp/milp_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "ddp/common.hpp"

namespace ddp {

int MilpModel::variable_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw ValidationError("MilpModel: unknown variable " + name);
    return it->second;
}

int MilpModel::expected_variable_count(int n, int battery_type_count) {
    // x: (n+1)n, z: n(n-1), f: (n+1)n, b: (n+1)n, y/a/r/e/g: n each, l, c.
    return 4 * n * n + 7 * n + 2 + battery_type_count * n;
}

int MilpModel::expected_row_count(int n, int battery_type_count) {
    // Quadratic groups: 6b, 7a, 7c, 8a, 8c, 8d, 9a.  Linear groups: 4a, 4b,
    // 5a, 5b, 6a, 7b, 7d, 7f, 8b, 8e, 9b, 9c.  Singletons: 5c, 7e, 10a, 10b,
    // plus 4b's depot row.  Battery catalogues add one covering row per
    // location.
    return 7 * n * n + 12 * n + 5 + (battery_type_count > 0 ? n : 0);
}

namespace {

std::string two_index(const char* stem, int i, int j) {
    return std::string(stem) + '_' + std::to_string(i) + '_' + std::to_string(j);
}

std::string one_index(const char* stem, int i) {
    return std::string(stem) + '_' + std::to_string(i);
}

}  // namespace

MilpModel build_model(const Scenario& scn, MilpObjective objective, bool use_battery_types) {
    const Params& P = scn.params();
    int n = scn.location_count();
    if (n < 1) throw ValidationError("build_model: scenario has no delivery locations");
    const std::vector<BatteryType>& catalogue = scn.battery_types();
    if (use_battery_types && catalogue.empty())
        throw ValidationError("build_model: battery mode requested but the scenario has no types");
    int bt = use_battery_types ? static_cast<int>(catalogue.size()) : 0;

    MilpModel m;
    m.n_ = n;
    m.battery_types_ = bt;
    m.objective_ = objective;

    auto add_var = [&m](std::string name, VarKind kind) {
        int idx = static_cast<int>(m.vars_.size());
        m.index_.emplace(name, idx);
        m.vars_.push_back({std::move(name), kind});
        return idx;
    };

    // Variable layout; -1 marks pairs that do not exist (diagonals, depot).
    auto grid = [n] { return std::vector<std::vector<int>>(
        static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, -1)); };
    auto x = grid(), z = grid(), f = grid(), b = grid();
    std::vector<int> y(static_cast<std::size_t>(n) + 1, -1), a = y, r = y, e = y, g = y;

    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) x[i][j] = add_var(two_index("x", i, j), VarKind::Binary);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) z[i][j] = add_var(two_index("z", i, j), VarKind::Binary);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) f[i][j] = add_var(two_index("f", i, j), VarKind::Continuous);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) b[i][j] = add_var(two_index("b", i, j), VarKind::Continuous);
    for (int i = 1; i <= n; ++i) y[i] = add_var(one_index("y", i), VarKind::Continuous);
    for (int i = 1; i <= n; ++i) a[i] = add_var(one_index("a", i), VarKind::Continuous);
    for (int i = 1; i <= n; ++i) r[i] = add_var(one_index("r", i), VarKind::Continuous);
    for (int i = 1; i <= n; ++i) e[i] = add_var(one_index("e", i), VarKind::Continuous);
    for (int i = 1; i <= n; ++i) g[i] = add_var(one_index("g", i), VarKind::Continuous);
    int l_var = add_var("l", VarKind::Continuous);
    int c_var = add_var("c", VarKind::Continuous);
    std::vector<std::vector<int>> h;
    if (bt > 0) {
        h.assign(static_cast<std::size_t>(bt),
                 std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
        for (int t = 0; t < bt; ++t)
            for (int i = 1; i <= n; ++i)
                h[t][i] = add_var(two_index("h", t, i), VarKind::Binary);
    }
    m.objective_var_ = objective == MilpObjective::MinTime ? l_var : c_var;

    // Leg times and the per-group linearization constants.  Each constant
    // only needs to dominate its group's largest feasible left-hand side;
    // anything tighter than big_k helps downstream solvers.
    auto leg_time = [&](int i, int j) { return P.service_time + scn.distance(i, j) / P.speed; };
    double t_max = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) t_max = std::max(t_max, leg_time(i, j));

    double alpha = P.power_model.alpha, beta = P.power_model.beta;
    double weight_cap = P.capacity;   // any battery-at-location / on-edge weight
    double energy_cap = P.energy_density * P.capacity;  // any g_i or e_i
    if (bt > 0) {
        double sum_w = 0.0, sum_xi = 0.0;
        for (const BatteryType& type : catalogue) {
            sum_w += type.weight;
            sum_xi += type.energy;
        }
        weight_cap = std::max(weight_cap, sum_w);
        energy_cap = std::max(energy_cap, sum_xi);
    }
    double k6 = std::min(P.big_k, P.capacity);
    double k7 = std::min(P.big_k, P.time_limit + t_max);
    double k7c = std::min(P.big_k, P.time_limit + 2.0 * t_max);
    double k8 = std::min(P.big_k, P.capacity);
    double k8b = std::min(P.big_k, weight_cap);
    double k9 = std::min(P.big_k, energy_cap + (alpha * P.capacity + beta) * t_max);
    double k9c = std::min(P.big_k, energy_cap);

    auto add_row = [&m](std::string name, RowSense sense, double rhs) -> MilpRow& {
        m.rows_.push_back({std::move(name), {}, sense, rhs});
        return m.rows_.back();
    };

    // 4a: leave every location exactly once.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c4a", i), RowSense::Eq, 1.0);
        for (int j = 0; j <= n; ++j)
            if (j != i) row.terms.emplace_back(x[i][j], 1.0);
    }
    // 4b: arrivals balance departures everywhere, depot included.
    for (int i = 0; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c4b", i), RowSense::Eq, 0.0);
        for (int j = 0; j <= n; ++j)
            if (j != i) row.terms.emplace_back(x[i][j], 1.0);
        for (int j = 0; j <= n; ++j)
            if (j != i) row.terms.emplace_back(x[j][i], -1.0);
    }
    // 5a: a drone can only be relaunched from i if it returned from i.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c5a", i), RowSense::Le, 0.0);
        for (int j = 1; j <= n; ++j)
            if (j != i) row.terms.emplace_back(z[i][j], 1.0);
        row.terms.emplace_back(x[i][0], -1.0);
    }
    // 5b: a reused launch towards i needs the depot->i edge.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c5b", i), RowSense::Le, 0.0);
        for (int j = 1; j <= n; ++j)
            if (j != i) row.terms.emplace_back(z[j][i], 1.0);
        row.terms.emplace_back(x[0][i], -1.0);
    }
    // 5c: fleet bound: launches minus reuses.
    {
        MilpRow& row = add_row("c5c", RowSense::Le, static_cast<double>(P.max_drones));
        for (int i = 1; i <= n; ++i) row.terms.emplace_back(x[0][i], 1.0);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (j != i) row.terms.emplace_back(z[i][j], -1.0);
    }
    // 6a: payload drops by the demand at each visit.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c6a", i), RowSense::Eq, scn.demand(i));
        for (int j = 0; j <= n; ++j)
            if (j != i) row.terms.emplace_back(f[j][i], 1.0);
        for (int j = 0; j <= n; ++j)
            if (j != i) row.terms.emplace_back(f[i][j], -1.0);
    }
    // 6b: no payload on unused edges.
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            MilpRow& row = add_row(two_index("c6b", i, j), RowSense::Le, 0.0);
            row.terms.emplace_back(f[i][j], 1.0);
            row.terms.emplace_back(x[i][j], -k6);
        }
    // 7a: visit times accumulate along used edges (depot time is 0).
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            MilpRow& row = add_row(two_index("c7a", i, j), RowSense::Le, k7 - leg_time(i, j));
            if (i != 0) row.terms.emplace_back(a[i], 1.0);
            row.terms.emplace_back(a[j], -1.0);
            row.terms.emplace_back(x[i][j], k7);
        }
    // 7b: depot-return times accumulate on the closing leg.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c7b", i), RowSense::Le, k7 - leg_time(i, 0));
        row.terms.emplace_back(a[i], 1.0);
        row.terms.emplace_back(r[i], -1.0);
        row.terms.emplace_back(x[i][0], k7);
    }
    // 7c: a reused drone's next first visit waits for its return.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            MilpRow& row = add_row(two_index("c7c", i, j), RowSense::Le, k7c - leg_time(0, j));
            row.terms.emplace_back(r[i], 1.0);
            row.terms.emplace_back(a[j], -1.0);
            row.terms.emplace_back(z[i][j], k7c);
        }
    // 7d: the overall delivery time covers every visit.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c7d", i), RowSense::Le, 0.0);
        row.terms.emplace_back(a[i], 1.0);
        row.terms.emplace_back(l_var, -1.0);
    }
    // 7e: delivery time limit.
    {
        MilpRow& row = add_row("c7e", RowSense::Le, P.time_limit);
        row.terms.emplace_back(l_var, 1.0);
    }
    // 7f: return times only exist on closing legs.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c7f", i), RowSense::Le, 0.0);
        row.terms.emplace_back(r[i], 1.0);
        row.terms.emplace_back(x[i][0], -k7);
    }
    // 8a: carried weight (battery + payload) within capacity.
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            MilpRow& row = add_row(two_index("c8a", i, j), RowSense::Le, 0.0);
            row.terms.emplace_back(b[i][j], 1.0);
            row.terms.emplace_back(f[i][j], 1.0);
            row.terms.emplace_back(x[i][j], -P.capacity);
        }
    // 8b: the battery at a route's last stop must hold the route energy
    // (or, with a catalogue, weigh as much as the chosen batteries).
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c8b", i), RowSense::Le, k8b);
        if (bt > 0) {
            for (int t = 0; t < bt; ++t)
                row.terms.emplace_back(h[t][i], catalogue[static_cast<std::size_t>(t)].weight);
        } else {
            row.terms.emplace_back(g[i], 1.0 / P.energy_density);
        }
        row.terms.emplace_back(y[i], -1.0);
        row.terms.emplace_back(x[i][0], k8b);
    }
    // 8c: battery weight carries over along a route.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            MilpRow& row = add_row(two_index("c8c", i, j), RowSense::Le, k8);
            row.terms.emplace_back(y[i], 1.0);
            row.terms.emplace_back(y[j], -1.0);
            row.terms.emplace_back(x[j][i], k8);
        }
    // 8d: edge battery weight at least the weight at the edge's head.
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            MilpRow& row = add_row(two_index("c8d", i, j), RowSense::Le, k8);
            row.terms.emplace_back(y[j], 1.0);
            row.terms.emplace_back(b[i][j], -1.0);
            row.terms.emplace_back(x[i][j], k8);
        }
    // 8e: same for the closing leg, keyed by the leg's tail.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c8e", i), RowSense::Le, k8);
        row.terms.emplace_back(y[i], 1.0);
        row.terms.emplace_back(b[i][0], -1.0);
        row.terms.emplace_back(x[i][0], k8);
    }
    // 9a: consumed energy accumulates: P(battery + payload) * leg time,
    // with the linear power model keeping the row linear.
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            double t_ij = leg_time(i, j);
            MilpRow& row = add_row(two_index("c9a", i, j), RowSense::Le, k9 - beta * t_ij);
            if (i != 0) row.terms.emplace_back(e[i], 1.0);
            row.terms.emplace_back(e[j], -1.0);
            row.terms.emplace_back(b[i][j], alpha * t_ij);
            row.terms.emplace_back(f[i][j], alpha * t_ij);
            row.terms.emplace_back(x[i][j], k9);
        }
    // 9b: route energy closes out on the final leg.
    for (int i = 1; i <= n; ++i) {
        double t_i0 = leg_time(i, 0);
        MilpRow& row = add_row(one_index("c9b", i), RowSense::Le, k9 - beta * t_i0);
        row.terms.emplace_back(e[i], 1.0);
        row.terms.emplace_back(g[i], -1.0);
        row.terms.emplace_back(b[i][0], alpha * t_i0);
        row.terms.emplace_back(f[i][0], alpha * t_i0);
        row.terms.emplace_back(x[i][0], k9);
    }
    // 9c: route energies only exist on closing legs.
    for (int i = 1; i <= n; ++i) {
        MilpRow& row = add_row(one_index("c9c", i), RowSense::Le, 0.0);
        row.terms.emplace_back(g[i], 1.0);
        row.terms.emplace_back(x[i][0], -k9c);
    }
    // 10a: total cost: drones bought (launches minus reuses) plus energy
    // (or the chosen batteries' price tags).
    {
        MilpRow& row = add_row("c10a", RowSense::Eq, 0.0);
        row.terms.emplace_back(c_var, 1.0);
        for (int i = 1; i <= n; ++i) row.terms.emplace_back(x[0][i], -P.drone_cost);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (j != i) row.terms.emplace_back(z[i][j], P.drone_cost);
        if (bt > 0) {
            for (int i = 1; i <= n; ++i)
                for (int t = 0; t < bt; ++t)
                    row.terms.emplace_back(h[t][i], -catalogue[static_cast<std::size_t>(t)].cost);
        } else {
            for (int i = 1; i <= n; ++i) row.terms.emplace_back(g[i], -P.energy_price);
        }
    }
    // 10b: budget.
    {
        MilpRow& row = add_row("c10b", RowSense::Le, P.budget);
        row.terms.emplace_back(c_var, 1.0);
    }
    // Battery catalogue: chosen types must cover the route energy.
    if (bt > 0) {
        for (int i = 1; i <= n; ++i) {
            MilpRow& row = add_row(one_index("cbt", i), RowSense::Ge, 0.0);
            for (int t = 0; t < bt; ++t)
                row.terms.emplace_back(h[t][i], catalogue[static_cast<std::size_t>(t)].energy);
            row.terms.emplace_back(g[i], -1.0);
        }
    }

    return m;
}

void export_lp(const MilpModel& model, std::ostream& out) {
    out << "Minimize\n obj: "
        << model.variables()[static_cast<std::size_t>(model.objective_variable())].name
        << "\nSubject To\n";
    for (const MilpRow& row : model.rows()) {
        out << ' ' << row.name << ':';
        for (std::size_t k = 0; k < row.terms.size(); ++k) {
            auto [var, coef] = row.terms[k];
            double mag = std::fabs(coef);
            out << (coef < 0.0 ? " - " : (k == 0 ? " " : " + "));
            if (mag != 1.0) out << format_double(mag) << ' ';
            out << model.variables()[static_cast<std::size_t>(var)].name;
        }
        switch (row.sense) {
            case RowSense::Le: out << " <= "; break;
            case RowSense::Ge: out << " >= "; break;
            case RowSense::Eq: out << " = "; break;
        }
        out << format_double(row.rhs) << '\n';
    }
    out << "Binaries\n";
    for (const MilpVariable& v : model.variables())
        if (v.kind == VarKind::Binary) out << ' ' << v.name << '\n';
    out << "End\n";
}

void export_lp(const MilpModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // fixed newlines on every platform
    if (!out) throw ValidationError("export_lp: cannot open " + path + " for writing");
    export_lp(model, out);
    if (!out) throw ValidationError("export_lp: write to " + path + " failed");
}

double MilpAssignment::at(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end())
        throw ValidationError("assignment is missing a value for variable " + name);
    return it->second;
}

std::vector<Violation> validate_assignment(const MilpModel& model, const MilpAssignment& asn,
                                           double tol) {
    std::vector<double> value(model.variables().size());
    std::vector<Violation> out;
    for (std::size_t i = 0; i < model.variables().size(); ++i) {
        const MilpVariable& v = model.variables()[i];
        double val = asn.at(v.name);
        value[i] = val;
        if (v.kind == VarKind::Binary) {
            double off = std::min(std::fabs(val), std::fabs(val - 1.0));
            if (off > tol) out.push_back({"bin_" + v.name, off});
        } else if (val < -tol) {
            out.push_back({"lb_" + v.name, -val});
        }
    }
    for (const MilpRow& row : model.rows()) {
        double lhs = 0.0;
        for (auto [var, coef] : row.terms) lhs += coef * value[static_cast<std::size_t>(var)];
        double violation = 0.0;
        switch (row.sense) {
            case RowSense::Le: violation = lhs - row.rhs; break;
            case RowSense::Ge: violation = row.rhs - lhs; break;
            case RowSense::Eq: violation = std::fabs(lhs - row.rhs); break;
        }
        if (violation > tol) out.push_back({row.name, violation});
    }
    return out;
}

MilpAssignment string_to_assignment(const SolutionString& s,
                                    const std::vector<int>& route_to_drone,
                                    const Scenario& scn, const MilpModel& model) {
    const Params& P = scn.params();
    int n = scn.location_count();
    validate_solution(s, n);
    if (model.location_count() != n)
        throw ValidationError("string_to_assignment: model built for a different location count");
    bool battery_mode = model.battery_type_count() > 0;

    std::vector<std::vector<int>> routes = nonempty_routes(s);
    std::size_t route_count = routes.size();
    if (route_to_drone.size() != route_count)
        throw ValidationError("string_to_assignment: schedule covers " +
                              std::to_string(route_to_drone.size()) + " routes, string has " +
                              std::to_string(route_count));

    MilpAssignment asn;
    for (const MilpVariable& v : model.variables()) asn.values.emplace(v.name, 0.0);
    auto set = [&asn](const std::string& name, double value) {
        auto it = asn.values.find(name);
        if (it == asn.values.end())
            throw ValidationError("string_to_assignment: no model variable named " + name);
        it->second = value;
    };
    auto leg_time = [&](int i, int j) { return P.service_time + scn.distance(i, j) / P.speed; };

    int max_drone = -1;
    for (int d : route_to_drone) {
        if (d < 0) throw ValidationError("string_to_assignment: negative drone index");
        max_drone = std::max(max_drone, d);
    }
    std::vector<double> drone_clock(static_cast<std::size_t>(max_drone) + 1, 0.0);
    std::vector<int> drone_last_stop(static_cast<std::size_t>(max_drone) + 1, -1);
    int reuse_arcs = 0;
    double latest_delivery = 0.0;
    double battery_price_total = 0.0;  // battery-mode replacement for energy cost
    double energy_total = 0.0;         // sum of route energies g_i

    for (std::size_t ri = 0; ri < route_count; ++ri) {
        const std::vector<int>& route = routes[ri];
        int drone = route_to_drone[ri];
        auto di = static_cast<std::size_t>(drone);

        // Per-route totals for battery sizing: route time and the
        // time-weight product of its legs.
        double route_time = 0.0, tw_product = 0.0, payload = 0.0;
        {
            double remaining = 0.0;
            for (int stop : route) remaining += scn.demand(stop);
            payload = remaining;
            int prev = 0;
            for (int stop : route) {
                double t = leg_time(prev, stop);
                route_time += t;
                tw_product += remaining * t;
                remaining -= scn.demand(stop);
                prev = stop;
            }
            route_time += leg_time(route.back(), 0);
        }

        double battery_weight, battery_capacity_kj;
        if (battery_mode) {
            BatterySelection pick = discrete_battery_assign(route_time, tw_product,
                                                            scn.battery_types(), P.power_model);
            battery_weight = 0.0;
            battery_capacity_kj = 0.0;
            for (int t : pick.chosen) {
                const BatteryType& type = scn.battery_types()[static_cast<std::size_t>(t)];
                battery_weight += type.weight;
                battery_capacity_kj += type.energy;
                set(two_index("h", t, route.back()), 1.0);
            }
            battery_price_total += pick.total_cost;
        } else {
            double route_energy =
                battery_energy(route_time, tw_product, P.power_model, P.energy_density);
            if (!(route_energy > 0.0) || !std::isfinite(route_energy))
                throw ValidationError("string_to_assignment: route " + std::to_string(ri) +
                                      " has non-positive battery energy; solution is infeasible");
            battery_weight = route_energy / P.energy_density;
            battery_capacity_kj = route_energy;
        }
        if (payload + battery_weight > P.capacity)
            throw ValidationError("string_to_assignment: route " + std::to_string(ri) +
                                  " exceeds carrying capacity; solution is infeasible");

        // Reuse arc from this drone's previous route, if any.
        if (drone_last_stop[di] >= 0) {
            set(two_index("z", drone_last_stop[di], route.front()), 1.0);
            ++reuse_arcs;
        }

        // Walk the route: edges, payload flow, battery weights, timeline,
        // energy recursion.
        double clock = drone_clock[di];
        double consumed = 0.0;
        double remaining = payload;
        int prev = 0;
        for (int stop : route) {
            double t = leg_time(prev, stop);
            set(two_index("x", prev, stop), 1.0);
            set(two_index("f", prev, stop), remaining);
            set(two_index("b", prev, stop), battery_weight);
            clock += t;
            consumed += (P.power_model.alpha * (battery_weight + remaining) + P.power_model.beta) * t;
            set(one_index("a", stop), clock);
            set(one_index("e", stop), consumed);
            set(one_index("y", stop), battery_weight);
            latest_delivery = std::max(latest_delivery, clock);
            remaining -= scn.demand(stop);
            prev = stop;
        }
        int last = route.back();
        double t_back = leg_time(last, 0);
        set(two_index("x", last, 0), 1.0);
        set(two_index("b", last, 0), battery_weight);
        clock += t_back;
        consumed += (P.power_model.alpha * battery_weight + P.power_model.beta) * t_back;
        set(one_index("r", last), clock);
        set(one_index("g", last), consumed);
        if (consumed > battery_capacity_kj + 1e-9 * std::max(1.0, battery_capacity_kj))
            throw ValidationError("string_to_assignment: route " + std::to_string(ri) +
                                  " consumes more than its battery holds");
        energy_total += consumed;
        drone_clock[di] = clock;
        drone_last_stop[di] = last;
    }

    int drones_used = 0;
    for (int d = 0; d <= max_drone; ++d)
        if (drone_last_stop[static_cast<std::size_t>(d)] >= 0) ++drones_used;
    if (drones_used > P.max_drones)
        throw ValidationError("string_to_assignment: schedule uses " +
                              std::to_string(drones_used) + " drones, fleet cap is " +
                              std::to_string(P.max_drones));

    double total_cost = P.drone_cost * static_cast<double>(route_count) -
                        P.drone_cost * static_cast<double>(reuse_arcs) +
                        (battery_mode ? battery_price_total : P.energy_price * energy_total);
    if (latest_delivery > P.time_limit)
        throw ValidationError("string_to_assignment: deliveries finish after the time limit");
    if (total_cost > P.budget)
        throw ValidationError("string_to_assignment: cost exceeds the budget");
    set("l", latest_delivery);
    set("c", total_cost);
    return asn;
}

}  // namespace ddp
