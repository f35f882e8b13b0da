#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ddp/common.hpp"
#include "ddp/route_cost.hpp"
#include "ddp/sa_solver.hpp"
#include "ddp/scenario.hpp"
#include "ddp/solution.hpp"

using namespace ddp;

namespace {

// Depot plus three collinear customers at 180, 120 and 60 metres, demand
// 1 kg each: leg times and energies stay hand-computable.
Scenario line_scenario(Params params = {}) {
    return Scenario({{0, 0}, {180, 0}, {120, 0}, {60, 0}}, {1.0, 1.0, 1.0}, params);
}

Scenario one_customer(Params params = {}) {
    return Scenario({{0, 0}, {180, 0}}, {1.0}, params);
}

}  // namespace

TEST_CASE("solution strings: validation, route extraction, printing") {
    SolutionString s{{0, 3, 1, 0, 2, 0, 0}};
    CHECK_NOTHROW(validate_solution(s, 3));
    CHECK(to_string(s) == "[0 3 1 0 2 0 0]");
    std::vector<std::vector<int>> routes = nonempty_routes(s);
    REQUIRE(routes.size() == 2);
    CHECK(routes[0] == std::vector<int>{3, 1});
    CHECK(routes[1] == std::vector<int>{2});

    CHECK_THROWS_AS(validate_solution(SolutionString{{0, 1, 0, 0}}, 1), ValidationError);
    CHECK_THROWS_AS(validate_solution(SolutionString{{1, 0, 0}}, 1), ValidationError);
    CHECK_THROWS_AS(validate_solution(SolutionString{{0, 1, 1, 0, 0}}, 2), ValidationError);
    CHECK_THROWS_AS(validate_solution(SolutionString{{0, 1, 3, 0, 0}}, 2), ValidationError);
    CHECK_THROWS_AS(validate_solution(SolutionString{{0, 0, 1, 0}}, 1), ValidationError);
    CHECK_THROWS_AS(validate_solution(SolutionString{{}}, 0), ValidationError);
}

TEST_CASE("battery energy closed form") {
    LinearPowerModel m{0.217, 0.185};
    CHECK(battery_energy(100.0, 50.0, m, 650.0) ==
          doctest::Approx(30.363679770810123).epsilon(1e-12));
    CHECK(battery_energy(0.0, 0.0, m, 650.0) == 0.0);
    CHECK_THROWS_AS(battery_energy(-1.0, 0.0, m, 650.0), ValidationError);
    CHECK_THROWS_AS(battery_energy(1.0, -1.0, m, 650.0), ValidationError);
    // Past the pole at t = 650/0.217 s the raw value turns negative.
    CHECK(battery_energy(3000.0, 0.0, m, 650.0) < 0.0);
}

TEST_CASE("battery energy satisfies its own fixed-point identity") {
    LinearPowerModel m{0.217, 0.185};
    Rng rng(2024);
    for (int k = 0; k < 10000; ++k) {
        double t = rng.uniform(0.0, 2500.0);  // below the ~2995 s pole
        double omega = rng.uniform(0.0, 3.0) * t;
        double e = battery_energy(t, omega, m, 650.0);
        double residual = std::fabs(e * (1.0 - (m.alpha / 650.0) * t) -
                                    (m.alpha * omega + m.beta * t));
        CHECK(residual < 1e-9 * std::max(1.0, std::fabs(e)));
    }
}

TEST_CASE("single-route energy cost, hand-checked") {
    Scenario scn = one_customer();
    SolutionString s{{0, 1, 0}};
    EnergyCost ec = energy_cost(s, scn);
    REQUIRE(ec.route_energies.size() == 1);
    CHECK(ec.route_energies[0] == doctest::Approx(56.207647232134086).epsilon(1e-12));
    CHECK(ec.lambda == doctest::Approx(5.620764723213409).epsilon(1e-12));
    CHECK_FALSE(ec.penalized);
}

TEST_CASE("multi-route energies in string order, cost invariant under route order") {
    Scenario scn = line_scenario();
    SolutionString a{{0, 1, 0, 2, 3, 0, 0}};
    SolutionString b{{0, 2, 3, 0, 0, 1, 0}};
    EnergyCost ea = energy_cost(a, scn);
    EnergyCost eb = energy_cost(b, scn);
    REQUIRE(ea.route_energies.size() == 2);
    CHECK(ea.route_energies[0] == doctest::Approx(56.207647232134086).epsilon(1e-12));
    CHECK(ea.route_energies[1] == doctest::Approx(97.79248165244246).epsilon(1e-12));
    // Same routes, opposite order: same money, energies permuted.
    CHECK(ea.lambda == doctest::Approx(eb.lambda).epsilon(1e-12));
    CHECK(eb.route_energies[0] == doctest::Approx(ea.route_energies[1]).epsilon(1e-12));
    CHECK(eb.route_energies[1] == doctest::Approx(ea.route_energies[0]).epsilon(1e-12));
}

TEST_CASE("route timings: last delivery vs depot return") {
    Scenario scn = line_scenario();
    SolutionString s{{0, 1, 0, 2, 3, 0, 0}};
    RouteTiming u = route_times(s, scn);
    REQUIRE(u.pairs.size() == 2);
    CHECK(u.pairs[0].first == doctest::Approx(90.0));
    CHECK(u.pairs[0].second == doctest::Approx(180.0));
    CHECK(u.pairs[1].first == doctest::Approx(150.0));
    CHECK(u.pairs[1].second == doctest::Approx(220.0));
}

TEST_CASE("list scheduling: greedy earliest-drone assignment") {
    RouteTiming u;
    u.pairs = {{4.0, 5.0}, {3.0, 4.0}, {2.0, 3.0}};
    CHECK(list_schedule(u, 1) == doctest::Approx(11.0));
    CHECK(list_schedule(u, 2) == doctest::Approx(6.0));
    CHECK(list_schedule(u, 3) == doctest::Approx(4.0));
    CHECK(list_schedule(u, 50) == doctest::Approx(4.0));
    CHECK_THROWS_AS(list_schedule(u, 0), ValidationError);
    CHECK(list_schedule(RouteTiming{}, 3) == 0.0);

    std::vector<int> assign;
    CHECK(list_schedule_assign(u, 2, assign) == doctest::Approx(6.0));
    CHECK(assign == std::vector<int>{0, 1, 1});

    // More drones never hurt.
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        RouteTiming v;
        int routes = static_cast<int>(rng.uniform_int(1, 8));
        for (int r = 0; r < routes; ++r) {
            double p = rng.uniform(1.0, 50.0);
            v.pairs.emplace_back(p, p + rng.uniform(0.0, 10.0));
        }
        double prev = list_schedule(v, 1);
        for (int n = 2; n <= 6; ++n) {
            double cur = list_schedule(v, n);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("schedule replay matches the reported assignment") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        RouteTiming u;
        int routes = static_cast<int>(rng.uniform_int(1, 10));
        for (int r = 0; r < routes; ++r) {
            double p = rng.uniform(1.0, 40.0);
            u.pairs.emplace_back(p, p + rng.uniform(0.0, 15.0));
        }
        int n = static_cast<int>(rng.uniform_int(1, 5));
        std::vector<int> assign;
        double reported = list_schedule_assign(u, n, assign);
        REQUIRE(assign.size() == u.pairs.size());
        std::vector<double> clock(static_cast<std::size_t>(n), 0.0);
        double latest = 0.0;
        for (std::size_t r = 0; r < u.pairs.size(); ++r) {
            REQUIRE(assign[r] >= 0);
            REQUIRE(assign[r] < n);
            auto d = static_cast<std::size_t>(assign[r]);
            latest = std::max(latest, clock[d] + u.pairs[r].first);
            clock[d] += u.pairs[r].second;
        }
        CHECK(latest == doctest::Approx(reported).epsilon(1e-12));
    }
}

TEST_CASE("fleet sizing when minimizing cost: smallest fleet meeting the deadline") {
    Params params;
    Scenario scn = generate_random(6, 0.25, 0.5, 2.0, 5, params);
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        SolutionString s = random_solution(6, rng);
        RouteTiming u = route_times(s, scn);
        Params p2 = params;
        p2.time_limit = rng.uniform(100.0, 900.0);
        Scenario scn2 = generate_random(6, 0.25, 0.5, 2.0, 5, p2);
        DroneCost dc = drone_cost_and_delivery_time(s, 0.0, true, scn2);
        // Reference: linear scan for the smallest fleet within the limit.
        int expected = p2.max_drones;
        for (int n = 1; n <= p2.max_drones; ++n)
            if (list_schedule(u, n) <= p2.time_limit) {
                expected = n;
                break;
            }
        CHECK(dc.drone_count == expected);
        CHECK(dc.delivery_time == doctest::Approx(list_schedule(u, expected)).epsilon(1e-12));
        CHECK(dc.drone_cost == doctest::Approx(expected * p2.drone_cost));
    }
}

TEST_CASE("fleet sizing when minimizing time: spend what the budget allows") {
    Scenario scn = line_scenario();
    SolutionString s{{0, 1, 0, 2, 3, 0, 0}};
    double lambda = energy_cost(s, scn).lambda;

    CHECK(drone_cost_and_delivery_time(s, lambda, false, scn).drone_count == 2);
    // A tiny budget still fields one drone (the penalty fires later).
    Params poor;
    poor.budget = 100.0;
    CHECK(drone_cost_and_delivery_time(s, lambda, false, line_scenario(poor)).drone_count == 1);
    // A huge budget is clamped by the fleet cap.
    Params rich;
    rich.budget = 1e9;
    CHECK(drone_cost_and_delivery_time(s, lambda, false, line_scenario(rich)).drone_count ==
          rich.max_drones);
    // Overflow-scale budgets must not wrap the int.
    Params vast;
    vast.budget = 1e18;
    CHECK(drone_cost_and_delivery_time(s, lambda, false, line_scenario(vast)).drone_count ==
          vast.max_drones);
}

TEST_CASE("full evaluation without penalties, both objectives") {
    Scenario scn = line_scenario();
    SolutionString s{{0, 1, 0, 2, 3, 0, 0}};

    CostBreakdown mt = cost(s, false, scn);
    CHECK(mt.energy_cost == doctest::Approx(15.400012888457656).epsilon(1e-12));
    CHECK(mt.drone_count == 2);
    CHECK(mt.drone_cost == doctest::Approx(1000.0));
    CHECK(mt.delivery_time == doctest::Approx(150.0));  // two drones in parallel
    CHECK(mt.total_cost == doctest::Approx(1015.400012888457656).epsilon(1e-12));
    CHECK_FALSE(mt.penalized);

    CostBreakdown mc = cost(s, true, scn);
    CHECK(mc.drone_count == 1);  // one drone already meets T = 600 s
    CHECK(mc.delivery_time == doctest::Approx(330.0));  // 180 + 150
    CHECK(mc.total_cost == doctest::Approx(515.400012888457656).epsilon(1e-12));
    CHECK_FALSE(mc.penalized);

    CHECK(detail::cost_unchecked(s, false, scn, {}) == mt);
}

TEST_CASE("budget penalty fires first and lands on both objectives") {
    Params params;
    params.budget = 400.0;      // cannot even afford the mandatory first drone
    params.time_limit = 100.0;  // the single-drone 330 s schedule breaks this too
    Scenario scn = line_scenario(params);
    SolutionString s{{0, 1, 0, 2, 3, 0, 0}};

    // Pre-penalty amounts: one drone, both routes in sequence.
    double c_pre = 515.400012888457656;
    double l_pre = 330.0;
    // Both limits are violated, but only the budget penalty may fire.
    double penalty = params.big_k * (c_pre - params.budget);
    CostBreakdown b = cost(s, false, scn);
    CHECK(b.penalized);
    CHECK(b.drone_count == 1);
    CHECK(b.total_cost == doctest::Approx(c_pre + penalty).epsilon(1e-9));
    CHECK(b.delivery_time == doctest::Approx(l_pre + penalty).epsilon(1e-9));
}

TEST_CASE("time penalty fires when the budget holds") {
    Params params;
    params.time_limit = 100.0;  // single-drone MC schedule takes 330 s
    params.max_drones = 1;
    Scenario scn = line_scenario(params);
    SolutionString s{{0, 1, 0, 2, 3, 0, 0}};

    double c_pre = 515.400012888457656;
    double l_pre = 330.0;
    double penalty = params.big_k * (l_pre - params.time_limit);
    CostBreakdown b = cost(s, true, scn);
    CHECK(b.penalized);
    CHECK(b.total_cost == doctest::Approx(c_pre + penalty).epsilon(1e-9));
    CHECK(b.delivery_time == doctest::Approx(l_pre + penalty).epsilon(1e-9));
}

TEST_CASE("penalties relax monotonically as the limits loosen") {
    SolutionString s{{0, 1, 0, 2, 3, 0, 0}};
    // Minimizing time: a larger budget can only speed things up.
    double prev_l = 0.0;
    bool first = true;
    for (double budget : {400.0, 600.0, 800.0, 1000.0, 1200.0, 2000.0}) {
        Params params;
        params.budget = budget;
        params.max_drones = 2;
        CostBreakdown b = cost(s, false, line_scenario(params));
        if (!first) CHECK(b.delivery_time <= prev_l + 1e-9);
        prev_l = b.delivery_time;
        first = false;
    }
    first = true;
    double prev_time = 0.0;
    for (double limit : {60.0, 120.0, 200.0, 330.0, 500.0}) {
        Params params;
        params.time_limit = limit;
        params.max_drones = 1;
        CostBreakdown b = cost(s, true, line_scenario(params));
        if (!first) CHECK(b.delivery_time <= prev_time + 1e-9);
        prev_time = b.delivery_time;
        first = false;
    }
}

TEST_CASE("carrying-capacity violation is penalized") {
    Params params;
    Scenario scn({{0, 0}, {180, 0}}, {2.95}, params);  // payload + battery > 3 kg
    SolutionString s{{0, 1, 0}};
    CostBreakdown b = cost(s, true, scn);
    CHECK(b.penalized);
    CHECK(b.total_cost > params.big_k / 100.0);
}

TEST_CASE("reuse-disabled mode pins the fleet to the route count") {
    Scenario scn = line_scenario();
    SolutionString two_routes{{0, 1, 0, 2, 3, 0, 0}};
    SolutionString three_routes{{0, 1, 0, 2, 0, 3, 0}};
    EvalOptions opts;
    opts.reuse_disabled = true;
    CHECK(cost(two_routes, true, scn, opts).drone_count == 2);
    CHECK(cost(three_routes, true, scn, opts).drone_count == 3);
    CHECK(cost(two_routes, false, scn, opts).drone_count == 2);
    // With a drone per route, nothing ever queues.  (Three drones overrun
    // the default budget, so relax it to see the raw schedule.)
    Params rich;
    rich.budget = 1e6;
    CHECK(cost(three_routes, false, line_scenario(rich), opts).delivery_time ==
          doctest::Approx(90.0));
}

TEST_CASE("fixed-battery mode prices capacity, not need") {
    Scenario scn = one_customer();
    SolutionString s{{0, 1, 0}};
    EvalOptions opts;
    opts.fixed_battery_weight = 0.2;

    EnergyCost ec = energy_cost(s, scn, opts);
    REQUIRE(ec.route_energies.size() == 1);
    CHECK(ec.route_energies[0] == doctest::Approx(130.0));  // 650 kJ/kg * 0.2 kg
    CHECK(ec.lambda == doctest::Approx(13.0));
    CHECK_FALSE(ec.penalized);

    // Too small a battery: shortfall penalty proportional to the gap.
    EvalOptions small;
    small.fixed_battery_weight = 0.05;
    const Params& P = scn.params();
    double t = 180.0, omega = 90.0;
    double cap = P.energy_density * 0.05;
    double required = P.power_model.alpha * omega +
                      (P.power_model.alpha * 0.05 + P.power_model.beta) * t;
    EnergyCost shortfall = energy_cost(s, scn, small);
    CHECK(shortfall.penalized);
    CHECK(shortfall.lambda ==
          doctest::Approx(cap * P.energy_price +
                          P.big_k * (required - cap) * P.energy_price).epsilon(1e-9));

    // Oversized battery: capacity violation.
    Scenario heavy({{0, 0}, {180, 0}}, {2.9}, Params{});
    EvalOptions big;
    big.fixed_battery_weight = 0.2;
    EnergyCost crowded = energy_cost(SolutionString{{0, 1, 0}}, heavy, big);
    CHECK(crowded.penalized);
    CHECK(crowded.lambda ==
          doctest::Approx(13.0 + Params{}.big_k * (2.9 + 0.2 - 3.0)).epsilon(1e-9));

    EvalOptions bad;
    bad.fixed_battery_weight = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("cost breakdown CSV row") {
    CostBreakdown b;
    b.energy_cost = 5.5;
    b.drone_cost = 1000.0;
    b.total_cost = 1005.5;
    b.delivery_time = 180.0;
    b.drone_count = 2;
    b.penalized = false;
    b.route_energies = {56.5, 97.25};
    CHECK(std::string(kCostBreakdownCsvHeader) ==
          "energy_cost,drone_cost,total_cost,delivery_time,drone_count,penalized,route_energies");
    CHECK(to_csv_row(b) == "5.5,1000,1005.5,180,2,0,56.5;97.25");
}

TEST_CASE("battery picking: cheapest cover wins") {
    std::vector<BatteryType> types{{0.1, 50.0, 5.0}, {0.2, 100.0, 9.0}, {0.5, 300.0, 30.0}};
    LinearPowerModel m{0.217, 0.185};
    BatterySelection pick = discrete_battery_assign(100.0, 20.0, types, m);
    CHECK(pick.chosen == std::vector<int>{0});
    CHECK(pick.total_cost == doctest::Approx(5.0));

    // Nothing to power: empty selection.
    BatterySelection none = discrete_battery_assign(0.0, 0.0, types, m);
    CHECK(none.chosen.empty());
    CHECK(none.total_cost == 0.0);

    // A battery that eats itself in carrying cost cannot cover anything.
    std::vector<BatteryType> weak{{1.0, 10.0, 1.0}};
    CHECK_THROWS_AS(discrete_battery_assign(100.0, 0.0, weak, m), InfeasibleError);
    CHECK_THROWS_AS(discrete_battery_assign(100.0, 0.0, {}, m), ValidationError);
    CHECK_THROWS_AS(discrete_battery_assign(-1.0, 0.0, types, m), ValidationError);
}
