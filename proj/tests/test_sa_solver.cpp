#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "ddp/common.hpp"
#include "ddp/route_cost.hpp"
#include "ddp/sa_solver.hpp"
#include "ddp/scenario.hpp"
#include "ddp/solution.hpp"

using namespace ddp;

TEST_CASE("rng helpers: inclusive integer bounds, unit-interval doubles") {
    Rng rng(1);
    bool saw_lo = false, saw_hi = false;
    for (int k = 0; k < 1000; ++k) {
        auto v = rng.uniform_int(3, 5);
        CHECK(v >= 3);
        CHECK(v <= 5);
        saw_lo = saw_lo || v == 3;
        saw_hi = saw_hi || v == 5;
    }
    CHECK(saw_lo);
    CHECK(saw_hi);
    CHECK_THROWS_AS(rng.uniform_int(2, 1), ValidationError);
    for (int k = 0; k < 1000; ++k) {
        double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    // Same seed, same stream.
    Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) CHECK(a.raw() == b.raw());
}

TEST_CASE("seed derivation separates instances and runs") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 50; ++i)
        for (std::uint64_t r = 0; r < 30; ++r) seen.insert(derive_seed(7, i, r));
    CHECK(seen.size() == 50u * 30u);
    CHECK(derive_seed(7, 1, 2) == derive_seed(7, 1, 2));
    CHECK(derive_seed(7, 1, 2) != derive_seed(8, 1, 2));
}

TEST_CASE("doubles survive the text round trip unchanged") {
    for (double v : {0.1, 1.0 / 3.0, 56.207647232134086, -1e-17, 12345678.9012345, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("annealing config validation") {
    SaConfig ok;
    CHECK_NOTHROW(ok.validate());
    SaConfig c = ok;
    c.cooling_factor = 1.0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = ok;
    c.cooling_factor = 0.0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = ok;
    c.final_temperature = 2.0;  // above initial
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = ok;
    c.final_temperature = 0.0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = ok;
    c.rounds_per_phase = 0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("random solutions are always well-formed and varied") {
    Rng rng(11);
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k < 50; ++k) {
            SolutionString s = random_solution(n, rng);
            CHECK_NOTHROW(validate_solution(s, n));
        }
    }
    std::set<std::string> seen;
    for (int k = 0; k < 400; ++k) seen.insert(to_string(random_solution(4, rng)));
    CHECK(seen.size() > 50);  // 4 locations + 3 interior zeros mix freely
    CHECK_THROWS_AS(random_solution(0, rng), ValidationError);
}

TEST_CASE("exchange rules, hand-checked") {
    SolutionString s{{0, 1, 2, 3, 0}};

    CHECK(apply_exchange(s, ExchangeRule::Swap, 1, 3).entries ==
          std::vector<int>{0, 3, 2, 1, 0});
    // Relocate removes entry i, then inserts it at position j of the
    // shortened string.
    CHECK(apply_exchange(s, ExchangeRule::Relocate, 1, 3).entries ==
          std::vector<int>{0, 2, 3, 1, 0});
    CHECK(apply_exchange(s, ExchangeRule::TwoOpt, 1, 3).entries ==
          std::vector<int>{0, 3, 2, 1, 0});
    CHECK(apply_exchange(s, ExchangeRule::TwoOpt, 3, 1).entries ==
          std::vector<int>{0, 3, 2, 1, 0});

    // Swapping twice is the identity.
    SolutionString once = apply_exchange(s, ExchangeRule::Swap, 2, 3);
    CHECK(apply_exchange(once, ExchangeRule::Swap, 2, 3).entries == s.entries);

    // The terminal zeros are untouchable.
    CHECK_THROWS_AS(apply_exchange(s, ExchangeRule::Swap, 0, 2), ValidationError);
    CHECK_THROWS_AS(apply_exchange(s, ExchangeRule::Swap, 1, 4), ValidationError);

    // Moves keep multi-route strings valid.
    Rng rng(3);
    SolutionString t{{0, 2, 0, 1, 3, 0, 0}};
    for (int k = 0; k < 300; ++k) {
        int i = static_cast<int>(rng.uniform_int(1, 5));
        int j = static_cast<int>(rng.uniform_int(1, 5));
        auto rule = static_cast<ExchangeRule>(rng.uniform_int(1, 3));
        t = apply_exchange(t, rule, i, j);
        CHECK_NOTHROW(validate_solution(t, 3));
    }
}

TEST_CASE("metropolis rule") {
    // Improvements always pass: exp(-delta/T) >= 1 > x.
    CHECK(metropolis_accept(-5.0, 0.5, 0.999999));
    CHECK(metropolis_accept(0.0, 0.5, 0.999999));
    // Large uphill move at low temperature: essentially never.
    CHECK_FALSE(metropolis_accept(100.0, 0.001, 1e-12));
    // Exact threshold: exp(-1) vs x.
    CHECK(metropolis_accept(1.0, 1.0, std::exp(-1.0)));
    CHECK_FALSE(metropolis_accept(1.0, 1.0, std::nextafter(std::exp(-1.0), 1.0)));
}

TEST_CASE("cooling schedule lengths") {
    Scenario scn = generate_random(3, 0.25, 0.5, 2.0, 1, Params{});
    SaConfig fast;
    fast.cooling_factor = 0.9;
    fast.rounds_per_phase = 1;
    SaResult r = simulated_annealing(scn, fast);
    CHECK(r.trace.phases.size() == 66);
    CHECK(r.trace.phases.front().phase == 1);
    CHECK(r.trace.phases.back().phase == 66);
    CHECK(r.trace.phases.front().temperature == doctest::Approx(0.9));
    CHECK(r.trace.phases.back().temperature <= 0.001);

    SaConfig slow;  // default 0.99 cooling
    slow.rounds_per_phase = 1;
    CHECK(simulated_annealing(scn, slow).trace.phases.size() == 688);
}

TEST_CASE("annealing is deterministic per seed and self-consistent") {
    Scenario scn = generate_random(5, 0.25, 0.5, 2.0, 17, Params{});
    SaConfig cfg;
    cfg.cooling_factor = 0.9;
    cfg.seed = 1234;

    SaResult a = simulated_annealing(scn, cfg);
    SaResult b = simulated_annealing(scn, cfg);
    CHECK(a.solution.entries == b.solution.entries);
    CHECK(a.breakdown == b.breakdown);
    REQUIRE(a.trace.phases.size() == b.trace.phases.size());
    CHECK(a.trace.phases.back().best_objective == b.trace.phases.back().best_objective);

    // The recorded breakdown matches a fresh evaluation of the solution.
    CostBreakdown fresh = cost(a.solution, cfg.minimize_cost, scn);
    CHECK(fresh == a.breakdown);

    cfg.seed = 1235;
    SaResult c = simulated_annealing(scn, cfg);
    CHECK_FALSE(a.solution.entries == c.solution.entries);
}

TEST_CASE("annealing improves on where it starts") {
    Scenario scn = generate_random(6, 0.25, 0.5, 2.0, 23, Params{});
    SaConfig cfg;
    cfg.cooling_factor = 0.9;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        cfg.seed = seed;
        // The first random string is what phase 1 starts from.
        Rng rng(seed);
        SolutionString start = random_solution(6, rng);
        double start_obj = cost(start, cfg.minimize_cost, scn).delivery_time;
        SaResult r = simulated_annealing(scn, cfg);
        CHECK(r.breakdown.delivery_time <= start_obj);
        CHECK_FALSE(r.breakdown.penalized);
    }
}

TEST_CASE("trace CSV shape") {
    SaTrace trace;
    trace.phases.push_back({1, 0.9, 330.0, 7});
    trace.phases.push_back({2, 0.81, 320.5, 3});
    std::stringstream out;
    write_trace_csv(trace, out);
    std::string line;
    std::getline(out, line);
    CHECK(line == "phase,temperature,best_objective,accepted");
    std::getline(out, line);
    CHECK(line == "1,0.9,330,7");
    std::getline(out, line);
    CHECK(line == "2,0.81,320.5,3");
}
