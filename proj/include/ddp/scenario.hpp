#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ddp/energy_model.hpp"

namespace ddp {

struct Point {
    double x = 0.0;  // m
    double y = 0.0;  // m
    bool operator==(const Point&) const = default;
};

// One purchasable battery model for the discrete-battery variant.
struct BatteryType {
    double weight = 0.0;  // kg
    double energy = 0.0;  // kJ
    double cost = 0.0;    // financial units
    bool operator==(const BatteryType&) const = default;
};

// Problem constants shared by every location.  Defaults are the standard
// experiment set used throughout the tests.
struct Params {
    double drone_cost = 500.0;     // $ per drone purchased
    double capacity = 3.0;         // kg carried (battery + payload)
    double speed = 6.0;            // m/s cruise
    double service_time = 60.0;    // s spent descending/delivering/ascending per stop
    double energy_density = 650.0; // kJ per kg of battery
    double energy_price = 0.1;     // $ per kJ
    LinearPowerModel power_model{0.217, 0.185};  // kW/kg and kW
    int max_drones = 100;          // fleet size cap
    double budget = 1500.0;        // $ total
    double time_limit = 600.0;     // s for the last delivery
    double big_k = 1e6;            // penalty / linearization constant

    void validate() const;  // throws ValidationError
    bool operator==(const Params&) const = default;
};

// An immutable delivery instance: depot + customer locations, per-customer
// demands, constants, and (optionally) a battery-type catalogue and the
// airframe the power model was fitted from.  Distances are precomputed.
class Scenario {
public:
    Scenario(std::vector<Point> locations,       // index 0 is the depot
             std::vector<double> demands,        // one per non-depot location, kg
             Params params,
             std::vector<BatteryType> battery_types = {},
             std::optional<FrameSpec> frame = std::nullopt);

    // Number of non-depot locations.
    int location_count() const { return static_cast<int>(locations_.size()) - 1; }

    const std::vector<Point>& locations() const { return locations_; }

    // Demand of location i; the depot (i = 0) demands nothing.
    double demand(int i) const;

    // Euclidean distance in metres between locations i and j.
    double distance(int i, int j) const;

    const Params& params() const { return params_; }
    const std::vector<BatteryType>& battery_types() const { return battery_types_; }
    const std::optional<FrameSpec>& frame() const { return frame_; }

    bool operator==(const Scenario& other) const;

private:
    std::vector<Point> locations_;
    std::vector<double> demands_;  // index-aligned with locations_; demands_[0] == 0
    Params params_;
    std::vector<BatteryType> battery_types_;
    std::optional<FrameSpec> frame_;
    std::vector<double> dist_;     // flattened (n+1) x (n+1)
};

// Random instance on a square of the given area with the depot at its
// centre.  Locations are drawn uniformly (x then y per location, in index
// order), then demands uniformly in [demand_min, demand_max].  The same
// seed always produces the same scenario.
Scenario generate_random(int n_locations, double area_km2, double demand_min,
                         double demand_max, std::uint64_t seed, const Params& params);

// JSON persistence.  load(save(s)) reproduces every numeric field exactly.
void save_scenario(const Scenario& scn, const std::string& path);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scn, std::ostream& out);
Scenario load_scenario(std::istream& in, const std::string& origin = "<stream>");

// Distance matrix dump for eyeballing instances.
void write_distance_csv(const Scenario& scn, std::ostream& out);

}  // namespace ddp
