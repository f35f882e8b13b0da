#include "ddp/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ddp/common.hpp"

namespace ddp {

void Params::validate() const {
    if (!(drone_cost > 0.0)) throw ValidationError("Params: drone_cost must be > 0");
    if (!(capacity > 0.0)) throw ValidationError("Params: capacity must be > 0");
    if (!(speed > 0.0)) throw ValidationError("Params: speed must be > 0");
    if (!(service_time > 0.0)) throw ValidationError("Params: service_time must be > 0");
    if (!(energy_density > 0.0)) throw ValidationError("Params: energy_density must be > 0");
    if (!(energy_price > 0.0)) throw ValidationError("Params: energy_price must be > 0");
    if (!(power_model.alpha > 0.0)) throw ValidationError("Params: power_model.alpha must be > 0");
    if (!(power_model.beta > 0.0)) throw ValidationError("Params: power_model.beta must be > 0");
    if (max_drones < 1) throw ValidationError("Params: max_drones must be >= 1");
    if (!(budget > 0.0)) throw ValidationError("Params: budget must be > 0");
    if (!(time_limit > 0.0)) throw ValidationError("Params: time_limit must be > 0");
    if (!(big_k > 0.0)) throw ValidationError("Params: big_k must be > 0");
}

Scenario::Scenario(std::vector<Point> locations, std::vector<double> demands, Params params,
                   std::vector<BatteryType> battery_types, std::optional<FrameSpec> frame)
    : locations_(std::move(locations)),
      params_(std::move(params)),
      battery_types_(std::move(battery_types)),
      frame_(std::move(frame)) {
    if (locations_.empty()) throw ValidationError("Scenario: needs at least the depot location");
    if (demands.size() != locations_.size() - 1)
        throw ValidationError("Scenario: expected one demand per non-depot location, got " +
                              std::to_string(demands.size()) + " for " +
                              std::to_string(locations_.size() - 1) + " locations");
    for (const Point& p : locations_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError("Scenario: location coordinates must be finite");
    for (double d : demands)
        if (!(d > 0.0) || !std::isfinite(d))
            throw ValidationError("Scenario: demands must be strictly positive and finite");
    params_.validate();
    for (const BatteryType& b : battery_types_)
        if (!(b.weight > 0.0) || !(b.energy > 0.0) || !(b.cost > 0.0))
            throw ValidationError("Scenario: battery type fields must be strictly positive");
    if (frame_) frame_->validate();

    // Depot demand slot keeps demand(i) index-aligned with locations.
    demands_.reserve(locations_.size());
    demands_.push_back(0.0);
    demands_.insert(demands_.end(), demands.begin(), demands.end());

    std::size_t n = locations_.size();
    dist_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double dx = locations_[i].x - locations_[j].x;
            double dy = locations_[i].y - locations_[j].y;
            // sqrt instead of hypot: correctly rounded everywhere, so
            // distances (and files derived from them) are bit-stable.
            dist_[i * n + j] = std::sqrt(dx * dx + dy * dy);
        }
    }
}

double Scenario::demand(int i) const {
    if (i < 0 || i >= static_cast<int>(demands_.size()))
        throw ValidationError("Scenario::demand: index " + std::to_string(i) + " out of range");
    return demands_[static_cast<std::size_t>(i)];
}

double Scenario::distance(int i, int j) const {
    int n = static_cast<int>(locations_.size());
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw ValidationError("Scenario::distance: index out of range (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
    return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
}

bool Scenario::operator==(const Scenario& other) const {
    return locations_ == other.locations_ && demands_ == other.demands_ &&
           params_ == other.params_ && battery_types_ == other.battery_types_ &&
           frame_ == other.frame_;
}

Scenario generate_random(int n_locations, double area_km2, double demand_min,
                         double demand_max, std::uint64_t seed, const Params& params) {
    if (n_locations < 1) throw ValidationError("generate_random: n_locations must be >= 1");
    if (!(area_km2 > 0.0)) throw ValidationError("generate_random: area must be > 0");
    if (!(demand_min > 0.0) || demand_max < demand_min)
        throw ValidationError("generate_random: demand range must satisfy 0 < min <= max");
    params.validate();

    double side = std::sqrt(area_km2) * 1000.0;  // m
    Rng rng(seed);
    std::vector<Point> locations;
    locations.reserve(static_cast<std::size_t>(n_locations) + 1);
    locations.push_back({side / 2.0, side / 2.0});  // depot at the centre
    for (int i = 0; i < n_locations; ++i) {
        double x = rng.uniform(0.0, side);
        double y = rng.uniform(0.0, side);
        locations.push_back({x, y});
    }
    std::vector<double> demands(static_cast<std::size_t>(n_locations));
    for (double& d : demands) d = rng.uniform(demand_min, demand_max);
    return Scenario(std::move(locations), std::move(demands), params);
}

namespace {

using nlohmann::json;

json params_to_json(const Params& p) {
    return json{{"drone_cost", p.drone_cost},
                {"capacity", p.capacity},
                {"speed", p.speed},
                {"service_time", p.service_time},
                {"energy_density", p.energy_density},
                {"energy_price", p.energy_price},
                {"power_model", {{"alpha", p.power_model.alpha}, {"beta", p.power_model.beta}}},
                {"max_drones", p.max_drones},
                {"budget", p.budget},
                {"time_limit", p.time_limit},
                {"big_k", p.big_k}};
}

Params params_from_json(const json& j) {
    Params p;
    p.drone_cost = j.at("drone_cost").get<double>();
    p.capacity = j.at("capacity").get<double>();
    p.speed = j.at("speed").get<double>();
    p.service_time = j.at("service_time").get<double>();
    p.energy_density = j.at("energy_density").get<double>();
    p.energy_price = j.at("energy_price").get<double>();
    p.power_model.alpha = j.at("power_model").at("alpha").get<double>();
    p.power_model.beta = j.at("power_model").at("beta").get<double>();
    p.max_drones = j.at("max_drones").get<int>();
    p.budget = j.at("budget").get<double>();
    p.time_limit = j.at("time_limit").get<double>();
    p.big_k = j.at("big_k").get<double>();
    return p;
}

}  // namespace

void save_scenario(const Scenario& scn, std::ostream& out) {
    json j;
    j["locations"] = json::array();
    for (const Point& p : scn.locations()) j["locations"].push_back({p.x, p.y});
    j["demands"] = json::array();
    for (int i = 1; i <= scn.location_count(); ++i) j["demands"].push_back(scn.demand(i));
    j["params"] = params_to_json(scn.params());
    if (!scn.battery_types().empty()) {
        j["battery_types"] = json::array();
        for (const BatteryType& b : scn.battery_types())
            j["battery_types"].push_back(
                {{"weight", b.weight}, {"energy", b.energy}, {"cost", b.cost}});
    }
    if (scn.frame()) {
        const FrameSpec& f = *scn.frame();
        j["frame"] = {{"rotor_count", f.rotor_count},
                      {"fluid_density", f.fluid_density},
                      {"rotor_disc_area", f.rotor_disc_area},
                      {"frame_weight", f.frame_weight},
                      {"gravity", f.gravity}};
    }
    out << j.dump(2) << '\n';
}

void save_scenario(const Scenario& scn, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("save_scenario: cannot open " + path + " for writing");
    save_scenario(scn, out);
    if (!out) throw ValidationError("save_scenario: write to " + path + " failed");
}

Scenario load_scenario(std::istream& in, const std::string& origin) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    try {
        std::vector<Point> locations;
        for (const auto& loc : j.at("locations")) {
            if (!loc.is_array() || loc.size() != 2)
                throw ParseError(origin + ": each location must be a [x, y] pair");
            locations.push_back({loc[0].get<double>(), loc[1].get<double>()});
        }
        std::vector<double> demands;
        for (const auto& d : j.at("demands")) demands.push_back(d.get<double>());
        if (locations.empty())
            throw ParseError(origin + ": locations array is empty");
        if (demands.size() != locations.size() - 1)
            throw ParseError(origin + ": " + std::to_string(locations.size() - 1) +
                             " non-depot locations but " + std::to_string(demands.size()) +
                             " demand entries");
        Params params = params_from_json(j.at("params"));
        std::vector<BatteryType> battery_types;
        if (j.contains("battery_types"))
            for (const auto& b : j.at("battery_types"))
                battery_types.push_back({b.at("weight").get<double>(),
                                         b.at("energy").get<double>(),
                                         b.at("cost").get<double>()});
        std::optional<FrameSpec> frame;
        if (j.contains("frame")) {
            const auto& f = j.at("frame");
            frame = FrameSpec{f.at("rotor_count").get<int>(), f.at("fluid_density").get<double>(),
                              f.at("rotor_disc_area").get<double>(),
                              f.at("frame_weight").get<double>(), f.at("gravity").get<double>()};
        }
        return Scenario(std::move(locations), std::move(demands), std::move(params),
                        std::move(battery_types), frame);
    } catch (const json::exception& e) {
        // Wrong type or missing key anywhere above.
        throw ParseError(origin + ": " + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_scenario: cannot open " + path);
    return load_scenario(in, path);
}

void write_distance_csv(const Scenario& scn, std::ostream& out) {
    int n = scn.location_count() + 1;
    out << "location";
    for (int j = 0; j < n; ++j) out << ',' << j;
    out << '\n';
    for (int i = 0; i < n; ++i) {
        out << i;
        for (int j = 0; j < n; ++j) out << ',' << format_double(scn.distance(i, j));
        out << '\n';
    }
}

}  // namespace ddp
