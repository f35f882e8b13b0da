#pragma once

#include <utility>

namespace ddp {

// Physical description of a multirotor airframe.  Everything the hover-power
// formula needs and nothing else.
struct FrameSpec {
    int rotor_count = 6;
    double fluid_density = 1.204;   // kg/m^3, air at ~20 C
    double rotor_disc_area = 0.2;   // m^2 swept per rotor
    double frame_weight = 1.5;      // kg, frame + battery
    double gravity = 9.81;          // m/s^2

    void validate() const;  // throws ValidationError
    bool operator==(const FrameSpec&) const = default;
};

// Power as an affine function of carried weight: P(m) = alpha*m + beta.
// alpha and beta must share a unit family (both W-based or both kW-based);
// the fit below produces watts, route costing uses kilowatts.
struct LinearPowerModel {
    double alpha = 0.0;  // power per kg of carried weight
    double beta = 0.0;   // power at zero payload
    bool operator==(const LinearPowerModel&) const = default;
};

// Quality of a linear fit against the exact hover-power curve, measured on
// the same sample grid the fit used.
struct FitReport {
    double mean_percent_error = 0.0;  // mean of |exact-linear|/exact, in %
    double max_abs_difference = 0.0;  // worst |exact-linear|, in W
    double fit_min = 0.0;             // kg, low end of the sample grid
    double fit_max = 0.0;             // kg, high end
    double step = 0.0;                // kg between samples
};

// Hover power of one rotor producing `thrust` newtons.
// P = thrust^(3/2) / sqrt(2 * rho * area)
double power_single_rotor(double thrust, const FrameSpec& frame);

// Hover power of the whole frame carrying `carried_weight` kg of payload,
// in watts.  Weight is split evenly across the rotors.
double power_exact(double carried_weight, const FrameSpec& frame);

// The affine approximation, in whatever units `model` is expressed in.
double power_linear(double carried_weight, const LinearPowerModel& model);

// Ordinary least-squares fit of power_exact over the inclusive grid
// fit_min, fit_min+step, ..., fit_max.  Returns the fitted model (watts)
// plus error statistics computed over the same grid.
std::pair<LinearPowerModel, FitReport> fit_linear(const FrameSpec& frame,
                                                  double fit_min,
                                                  double fit_max,
                                                  double step);

// W/kg and W -> kW/kg and kW, for handing a fitted model to route costing.
inline LinearPowerModel to_kilowatts(const LinearPowerModel& watts_model) {
    return {watts_model.alpha / 1000.0, watts_model.beta / 1000.0};
}

}  // namespace ddp
