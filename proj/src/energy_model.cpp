#include "ddp/energy_model.hpp"

#include <cmath>
#include <vector>

#include "ddp/common.hpp"

namespace ddp {

void FrameSpec::validate() const {
    if (rotor_count < 1) throw ValidationError("FrameSpec: rotor_count must be >= 1");
    if (!(fluid_density > 0.0)) throw ValidationError("FrameSpec: fluid_density must be > 0");
    if (!(rotor_disc_area > 0.0)) throw ValidationError("FrameSpec: rotor_disc_area must be > 0");
    if (frame_weight < 0.0) throw ValidationError("FrameSpec: frame_weight must be >= 0");
    if (!(gravity > 0.0)) throw ValidationError("FrameSpec: gravity must be > 0");
}

double power_single_rotor(double thrust, const FrameSpec& frame) {
    frame.validate();
    if (thrust < 0.0) throw ValidationError("power_single_rotor: thrust must be >= 0");
    return std::pow(thrust, 1.5) / std::sqrt(2.0 * frame.fluid_density * frame.rotor_disc_area);
}

double power_exact(double carried_weight, const FrameSpec& frame) {
    frame.validate();
    if (carried_weight < 0.0) throw ValidationError("power_exact: carried_weight must be >= 0");
    // All rotors share the load equally, so total power collapses to
    // (W+m)^(3/2) * sqrt(g^3 / (2 rho sigma n)).
    double total_mass = frame.frame_weight + carried_weight;
    double g = frame.gravity;
    return std::pow(total_mass, 1.5) *
           std::sqrt(g * g * g / (2.0 * frame.fluid_density * frame.rotor_disc_area *
                                  static_cast<double>(frame.rotor_count)));
}

double power_linear(double carried_weight, const LinearPowerModel& model) {
    if (carried_weight < 0.0) throw ValidationError("power_linear: carried_weight must be >= 0");
    return model.alpha * carried_weight + model.beta;
}

std::pair<LinearPowerModel, FitReport> fit_linear(const FrameSpec& frame,
                                                  double fit_min,
                                                  double fit_max,
                                                  double step) {
    frame.validate();
    if (!(step > 0.0)) throw ValidationError("fit_linear: step must be > 0");
    if (fit_max < fit_min) throw ValidationError("fit_linear: empty fit range");

    // Inclusive uniform grid; the epsilon keeps fit_max itself in the grid
    // despite accumulated rounding in fit_min + k*step.
    std::vector<double> xs;
    for (long k = 0; fit_min + static_cast<double>(k) * step <= fit_max + 1e-12; ++k)
        xs.push_back(fit_min + static_cast<double>(k) * step);
    if (xs.size() < 2) throw ValidationError("fit_linear: need at least 2 samples");

    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = power_exact(xs[i], frame);

    double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LinearPowerModel model;
    model.alpha = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    model.beta = (sy - model.alpha * sx) / n;

    FitReport report;
    report.fit_min = fit_min;
    report.fit_max = fit_max;
    report.step = step;
    double pct_sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double diff = std::fabs(ys[i] - power_linear(xs[i], model));
        pct_sum += diff / ys[i];
        if (diff > report.max_abs_difference) report.max_abs_difference = diff;
    }
    report.mean_percent_error = pct_sum / n * 100.0;
    return {model, report};
}

}  // namespace ddp
