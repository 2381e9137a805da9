#include "citeswing/temporal.hpp"

#include "citeswing/errors.hpp"
#include "citeswing/swing.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace citeswing {

namespace {

void require_model_time(double t)
{
    if (!(t >= 1.0) || !std::isfinite(t)) {
        throw DomainError("model time must satisfy t >= 1, got " + std::to_string(t));
    }
}

} // namespace

PowerLawFit fit_power_law(std::span<const TimedPoint> series)
{
    if (series.size() < 2) {
        throw InsufficientData("power-law fit needs at least 2 points, got " +
                               std::to_string(series.size()));
    }
    for (const auto& p : series) {
        require_model_time(p.t);
        if (!(p.value > 0.0) || !std::isfinite(p.value)) {
            throw NonPositiveValue("power-law fit needs values > 0, got " +
                                   std::to_string(p.value) + " at t = " + std::to_string(p.t));
        }
    }
    {
        std::vector<double> ts;
        ts.reserve(series.size());
        for (const auto& p : series) {
            ts.push_back(p.t);
        }
        std::sort(ts.begin(), ts.end());
        if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) {
            throw DuplicateTime("power-law fit needs distinct t values");
        }
    }

    const auto n = static_cast<double>(series.size());
    double sx = 0.0;
    double sy = 0.0;
    for (const auto& p : series) {
        sx += std::log(p.t);
        sy += std::log(p.value);
    }
    const double mx = sx / n;
    const double my = sy / n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : series) {
        const double dx = std::log(p.t) - mx;
        const double dy = std::log(p.value) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    // t values are distinct, so sxx > 0.
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double ss_res = 0.0;
    for (const auto& p : series) {
        const double res = std::log(p.value) - (intercept + slope * std::log(p.t));
        ss_res += res * res;
    }

    PowerLawFit fit;
    fit.amplitude = std::exp(intercept);
    fit.exponent = -slope;
    fit.rms_log_residual = std::sqrt(ss_res / n);
    fit.n_points = static_cast<int>(series.size());
    fit.model_violation = !(fit.exponent > 0.0);
    return fit;
}

double eval_model(const PowerLawFit& fit, double t)
{
    require_model_time(t);
    return fit.amplitude * std::pow(t, -fit.exponent);
}

double temporal_rate(const PowerLawFit& fit, double t)
{
    require_model_time(t);
    if (!(fit.exponent > 0.0)) {
        throw ModelViolation("temporal rate requires exponent > 0, got " +
                             std::to_string(fit.exponent));
    }
    return -fit.amplitude * fit.exponent * std::pow(t, -(fit.exponent + 1.0));
}

DifferentialComponents dtheta_components(const CoreMetrics& core, const PowerLawFit& fit_theta,
                                         double t)
{
    DifferentialComponents c;
    c.spatial_term = csf_exact(core);
    c.temporal_term = temporal_rate(fit_theta, t);
    c.total = c.spatial_term + c.temporal_term;

    const double e = std::sqrt(static_cast<double>(core.e_sq));
    const double theta = static_cast<double>(core.h) / e;
    if (theta < 1.0) {
        c.spatial_term_approx = csf_approx(core);
    }
    return c;
}

DifferentialComponents depsilon_components(const CoreMetrics& core, const PowerLawFit& fit_eps,
                                           double t)
{
    if (core.h < 1) {
        throw UndefinedH("h = 0: differential components undefined");
    }
    if (core.e_sq < 1) {
        throw UndefinedTheta("e_sq = 0: differential components undefined");
    }

    DifferentialComponents c;
    const double r3 = core.r * core.r * core.r;
    c.spatial_term = -(static_cast<double>(core.h) * static_cast<double>(core.e_sq)) / r3;
    c.temporal_term = temporal_rate(fit_eps, t);
    c.total = c.spatial_term + c.temporal_term;

    const double e = std::sqrt(static_cast<double>(core.e_sq));
    const double theta = static_cast<double>(core.h) / e;
    if (theta < 1.0) {
        c.spatial_term_approx = -theta; // -h/e
    }
    return c;
}

} // namespace citeswing
