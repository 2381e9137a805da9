#ifndef CITESWING_TEMPORAL_HPP
#define CITESWING_TEMPORAL_HPP

#include "citeswing/indicators.hpp"

#include <optional>
#include <span>

namespace citeswing {

// One observation of theta or epsilon at item age t (t >= 1).
struct TimedPoint {
    double t = 1.0;
    double value = 0.0;
};

// Parameters of value(t) = amplitude * t^(-exponent), fitted by ordinary
// least squares in log-log space. The model requires exponent > 0; when
// the unconstrained fit yields exponent <= 0 the fit is reported as-is
// with model_violation set, never clamped.
struct PowerLawFit {
    double amplitude = 0.0;
    double exponent = 0.0;
    double rms_log_residual = 0.0;
    int n_points = 0;
    bool model_violation = false;
};

// Additive decomposition of the total differential into the
// (d/d-epsilon or d/d-theta) part and the power-law decay part.
// total = spatial_term + temporal_term always; the temporal term
// vanishes as t grows. spatial_term_approx carries the -e/h (resp.
// -h/e) variant, present only when theta < 1.
struct DifferentialComponents {
    double spatial_term = 0.0;
    double temporal_term = 0.0;
    double total = 0.0;
    std::optional<double> spatial_term_approx;
};

// Least-squares fit of (ln t, ln value). Throws InsufficientData for
// fewer than 2 points, NonPositiveValue for values <= 0, DuplicateTime
// for repeated t, DomainError for t < 1.
PowerLawFit fit_power_law(std::span<const TimedPoint> series);

// amplitude * t^(-exponent). At t = 1 this is exactly the amplitude.
// DomainError for t < 1.
double eval_model(const PowerLawFit& fit, double t);

// d/dt of eval_model: -amplitude * exponent * t^(-(exponent+1)).
// Strictly negative with magnitude decreasing in t. ModelViolation when
// exponent <= 0, DomainError for t < 1.
double temporal_rate(const PowerLawFit& fit, double t);

// spatial = -R^3/(h e^2) (the exact CSF), temporal = theta decay rate.
DifferentialComponents dtheta_components(const CoreMetrics& core, const PowerLawFit& fit_theta,
                                         double t);

// spatial = -h e^2/R^3 (reciprocal of the CSF), temporal = epsilon
// decay rate.
DifferentialComponents depsilon_components(const CoreMetrics& core, const PowerLawFit& fit_eps,
                                           double t);

} // namespace citeswing

#endif
