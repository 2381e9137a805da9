#ifndef CITESWING_SWING_HPP
#define CITESWING_SWING_HPP

#include "citeswing/indicators.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace citeswing {

// Which CSF expressions are available for a given core.
// The exact form -R^3/(h e^2) is valid for every theta > 0; the
// series-based form -e/h only holds for theta < 1.
enum class Branch { ExactOnly, ApproxValid };

// Range classification of a citation vector, diagnostic only.
// "Large" P or C means >= 100; "h of the same order as e" means
// 0.5 <= theta <= 2.
enum class CaseLabel {
    Case1,          // P=1, C=1: h=1, e=0
    Case2,          // P=1, C>1: single item with excess citations
    Case3,          // P>1, every item cited at most once: h=1, e=0
    Case4_1,        // many items, few citations
    Case4_2,        // few items, many citations
    Case4_3_1,      // h << e (theta < 0.5)
    Case4_3_2,      // h >> e (theta > 2, or e = 0)
    Case4_3_3,      // h ~ e  (0.5 <= theta <= 2)
    DegenerateZero, // no citations at all, h = 0
};

std::string_view to_string(Branch branch);
std::string_view to_string(CaseLabel label);

// Centrifuging/scattering metrics of one snapshot.
//
//   theta      h/e,   folds of h-core over excess citations (sqrt of FHE)
//   epsilon    e/R,   folds of excess over total citations (sqrt of FET)
//   csf_exact  dtheta/depsilon = -R^3/(h e^2) = -1/(theta epsilon^3)
//   csf_approx -e/h, present only when theta < 1
//
// Invariant: epsilon == (1 + theta^2)^(-1/2) within 1e-12 relative.
struct SwingMetrics {
    double theta = 0.0;
    double epsilon = 0.0;
    double theta_sq = 0.0;
    double epsilon_sq = 0.0;
    double csf_exact = 0.0;
    std::optional<double> csf_approx;
    Branch branch = Branch::ExactOnly;
};

// Throws UndefinedH when core.h = 0 and UndefinedTheta when core.e_sq = 0.
SwingMetrics swing_metrics(const CoreMetrics& core);

// epsilon = (1 + theta^2)^(-1/2); strictly decreasing. DomainError for
// theta <= 0 or non-finite.
double epsilon_from_theta(double theta);

// theta = sqrt((1 - epsilon^2)/epsilon^2), the exact inverse of
// epsilon_from_theta. DomainError outside (0, 1).
double theta_from_epsilon(double epsilon);

// Second-order series approximation 1 - theta^2/2, valid on (0, 1].
// Absolute error against the exact form is bounded by (3/8) theta^4.
double maclaurin_epsilon(double theta);

// Inverse of the series approximation: theta = sqrt(2 (1 - epsilon)),
// positive root. DomainError outside [0, 1).
double theta_from_epsilon_approx(double epsilon);

// Exact Citation Swing Factor -R^3/(h e^2); always negative.
double csf_exact(const CoreMetrics& core);

// Exact CSF as a function of theta alone: -1/(theta epsilon^3) with
// epsilon = epsilon_from_theta(theta). Algebraically identical to
// csf_exact on the corresponding core.
double csf_from_theta(double theta);

// Approximate CSF -e/h = -1/theta. BranchError when theta >= 1; the
// approximation is only derived for theta < 1.
double csf_approx(const CoreMetrics& core);

// Diagnostic case classification; never throws.
CaseLabel classify_case(std::span<const CitationRecord> records, const CoreMetrics& core);

} // namespace citeswing

#endif
