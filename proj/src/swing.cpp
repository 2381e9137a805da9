#include "citeswing/swing.hpp"

#include "citeswing/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace citeswing {

namespace {

void require_swing_defined(const CoreMetrics& core)
{
    if (core.h < 1) {
        throw UndefinedH("h = 0: swing metrics undefined");
    }
    if (core.e_sq < 1) {
        throw UndefinedTheta("e_sq = 0: theta undefined");
    }
}

} // namespace

std::string_view to_string(Branch branch)
{
    return branch == Branch::ApproxValid ? "APPROX_VALID" : "EXACT_ONLY";
}

std::string_view to_string(CaseLabel label)
{
    switch (label) {
        case CaseLabel::Case1: return "CASE_1";
        case CaseLabel::Case2: return "CASE_2";
        case CaseLabel::Case3: return "CASE_3";
        case CaseLabel::Case4_1: return "CASE_4_1";
        case CaseLabel::Case4_2: return "CASE_4_2";
        case CaseLabel::Case4_3_1: return "CASE_4_3_1";
        case CaseLabel::Case4_3_2: return "CASE_4_3_2";
        case CaseLabel::Case4_3_3: return "CASE_4_3_3";
        case CaseLabel::DegenerateZero: return "DEGENERATE_ZERO";
    }
    return "DEGENERATE_ZERO";
}

SwingMetrics swing_metrics(const CoreMetrics& core)
{
    require_swing_defined(core);

    const double h = static_cast<double>(core.h);
    const double e = std::sqrt(static_cast<double>(core.e_sq));

    SwingMetrics m;
    m.theta = h / e;
    m.epsilon = e / core.r;
    m.theta_sq = (h * h) / static_cast<double>(core.e_sq);
    m.epsilon_sq = static_cast<double>(core.e_sq) / static_cast<double>(core.d_sq);
    m.csf_exact = csf_exact(core);
    if (m.theta < 1.0) {
        m.csf_approx = csf_approx(core);
        m.branch = Branch::ApproxValid;
    } else {
        m.branch = Branch::ExactOnly;
    }
    return m;
}

double epsilon_from_theta(double theta)
{
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw DomainError("epsilon_from_theta: theta must be > 0");
    }
    return 1.0 / std::sqrt(1.0 + theta * theta);
}

double theta_from_epsilon(double epsilon)
{
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw DomainError("theta_from_epsilon: epsilon must lie in (0, 1)");
    }
    return std::sqrt(1.0 - epsilon * epsilon) / epsilon;
}

double maclaurin_epsilon(double theta)
{
    if (!(theta > 0.0) || !(theta <= 1.0)) {
        throw DomainError("maclaurin_epsilon: theta must lie in (0, 1]");
    }
    return 1.0 - 0.5 * theta * theta;
}

double theta_from_epsilon_approx(double epsilon)
{
    if (!(epsilon >= 0.0) || !(epsilon < 1.0)) {
        throw DomainError("theta_from_epsilon_approx: epsilon must lie in [0, 1)");
    }
    return std::sqrt(2.0 * (1.0 - epsilon));
}

double csf_exact(const CoreMetrics& core)
{
    require_swing_defined(core);
    const double r3 = core.r * core.r * core.r;
    return -r3 / (static_cast<double>(core.h) * static_cast<double>(core.e_sq));
}

double csf_from_theta(double theta)
{
    const double epsilon = epsilon_from_theta(theta);
    return -1.0 / (theta * epsilon * epsilon * epsilon);
}

double csf_approx(const CoreMetrics& core)
{
    require_swing_defined(core);
    const double e = std::sqrt(static_cast<double>(core.e_sq));
    const double theta = static_cast<double>(core.h) / e;
    if (theta >= 1.0) {
        throw BranchError("csf_approx: requires theta < 1 (h^2 < e^2), got theta = " +
                          std::to_string(theta));
    }
    return -e / static_cast<double>(core.h);
}

CaseLabel classify_case(std::span<const CitationRecord> records, const CoreMetrics& core)
{
    constexpr std::int64_t kLarge = 100;

    if (core.total == 0) {
        return CaseLabel::DegenerateZero;
    }

    const auto n_items = static_cast<std::int64_t>(records.size());
    if (n_items == 1) {
        return core.total == 1 ? CaseLabel::Case1 : CaseLabel::Case2;
    }

    const std::int64_t max_citations =
        std::max_element(records.begin(), records.end(),
                         [](const CitationRecord& a, const CitationRecord& b) {
                             return a.citations < b.citations;
                         })
            ->citations;
    if (max_citations <= 1) {
        return CaseLabel::Case3;
    }

    const bool p_large = n_items >= kLarge;
    const bool c_large = core.total >= kLarge;
    if (p_large && !c_large) {
        return CaseLabel::Case4_1;
    }
    if (!p_large && c_large) {
        return CaseLabel::Case4_2;
    }

    // Both large, or both modest: subdivide on theta.
    if (core.e_sq == 0) {
        return CaseLabel::Case4_3_2;
    }
    const double theta = static_cast<double>(core.h) / std::sqrt(static_cast<double>(core.e_sq));
    if (theta < 0.5) {
        return CaseLabel::Case4_3_1;
    }
    if (theta > 2.0) {
        return CaseLabel::Case4_3_2;
    }
    return CaseLabel::Case4_3_3;
}

} // namespace citeswing
