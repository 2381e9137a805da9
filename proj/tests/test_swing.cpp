#include "citeswing/swing.hpp"

#include "citeswing/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace citeswing;
using namespace citeswing::testing;

namespace {

CoreMetrics core_of(const std::vector<std::int64_t>& counts)
{
    return core_metrics(make_records(counts));
}

} // namespace

TEST_SUITE_BEGIN("swing");

TEST_CASE("swing metrics on the worked vector")
{
    const auto m = swing_metrics(core_of({10, 8, 5, 4, 3, 2, 1}));
    CHECK(m.theta == doctest::Approx(1.2060453783110545).epsilon(1e-12));
    CHECK(m.epsilon == doctest::Approx(0.6382847385042254).epsilon(1e-12));
    CHECK(m.theta_sq == doctest::Approx(16.0 / 11.0).epsilon(1e-12));
    CHECK(m.epsilon_sq == doctest::Approx(11.0 / 27.0).epsilon(1e-12));
    CHECK(m.branch == Branch::ExactOnly);
    CHECK_FALSE(m.csf_approx.has_value());
}

TEST_CASE("one heavily cited paper pushes epsilon_sq towards 1")
{
    const auto m = swing_metrics(core_of({1000000}));
    CHECK(m.epsilon_sq == doctest::Approx(999999.0 / 1000000.0).epsilon(1e-12));
    CHECK(m.epsilon < 1.0);
}

TEST_CASE("h equal to e gives the symmetric point")
{
    // h = 3, e_sq = 9: theta = 1, epsilon = 1/sqrt(2), epsilon_sq = 0.5.
    const auto counts = prescribed_core_counts(3, 9, 2);
    const auto core = core_of(counts);
    REQUIRE(core.h == 3);
    REQUIRE(core.e_sq == 9);
    const auto m = swing_metrics(core);
    CHECK(m.theta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.epsilon == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(m.epsilon_sq == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.branch == Branch::ExactOnly); // theta = 1 sits on the exact branch
}

TEST_CASE("swing metrics preconditions")
{
    CHECK_THROWS_AS(swing_metrics(core_of({1})), UndefinedTheta);  // e_sq = 0
    CHECK_THROWS_AS(swing_metrics(core_of({0, 0})), UndefinedH);   // h = 0
}

TEST_CASE("epsilon_from_theta known values and limits")
{
    CHECK(epsilon_from_theta(1.0) == doctest::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(epsilon_from_theta(1e6) == doctest::Approx(1e-6).epsilon(1e-9));
    CHECK(epsilon_from_theta(1e-6) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(epsilon_from_theta(0.0), DomainError);
    CHECK_THROWS_AS(epsilon_from_theta(-2.0), DomainError);
}

TEST_CASE("theta_from_epsilon known values")
{
    CHECK(theta_from_epsilon(1.0 / std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(theta_from_epsilon(0.6382847385042254) ==
          doctest::Approx(1.2060453783110545).epsilon(1e-10));
    CHECK(theta_from_epsilon(0.999999) == doctest::Approx(1.4142146230624378e-3).epsilon(1e-9));
    CHECK_THROWS_AS(theta_from_epsilon(0.0), DomainError);
    CHECK_THROWS_AS(theta_from_epsilon(1.0), DomainError);
    CHECK_THROWS_AS(theta_from_epsilon(-0.5), DomainError);
    CHECK_THROWS_AS(theta_from_epsilon(1.5), DomainError);
}

TEST_CASE("theta <-> epsilon round trip")
{
    for (double exponent = -3.0; exponent <= 3.0; exponent += 0.125) {
        const double theta = std::pow(10.0, exponent);
        const double back = theta_from_epsilon(epsilon_from_theta(theta));
        CHECK(back == doctest::Approx(theta).epsilon(1e-10));
    }
}

TEST_CASE("conversions are strictly decreasing")
{
    double prev = epsilon_from_theta(1e-3);
    for (double theta = 2e-3; theta < 1e3; theta *= 1.37) {
        const double eps = epsilon_from_theta(theta);
        CHECK(eps < prev);
        prev = eps;
    }

    prev = theta_from_epsilon(0.01);
    for (double eps = 0.02; eps < 1.0; eps += 0.01) {
        const double theta = theta_from_epsilon(eps);
        CHECK(theta < prev);
        prev = theta;
    }
}

TEST_CASE("maclaurin approximation values and degradation at 1")
{
    CHECK(maclaurin_epsilon(0.1) == doctest::Approx(0.995).epsilon(1e-15));
    const double exact_01 = epsilon_from_theta(0.1);
    CHECK(exact_01 == doctest::Approx(0.9950371902099892).epsilon(1e-12));
    CHECK(std::abs(maclaurin_epsilon(0.1) - exact_01) < 3.75e-5);

    // Series tends to 1 as theta -> 0.
    CHECK(maclaurin_epsilon(1e-8) == doctest::Approx(1.0).epsilon(1e-15));

    // At theta = 1 the truncation is visibly off the exact value.
    CHECK(maclaurin_epsilon(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(epsilon_from_theta(1.0) == doctest::Approx(0.70710678).epsilon(1e-7));

    CHECK_THROWS_AS(maclaurin_epsilon(0.0), DomainError);
    CHECK_THROWS_AS(maclaurin_epsilon(1.0000001), DomainError);
}

TEST_CASE("maclaurin error bounded by the next series term")
{
    for (int i = 1; i <= 100; ++i) {
        const double theta = 0.7 * i / 100.0;
        const double err = std::abs(maclaurin_epsilon(theta) - epsilon_from_theta(theta));
        CHECK(err <= 0.375 * theta * theta * theta * theta);
    }
}

TEST_CASE("theta_from_epsilon_approx values and domain")
{
    CHECK(theta_from_epsilon_approx(0.995) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(theta_from_epsilon_approx(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(theta_from_epsilon_approx(0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // Forced to 0 in the limit epsilon -> 1.
    CHECK(theta_from_epsilon_approx(1.0 - 1e-14) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK_THROWS_AS(theta_from_epsilon_approx(1.0), DomainError);
    CHECK_THROWS_AS(theta_from_epsilon_approx(-0.1), DomainError);
}

TEST_CASE("csf_exact frozen values")
{
    CHECK(csf_exact(core_of({10, 8, 5, 4, 3, 2, 1})) ==
          doctest::Approx(-3.188548077569979).epsilon(1e-12));

    // Symmetric point h = e: -2 sqrt(2).
    const auto sym = core_of(prescribed_core_counts(3, 9, 0));
    CHECK(csf_exact(sym) == doctest::Approx(-2.8284271247461903).epsilon(1e-12));

    // Smallest nondegenerate input: one paper, two citations.
    CHECK(csf_exact(core_of({2})) == doctest::Approx(-2.8284271247461903).epsilon(1e-12));
}

TEST_CASE("csf routes agree: -R^3/(h e^2) vs -1/(theta eps^3)")
{
    std::mt19937_64 rng(29);
    int checked = 0;
    while (checked < 500) {
        const auto core = core_of(random_counts(rng, 50, 300));
        if (core.h < 1 || core.e_sq < 1) {
            continue;
        }
        ++checked;
        const auto m = swing_metrics(core);
        CHECK(csf_exact(core) == doctest::Approx(csf_from_theta(m.theta)).epsilon(1e-9));
    }
}

TEST_CASE("csf_exact matches the finite difference of theta(epsilon)")
{
    // The exact form is a derivative everywhere in theta > 0, not just
    // where theta exceeds 1.
    for (int i = 0; i < 100; ++i) {
        const double theta = 0.2 * std::pow(25.0, i / 99.0);
        const double eps = epsilon_from_theta(theta);
        const double fd = central_difference([](double e) { return theta_from_epsilon(e); },
                                             eps, 1e-6);
        CHECK(csf_from_theta(theta) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("csf_approx direct values and branch guard")
{
    CHECK(csf_approx(core_of(prescribed_core_counts(1, 4, 0))) ==
          doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(csf_approx(core_of(prescribed_core_counts(2, 25, 0))) ==
          doctest::Approx(-2.5).epsilon(1e-12));
    CHECK_THROWS_AS(csf_approx(core_of({10, 8, 5, 4, 3, 2, 1})), BranchError);
}

TEST_CASE("csf is negative wherever defined")
{
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 500) {
        const auto core = core_of(random_counts(rng, 50, 300));
        if (core.h < 1 || core.e_sq < 1) {
            continue;
        }
        ++checked;
        const auto m = swing_metrics(core);
        CHECK(m.csf_exact < 0.0);
        CHECK((m.theta < 1.0) == m.csf_approx.has_value());
        if (m.csf_approx) {
            CHECK(*m.csf_approx < 0.0);
            CHECK(m.branch == Branch::ApproxValid);
        }
    }
}

TEST_CASE("identity eps = (1 + theta^2)^(-1/2) holds on data")
{
    std::mt19937_64 rng(37);
    int checked = 0;
    while (checked < 1000) {
        const auto core = core_of(random_counts(rng, 60, 400));
        if (core.h < 1 || core.e_sq < 1) {
            continue;
        }
        ++checked;
        const auto m = swing_metrics(core);
        CHECK(m.epsilon == doctest::Approx(epsilon_from_theta(m.theta)).epsilon(1e-12));
        CHECK(m.epsilon > 0.0);
        CHECK(m.epsilon < 1.0);
        CHECK(m.theta > 0.0);
    }
}

TEST_CASE("case classification")
{
    auto label_of = [](const std::vector<std::int64_t>& counts) {
        const auto records = make_records(counts);
        return classify_case(records, core_metrics(records));
    };

    CHECK(label_of({1}) == CaseLabel::Case1);
    CHECK(label_of({9}) == CaseLabel::Case2);
    CHECK(label_of({1, 1, 1, 1, 1}) == CaseLabel::Case3);
    CHECK(label_of({0, 0, 0}) == CaseLabel::DegenerateZero);
    CHECK(label_of({0}) == CaseLabel::DegenerateZero);

    // Many items, few citations in total.
    std::vector<std::int64_t> many_small(150, 0);
    many_small[0] = 3;
    many_small[1] = 2;
    CHECK(label_of(many_small) == CaseLabel::Case4_1);

    // Few items, many citations.
    CHECK(label_of({200, 150, 40}) == CaseLabel::Case4_2);

    // Modest sizes split on theta: h = 3, e_sq = 9 sits in the h ~ e band.
    CHECK(label_of(prescribed_core_counts(3, 9, 2)) == CaseLabel::Case4_3_3);

    // Large flat corpus: theta well above 2.
    std::vector<std::int64_t> flat(60, 30);
    CHECK(label_of(flat) == CaseLabel::Case4_3_2);

    // One dominant item in a large corpus: theta below 0.5.
    std::vector<std::int64_t> hot(120, 1);
    hot[0] = 400;
    CHECK(label_of(hot) == CaseLabel::Case4_3_1);
}

TEST_SUITE_END();
