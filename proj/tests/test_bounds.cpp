#include <doctest.h>

#include <numbers>

#include "qspectra/bounds.hpp"
#include "qspectra/explorer.hpp"
#include "qspectra/sensitivity.hpp"

using namespace qspectra;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

BoundReport two_valued_report(const DiscreteFunction& f) {
    return bounds_two_valued(degree_profile(forward(f)), f.spec().q(), relevant_count(f));
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("f_2 on Z_4^3") {
    const DiscreteFunction f = gen_fm_pm1(2, 3);
    const BoundReport r = two_valued_report(f);
    CHECK(r.t_observed == 2);
    CHECK(r.find("two_valued.deg1")->value == doctest::Approx(2 * kPi2));
    CHECK(r.find("two_valued.deg2")->value == doctest::Approx(kPi2));
    CHECK(r.all_hold());
    CHECK(tightness(r) == doctest::Approx(2.0 / kPi2));
    CHECK(tightness(r) == doctest::Approx(0.202642367285).epsilon(1e-11));
    // q = 4 is a power of two, so this comparison constant does not apply
    const BoundEntry* ctx = r.find("context.dq^(d+1)/(4(q-1))");
    REQUIRE(ctx != nullptr);
    CHECK(ctx->value == doctest::Approx(32.0 / 3.0));
    CHECK_FALSE(ctx->applicable);
    CHECK_FALSE(ctx->asserted);
    CHECK(r.find("context.d2^(d-1)")->applicable == false);
    CHECK(r.find("context.4.394*2^(ceil(log2 q)d)")->value == doctest::Approx(4.394 * 16));
    CHECK(r.find("missing") == nullptr);
}

TEST_CASE("small two-valued examples") {
    const auto f = DiscreteFunction::from_codes(DomainSpec(3, 1), ValueKind::two_valued_pm1, {1, 1, -1});
    const BoundReport r = two_valued_report(f);
    CHECK(r.find("two_valued.deg1")->value == doctest::Approx(kPi2 / 4));
    CHECK(r.find("two_valued.deg1")->value == doctest::Approx(2.467401100272).epsilon(1e-11));
    CHECK(r.find("two_valued.deg2")->value == doctest::Approx(kPi2 / 6));
    CHECK(r.find("context.dq^(d+1)/(4(q-1))")->value == doctest::Approx(9.0 / 8.0));
    CHECK(r.find("context.dq^(d+1)/(4(q-1))")->applicable);
    CHECK(tightness(r) == doctest::Approx(6.0 / kPi2));

    const DiscreteFunction dict = gen_named("dictator", DomainSpec(2, 3));
    const BoundReport d = two_valued_report(dict);
    CHECK(d.t_observed == 1);
    CHECK(d.find("context.d2^(d-1)")->applicable);
    CHECK(d.find("context.d2^(d-1)")->value == doctest::Approx(1.0));
    CHECK(tightness(d) == doctest::Approx(4.0 / kPi2));
    CHECK(tightness(d) == doctest::Approx(0.405284734569).epsilon(1e-11));
}

TEST_CASE("three-valued example") {
    const auto phi1 = DiscreteFunction::from_codes(DomainSpec(3, 1), ValueKind::three_valued_omega, {0, 1, 2});
    const BoundReport r = bounds_three_valued(degree_profile(forward(phi1)), 3, 1);
    CHECK(r.find("three_valued.deg1")->value == doctest::Approx(kPi2 / 3));
    CHECK(r.find("three_valued.deg2")->value == doctest::Approx(2 * kPi2 / 9));
    CHECK(r.find("three_valued.dq^(d+1)/(3(q-1))")->value == doctest::Approx(1.5));
    CHECK(r.all_hold());
    CHECK(tightness(r) == doctest::Approx(1.0 / 1.5));
}

TEST_CASE("constant functions have no applicable bound") {
    const auto c = DiscreteFunction::from_codes(DomainSpec(3, 2), ValueKind::two_valued_pm1, std::vector<std::int64_t>(9, 1));
    const BoundReport r = two_valued_report(c);
    for (const auto& e : r.entries) CHECK_FALSE(e.applicable);
    CHECK(r.all_hold());
    CHECK_THROWS_AS(tightness(r), NoApplicableBoundError);
    const BoundReport t = bounds_three_valued(DegreeProfile{}, 3, 0);
    CHECK_THROWS_AS(tightness(t), NoApplicableBoundError);
}

TEST_CASE("violations are reported, not hidden") {
    DegreeProfile p;
    p.deg0 = 1;
    p.deg1 = 1;
    p.deg2 = 1;
    const BoundReport r = bounds_two_valued(p, 2, 5);
    CHECK_FALSE(r.find("two_valued.deg1")->holds);
    CHECK_FALSE(r.all_hold());
    CHECK(r.find("two_valued.deg1")->margin == doctest::Approx(kPi2 / 4 - 5));
}

TEST_CASE("bounds grow with the degrees") {
    for (int q : {2, 3, 4, 5}) {
        for (int d = 1; d <= 4; ++d) {
            DegreeProfile p;
            p.deg0 = d;
            p.deg1 = d;
            p.deg2 = d;
            DegreeProfile bigger = p;
            bigger.deg0 = d + 1;
            bigger.deg1 = d + 1;
            bigger.deg2 = d + 1;
            const BoundReport a = bounds_two_valued(p, q, 0), b = bounds_two_valued(bigger, q, 0);
            const BoundReport c = bounds_three_valued(p, q, 0), e = bounds_three_valued(bigger, q, 0);
            for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].value <= b.entries[i].value);
            for (std::size_t i = 0; i < c.entries.size(); ++i) CHECK(c.entries[i].value <= e.entries[i].value);
            // with deg1 = deg2 = deg0 = d the two forms reduce to (pi^2/4) d q^{d-1} and (pi^2/2) d q^{d-2}
            CHECK(a.find("two_valued.deg1")->value == doctest::Approx(kPi2 / 4 * d * std::pow(q, d - 1)));
            CHECK(a.find("two_valued.deg2")->value == doctest::Approx(kPi2 / 2 * d * std::pow(q, d - 2)));
        }
    }
}

}  // TEST_SUITE bounds
