#include <catch2/catch_amalgamated.hpp>

#include <setopt/gen.hpp>
#include <setopt/lp.hpp>

#include <setopt/props.hpp>

using namespace setopt;

TEST_CASE("one-variable programs")
{
    RMat a(1, 1);
    a << Rational(1);
    SECTION("max x s.t. x <= 3")
    {
        const LpOutcome out = lp_solve(a, make_vec({3}), make_vec({1}), LpSense::Maximize);
        REQUIRE(out.status == LpStatus::Optimal);
        CHECK(out.value == 3);
        CHECK(out.point(0) == 3);
    }
    SECTION("contradictory bounds are infeasible")
    {
        RMat a2(2, 1);
        a2 << Rational(1), Rational(-1);
        const LpOutcome out = lp_solve(a2, make_vec({-1, -1}), make_vec({1}), LpSense::Maximize);
        CHECK(out.status == LpStatus::Infeasible);
    }
    SECTION("free ascent is unbounded")
    {
        RMat a2(2, 2);
        a2 << Rational(-1), Rational(0), Rational(0), Rational(-1);
        const LpOutcome out = lp_solve(a2, make_vec({0, 0}), make_vec({1, 1}), LpSense::Maximize);
        CHECK(out.status == LpStatus::Unbounded);
    }
}

TEST_CASE("minimize flips the sense, not the point semantics")
{
    RMat a(2, 1);
    a << Rational(1), Rational(-1);
    const LpOutcome out = lp_solve(a, make_vec({5, 2}), make_vec({1}), LpSense::Minimize);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == -2);
    CHECK(out.point(0) == -2);
}

TEST_CASE("dimension mismatches are rejected")
{
    RMat a(1, 2);
    a << Rational(1), Rational(1);
    CHECK_THROWS_AS(lp_solve(a, make_vec({1, 2}), make_vec({1, 0}), LpSense::Maximize), InputError);
    CHECK_THROWS_AS(lp_solve(a, make_vec({1}), make_vec({1}), LpSense::Maximize), InputError);
}

TEST_CASE("fractional data stays exact")
{
    // max x1 + x2 s.t. 2x1 + x2 <= 2, x1 + 3x2 <= 3, x >= 0.
    RMat a(4, 2);
    a << Rational(2), Rational(1), Rational(1), Rational(3), Rational(-1), Rational(0),
        Rational(0), Rational(-1);
    const LpOutcome out = lp_solve(a, make_vec({2, 3, 0, 0}), make_vec({1, 1}), LpSense::Maximize);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == Rational(7) / 5);
    CHECK(vec_eq(out.point, make_vec({Rational(3) / 5, Rational(4) / 5})));
}

TEST_CASE("simplex agrees with exhaustive vertex enumeration")
{
    Rng rng(2024);
    int optimal_seen = 0, unbounded_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Eigen::Index n = rng.int_in(1, 4);
        const Eigen::Index extra = rng.int_in(1, 4);
        // Lower bounds keep the feasible set pointed so the oracle is complete.
        RMat a(n + extra, n);
        RVec b(n + extra);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) a(i, j) = i == j ? Rational(-1) : Rational(0);
            b(i) = Rational(10);
        }
        for (Eigen::Index i = 0; i < extra; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) a(n + i, j) = Rational(rng.int_in(-3, 3));
            b(n + i) = Rational(rng.int_in(-4, 6));
        }
        RVec obj(n);
        for (Eigen::Index j = 0; j < n; ++j) obj(j) = Rational(rng.int_in(-3, 3));

        const LpOutcome got = lp_solve(a, b, obj, LpSense::Maximize);
        const LpOutcome want = props::detail::enumerate_lp(a, b, obj);
        REQUIRE(got.status == want.status);
        switch (got.status) {
            case LpStatus::Optimal:
                ++optimal_seen;
                CHECK(got.value == want.value);
                CHECK(props::detail::satisfies(a, b, got.point));
                CHECK(obj.dot(got.point) == got.value);
                break;
            case LpStatus::Unbounded: ++unbounded_seen; break;
            case LpStatus::Infeasible: ++infeasible_seen; break;
        }
    }
    // The distribution should exercise all three outcomes.
    CHECK(optimal_seen > 20);
    CHECK(unbounded_seen > 0);
    CHECK(infeasible_seen > 0);
}
