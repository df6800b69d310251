#include <catch2/catch_amalgamated.hpp>

#include <setopt/cone.hpp>
#include <setopt/gen.hpp>

using namespace setopt;

TEST_CASE("cone construction validates the generator matrix")
{
    RMat sing(2, 2);
    sing << Rational(1), Rational(2), Rational(2), Rational(4);
    CHECK_THROWS_AS(SimplicialCone(sing), InputError);
    CHECK_THROWS_AS(SimplicialCone(RMat(2, 3)), InputError);
}

TEST_CASE("cone classification in the positive orthant")
{
    const ConePtr c = orthant_cone(2);
    CHECK(cone_classify(c, make_vec({1, 2})) == ConeClass::Interior);
    CHECK(cone_classify(c, make_vec({0, 3})) == ConeClass::Boundary);
    CHECK(cone_classify(c, make_vec({-1, 1})) == ConeClass::Outside);
    CHECK_THROWS_AS(cone_classify(c, make_vec({1})), InputError);
}

TEST_CASE("cone classification in a skewed cone")
{
    RMat m(2, 2);
    m << Rational(1), Rational(1), Rational(0), Rational(1);  // generators (1,0),(1,1)
    const ConePtr c = make_cone(m);
    // Solving M z = (0,1) gives z = (-1,1).
    CHECK(cone_classify(c, make_vec({0, 1})) == ConeClass::Outside);
    CHECK(cone_classify(c, make_vec({2, 1})) == ConeClass::Interior);
    CHECK(cone_classify(c, make_vec({1, 1})) == ConeClass::Boundary);
}

TEST_CASE("negative polar membership")
{
    const ConePtr ray = orthant_cone(1);
    CHECK(in_neg_polar(ray, make_vec({1})));
    CHECK(in_neg_polar(ray, make_vec({0})));
    CHECK_FALSE(in_neg_polar(ray, make_vec({-1})));

    const ConePtr d2 = orthant_cone(2);
    CHECK_FALSE(in_neg_polar(d2, make_vec({1, -1})));
    CHECK(in_neg_polar(d2, make_vec({1, 1})));
    CHECK_THROWS_AS(in_neg_polar(d2, make_vec({1})), InputError);
}

TEST_CASE("coordinate transform is exact on random cones")
{
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const ConePtr c = random_cone(rng, 2 + rng.int_in(0, 1));
        RVec z(c->dim());
        bool interior = true, outside = false;
        for (Eigen::Index i = 0; i < c->dim(); ++i) {
            z(i) = rng.rational_in(-3, 3);
            if (z(i) <= 0) interior = false;
            if (z(i) < 0) outside = true;
        }
        const RVec y = c->generators() * z;
        const ConeClass cls = cone_classify(c, y);
        if (interior) CHECK(cls == ConeClass::Interior);
        if (outside) CHECK(cls == ConeClass::Outside);
        CHECK(vec_eq(c->cone_coords(y), z));
    }
}

TEST_CASE("interior absorbs cone addition")
{
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const ConePtr c = random_cone(rng, 2);
        RVec zi(2), zb(2);
        for (Eigen::Index i = 0; i < 2; ++i) {
            zi(i) = rng.rational_in(0, 3) + Rational(1, 4);  // strictly positive
            zb(i) = rng.rational_in(0, 3);                   // nonnegative
        }
        const RVec inside = c->generators() * zi;
        const RVec member = c->generators() * zb;
        CHECK(cone_classify(c, RVec(inside + member)) == ConeClass::Interior);
    }
}

TEST_CASE("the negative polar is a convex cone")
{
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const ConePtr d = random_cone(rng, 1 + rng.int_in(0, 2));
        const RVec u = random_neg_polar(rng, *d);
        const RVec v = random_neg_polar(rng, *d);
        CHECK(in_neg_polar(d, u));
        CHECK(in_neg_polar(d, v));
        CHECK(in_neg_polar(d, RVec(u + v)));
    }
}
