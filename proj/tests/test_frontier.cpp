#include <catch2/catch_amalgamated.hpp>

#include <setopt/frontier.hpp>
#include <setopt/gen.hpp>

using namespace setopt;

namespace {

const ConePtr C2 = orthant_cone(2);

Frontier inf_of(std::initializer_list<RVec> pts)
{
    return infer_from_points(std::vector<RVec>(pts), C2);
}

std::vector<RVec> gens_sorted(std::initializer_list<RVec> pts)
{
    return sorted_unique(std::vector<RVec>(pts));
}

}  // namespace

TEST_CASE("infimal set of a finite point set")
{
    SECTION("minus infinity wins")
    {
        const Frontier f = infer_from_points({ExtPoint::minus_infinity()}, C2);
        CHECK(f.is_bottom());
    }
    SECTION("empty and {+inf} give top")
    {
        CHECK(infer_from_points(std::vector<ExtPoint>{}, C2).is_top());
        CHECK(infer_from_points({ExtPoint::plus_infinity()}, C2).is_top());
        CHECK(infer_from_points(std::vector<RVec>{}, C2).is_top());
    }
    SECTION("dominated points are pruned")
    {
        const Frontier f = inf_of({make_vec({0, 1}), make_vec({1, 0}), make_vec({2, 2})});
        REQUIRE(f.is_proper());
        CHECK(f.generators() == gens_sorted({make_vec({0, 1}), make_vec({1, 0})}));
    }
    SECTION("plus infinity points contribute nothing")
    {
        const Frontier f = infer_from_points(
            {ExtPoint::finite(make_vec({1, 1})), ExtPoint::plus_infinity()}, C2);
        REQUIRE(f.is_proper());
        CHECK(f.generators() == gens_sorted({make_vec({1, 1})}));
    }
    SECTION("duplicates collapse")
    {
        const Frontier f = inf_of({make_vec({0, 1}), make_vec({0, 1})});
        CHECK(f.generators().size() == 1);
    }
    SECTION("dimension mismatch")
    {
        CHECK_THROWS_AS(infer_from_points({make_vec({1})}, C2), InputError);
    }
}

TEST_CASE("supremal set of a finite point set")
{
    SECTION("plus infinity wins, with the full lower closure")
    {
        const Frontier f = sup_from_points({ExtPoint::plus_infinity()}, C2);
        CHECK(f.is_top());
        CHECK(f.orientation() == Orientation::Sup);
    }
    SECTION("mirror pruning keeps the dominating point")
    {
        const Frontier f =
            sup_from_points({make_vec({0, 1}), make_vec({1, 0}), make_vec({2, 2})}, C2);
        REQUIRE(f.is_proper());
        CHECK(f.generators() == gens_sorted({make_vec({2, 2})}));
    }
    SECTION("incomparable points both stay")
    {
        const Frontier f = sup_from_points({make_vec({0, 1}), make_vec({1, 0})}, C2);
        CHECK(f.generators() == gens_sorted({make_vec({0, 1}), make_vec({1, 0})}));
    }
}

TEST_CASE("mirror duality between inf and sup")
{
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const ConePtr cone = random_cone(rng, 2 + rng.int_in(0, 1));
        std::vector<RVec> pts, neg;
        const long long n = rng.int_in(1, 6);
        for (long long i = 0; i < n; ++i) {
            pts.push_back(random_point(rng, cone->dim()));
            neg.push_back(-pts.back());
        }
        const Frontier sup = sup_from_points(pts, cone);
        const Frontier inf = infer_from_points(neg, cone);
        REQUIRE(sup.is_proper());
        REQUIRE(inf.is_proper());
        std::vector<RVec> mirrored;
        for (const auto& g : inf.generators()) mirrored.push_back(-g);
        CHECK(sup.generators() == sorted_unique(mirrored));
    }
}

TEST_CASE("point classification against a proper frontier")
{
    const Frontier s = inf_of({make_vec({0, 1}), make_vec({1, 0})});
    CHECK(classify_point(s, make_vec({Rational(1) / 2, 1})) == PointClass::OnFrontier);
    CHECK(classify_point(s, make_vec({2, 2})) == PointClass::Above);
    CHECK(classify_point(s, make_vec({-1, -1})) == PointClass::Below);
    CHECK(classify_point(s, make_vec({0, 1})) == PointClass::OnFrontier);
    CHECK(classify_point(s, make_vec({1, 1})) == PointClass::OnFrontier);  // staircase corner
    CHECK_THROWS_AS(classify_point(s, make_vec({1})), InputError);
    CHECK_THROWS_AS(classify_point(Frontier::top(C2), make_vec({0, 0})), InputError);
}

TEST_CASE("lattice order")
{
    const Frontier zero = inf_of({make_vec({0, 0})});
    const Frontier one = inf_of({make_vec({1, 1})});
    const Frontier pair = inf_of({make_vec({0, 1}), make_vec({1, 0})});

    CHECK(leq(zero, one));
    CHECK_FALSE(leq(one, zero));
    CHECK(leq(zero, zero));
    CHECK(leq(pair, pair));

    SECTION("incomparable elements")
    {
        const Frontier a = inf_of({make_vec({0, 1})});
        const Frontier b = inf_of({make_vec({1, 0})});
        CHECK_FALSE(leq(a, b));
        CHECK_FALSE(leq(b, a));
    }
    SECTION("bottom and top bound everything")
    {
        CHECK(leq(Frontier::bottom(C2), pair));
        CHECK(leq(pair, Frontier::top(C2)));
        CHECK_FALSE(leq(Frontier::top(C2), pair));
        CHECK_FALSE(leq(pair, Frontier::bottom(C2)));
        CHECK(leq(Frontier::bottom(C2), Frontier::bottom(C2)));
        CHECK(leq(Frontier::top(C2), Frontier::top(C2)));
    }
    SECTION("orientation and cone mismatches are rejected")
    {
        CHECK_THROWS_AS(leq(pair, sup_from_points({make_vec({0, 0})}, C2)), InputError);
        RMat skew(2, 2);
        skew << Rational(1), Rational(1), Rational(0), Rational(1);
        const Frontier other = infer_from_points({make_vec({0, 0})}, make_cone(skew));
        CHECK_THROWS_AS(leq(pair, other), InputError);
    }
}

TEST_CASE("sup-oriented order mirrors the inf-oriented one")
{
    const Frontier a = sup_from_points({make_vec({0, 0})}, C2);
    const Frontier b = sup_from_points({make_vec({1, 1})}, C2);
    CHECK(leq(a, b));
    CHECK_FALSE(leq(b, a));
}

TEST_CASE("inf-addition")
{
    const Frontier pair = inf_of({make_vec({0, 1}), make_vec({1, 0})});
    SECTION("neutral element")
    {
        CHECK(add(pair, inf_of({make_vec({0, 0})})) == pair);
    }
    SECTION("pairwise sums")
    {
        const Frontier sum = add(pair, pair);
        CHECK(sum.generators() ==
              gens_sorted({make_vec({0, 2}), make_vec({1, 1}), make_vec({2, 0})}));
    }
    SECTION("top absorbs, bottom propagates")
    {
        CHECK(add(pair, Frontier::top(C2)).is_top());
        CHECK(add(pair, Frontier::bottom(C2)).is_bottom());
        CHECK(add(Frontier::top(C2), Frontier::bottom(C2)).is_top());
    }
}

TEST_CASE("positive scaling")
{
    const Frontier pair = inf_of({make_vec({0, 1}), make_vec({1, 0})});
    CHECK(scale(pair, 2).generators() == gens_sorted({make_vec({0, 2}), make_vec({2, 0})}));
    CHECK(scale(pair, 1) == pair);
    CHECK(scale(Frontier::top(C2), 5).is_top());
    CHECK_THROWS_AS(scale(pair, 0), InputError);
    CHECK_THROWS_AS(scale(pair, -1), InputError);
}

TEST_CASE("family infimum")
{
    const Frontier a = inf_of({make_vec({0, 1})});
    const Frontier b = inf_of({make_vec({1, 0})});
    CHECK(inf_family({a, b}).generators() == gens_sorted({make_vec({0, 1}), make_vec({1, 0})}));
    CHECK(inf_family({a, Frontier::top(C2)}) == a);
    CHECK(inf_family({a, Frontier::bottom(C2)}).is_bottom());
    CHECK_THROWS_AS(inf_family({}), InputError);
}

TEST_CASE("family supremum via upper-closure intersection")
{
    const Frontier a = inf_of({make_vec({0, 1})});
    const Frontier b = inf_of({make_vec({1, 0})});
    const Frontier pair = inf_of({make_vec({0, 1}), make_vec({1, 0})});

    CHECK(sup_family({a, b}).generators() == gens_sorted({make_vec({1, 1})}));
    CHECK(sup_family({inf_of({make_vec({0, 0})}), pair}) == pair);
    CHECK(sup_family({pair, Frontier::bottom(C2)}) == pair);
    CHECK(sup_family({pair, Frontier::top(C2)}).is_top());
    CHECK_THROWS_AS(sup_family({}), InputError);
}

TEST_CASE("weakly minimal points")
{
    CHECK(wmin_points({make_vec({0, 1}), make_vec({1, 0}), make_vec({2, 2})}, C2) ==
          gens_sorted({make_vec({0, 1}), make_vec({1, 0})}));
    CHECK(wmin_points({make_vec({0, 0})}, C2) == gens_sorted({make_vec({0, 0})}));
    // (1,1)-(0,1) lies on the cone boundary, not in its interior: both stay.
    CHECK(wmin_points({make_vec({0, 1}), make_vec({1, 1})}, C2) ==
          gens_sorted({make_vec({0, 1}), make_vec({1, 1})}));
}

TEST_CASE("canonical text form")
{
    CHECK(inf_of({make_vec({1, 0}), make_vec({0, 1})}).text() == "INF {(0,1),(1,0)}");
    CHECK(sup_from_points({make_vec({2, 2})}, C2).text() == "SUP {(2,2)}");
    CHECK(Frontier::top(C2).text() == "TOP");
    CHECK(Frontier::bottom(C2).text() == "BOTTOM");
    CHECK(inf_of({make_vec({Rational(1) / 2, -3})}).text() == "INF {(1/2,-3)}");
}

TEST_CASE("idempotence and canonicity on random data")
{
    Rng rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const ConePtr cone = random_cone(rng, 2 + rng.int_in(0, 1));
        std::vector<RVec> pts;
        const long long n = rng.int_in(1, 6);
        for (long long i = 0; i < n; ++i) pts.push_back(random_point(rng, cone->dim()));
        const Frontier s = infer_from_points(pts, cone);
        REQUIRE(s.is_proper());
        // Antichain: no generator dominates another.
        for (const auto& zi : s.generator_coords())
            for (const auto& zj : s.generator_coords())
                if (&zi != &zj) CHECK_FALSE(detail::coords_geq(zi, zj));
        // Inf Inf = Inf.
        CHECK(infer_from_points(s.generators(), cone) == s);
        // Equality coincides with two-sided order.
        const Frontier again = infer_from_points(pts, cone);
        CHECK((leq(s, again) && leq(again, s)));
        CHECK(s == again);
    }
}
