#include <catch2/catch_amalgamated.hpp>

#include <setopt/convex.hpp>
#include <setopt/gen.hpp>

#include "support/fixtures.hpp"

using namespace setopt;
using namespace setopt::testing;

namespace {

const ConePtr C2 = orthant_cone(2);

ConvexFrontier conv_of(std::initializer_list<RVec> pts)
{
    return ConvexFrontier::from_points(std::vector<RVec>(pts), C2);
}

}  // namespace

TEST_CASE("convex frontier canonical vertices")
{
    SECTION("dominated and colinear points vanish")
    {
        const ConvexFrontier f = conv_of({make_vec({0, 2}), make_vec({1, 1}), make_vec({2, 0}),
                                          make_vec({3, 3})});
        REQUIRE(f.is_proper());
        REQUIRE(f.vertices().size() == 2);
        CHECK(vec_eq(f.vertices()[0], make_vec({0, 2})));
        CHECK(vec_eq(f.vertices()[1], make_vec({2, 0})));
    }
    SECTION("empty input is top")
    {
        CHECK(ConvexFrontier::from_points({}, C2).is_top());
    }
    SECTION("strictly convex chain survives whole")
    {
        const ConvexFrontier f =
            conv_of({make_vec({0, 3}), make_vec({1, 1}), make_vec({3, 0})});
        CHECK(f.vertices().size() == 3);
    }
    CHECK_THROWS_AS(ConvexFrontier::from_points({make_vec({0, 0, 0})}, orthant_cone(3)),
                    InputError);
}

TEST_CASE("convex classification and order")
{
    const ConvexFrontier seg = conv_of({make_vec({0, 1}), make_vec({1, 0})});
    CHECK(classify_point(seg, make_vec({Rational(1) / 2, Rational(1) / 2})) ==
          PointClass::OnFrontier);
    CHECK(classify_point(seg, make_vec({1, 1})) == PointClass::Above);
    CHECK(classify_point(seg, make_vec({0, 2})) == PointClass::OnFrontier);  // left ray
    CHECK(classify_point(seg, make_vec({2, 0})) == PointClass::OnFrontier);  // bottom ray
    CHECK(classify_point(seg, make_vec({0, 0})) == PointClass::Below);
    CHECK(classify_point(seg, make_vec({-1, 5})) == PointClass::Below);

    const ConvexFrontier inner = conv_of({make_vec({Rational(1) / 2, Rational(1) / 2})});
    CHECK(leq(seg, inner));
    CHECK_FALSE(leq(inner, seg));
    CHECK(sup_family_conv({seg, inner}, make_vec({1, 1})) == inner);

    SECTION("cross-mode order against antichain frontiers")
    {
        const Frontier stair = infer_from_points({make_vec({0, 1}), make_vec({1, 0})}, C2);
        CHECK(leq(seg, stair));          // hull + C contains the staircase closure
        CHECK(leq(seg, Frontier::top(C2)));
        CHECK_FALSE(leq(seg, Frontier::bottom(C2)));
    }
}

TEST_CASE("facets of a convex frontier")
{
    const RVec c = make_vec({1, 1});
    SECTION("segment: one slant facet plus the two extents")
    {
        const auto fs = facets(conv_of({make_vec({0, 1}), make_vec({1, 0})}), c);
        REQUIRE(fs.size() == 3);
        CHECK(vec_eq(fs[0].normal, make_vec({Rational(1) / 2, Rational(1) / 2})));
        CHECK(fs[0].support == Rational(1) / 2);
        CHECK(fs[0].touching.size() == 2);
        CHECK(vec_eq(fs[1].normal, make_vec({1, 0})));
        CHECK(fs[1].support == 0);
        CHECK(vec_eq(fs[2].normal, make_vec({0, 1})));
        CHECK(fs[2].support == 0);
    }
    SECTION("single vertex: only the extents")
    {
        const auto fs = facets(conv_of({make_vec({1, 1})}), c);
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].support == 1);
        CHECK(fs[1].support == 1);
    }
}

TEST_CASE("convexification of an instance")
{
    const auto cv = convexify(gap_instance());
    REQUIRE(cv.vertices.size() == 2);
    CHECK(vec_eq(cv.vertices[0].first, make_vec({0, 0})));
    CHECK(vec_eq(cv.vertices[0].second, make_vec({1})));
    CHECK(vec_eq(cv.vertices[1].first, make_vec({2, 2})));
    CHECK(vec_eq(cv.vertices[1].second, make_vec({-1})));

    SECTION("decisions outside dom F are skipped")
    {
        Instance inst(orthant_cone(2), orthant_cone(1), make_vec({1, 1}),
                      {Decision{"a", {}, {make_vec({0})}},
                       Decision{"b", {make_vec({1, 1})}, {make_vec({0})}}});
        CHECK(convexify(inst).vertices.size() == 1);
    }
    SECTION("empty intersection of domains fails")
    {
        Instance inst(orthant_cone(2), orthant_cone(1), make_vec({1, 1}),
                      {Decision{"a", {}, {make_vec({0})}}});
        CHECK_THROWS_AS(convexify(inst), InputError);
    }
}

TEST_CASE("exact planar value of the relaxation")
{
    SECTION("the gap instance relaxes to (1,1)")
    {
        const ConvexFrontier p = primal_value_conv(convexify(gap_instance()));
        REQUIRE(p.is_proper());
        REQUIRE(p.vertices().size() == 1);
        CHECK(vec_eq(p.vertices()[0], make_vec({1, 1})));
    }
    SECTION("single feasible vertex")
    {
        Instance inst(orthant_cone(2), orthant_cone(1), make_vec({1, 1}),
                      {Decision{"a", {make_vec({0, 0})}, {make_vec({-1})}}});
        const ConvexFrontier p = primal_value_conv(convexify(inst));
        REQUIRE(p.vertices().size() == 1);
        CHECK(vec_eq(p.vertices()[0], make_vec({0, 0})));
    }
    SECTION("a fully feasible pair keeps its connecting segment")
    {
        Instance inst(orthant_cone(2), orthant_cone(1), make_vec({1, 1}),
                      {Decision{"a", {make_vec({0, 1})}, {make_vec({-1})}},
                       Decision{"b", {make_vec({1, 0})}, {make_vec({-2})}}});
        const ConvexFrontier p = primal_value_conv(convexify(inst));
        REQUIRE(p.vertices().size() == 2);
        CHECK(vec_eq(p.vertices()[0], make_vec({0, 1})));
        CHECK(vec_eq(p.vertices()[1], make_vec({1, 0})));
    }
    SECTION("the caveat instance becomes feasible under relaxation")
    {
        const ConvexFrontier p = primal_value_conv(convexify(caveat_instance()));
        REQUIRE(p.is_proper());
        CHECK(vec_eq(p.vertices()[0], make_vec({0, 0})));
    }
    SECTION("infeasible relaxation is top")
    {
        Instance inst(orthant_cone(2), orthant_cone(1), make_vec({1, 1}),
                      {Decision{"a", {make_vec({0, 0})}, {make_vec({1})}}});
        CHECK(primal_value_conv(convexify(inst)).is_top());
    }
    SECTION("q = 2 only")
    {
        Rng rng(3);
        InstanceOptions opt;
        opt.q = 3;
        opt.allow_empty = false;
        const Instance inst = random_instance(rng, opt);
        CHECK_THROWS_AS(primal_value_conv(convexify(inst)), InputError);
    }
}

TEST_CASE("scalarization normals are validated")
{
    const Instance inst = gap_instance();
    CHECK_NOTHROW(ScalarizationNormal(make_vec({Rational(-1) / 2, Rational(-1) / 2}), inst));
    CHECK_NOTHROW(ScalarizationNormal(make_vec({-1, 0}), inst));
    CHECK_THROWS_AS(ScalarizationNormal(make_vec({-1, -1}), inst), InputError);  // <y*,c> = -2
    CHECK_THROWS_AS(ScalarizationNormal(make_vec({Rational(1) / 2, Rational(-3) / 2}), inst),
                    InputError);  // outside C°
    CHECK_THROWS_AS(ScalarizationNormal(make_vec({0, 0}), inst), InputError);
}

TEST_CASE("dual synthesis from a separating normal")
{
    const auto cv = convexify(gap_instance());
    const ScalarizationNormal sn(make_vec({Rational(-1) / 2, Rational(-1) / 2}), cv.base);
    const SynthesizedDual syn = synthesize_dual(cv, sn);
    CHECK(vec_eq(syn.u_star, make_vec({1})));
    CHECK(syn.lp_value == 1);
    CHECK(in_neg_polar(cv.base.constraint_cone(), syn.u_star));

    SECTION("single feasible vertex admits u* = 0")
    {
        Instance inst(orthant_cone(2), orthant_cone(1), make_vec({1, 1}),
                      {Decision{"a", {make_vec({0, 0})}, {make_vec({-1})}}});
        const auto cv1 = convexify(inst);
        const SynthesizedDual s =
            synthesize_dual(cv1, ScalarizationNormal(make_vec({Rational(-1) / 2, Rational(-1) / 2}), inst));
        CHECK(vec_eq(s.u_star, make_vec({0})));
        CHECK(s.lp_value == 0);
    }
}

TEST_CASE("strong duality certificates")
{
    SECTION("the relaxed gap instance certifies with dual 1")
    {
        const Certificate cert = certify_strong_duality(convexify(gap_instance()));
        CHECK(cert.verdict == CertificateVerdict::Certified);
        REQUIRE(cert.duals.size() == 1);
        CHECK(vec_eq(cert.duals[0], make_vec({1})));
        REQUIRE(cert.primal_conv.is_proper());
        CHECK(vec_eq(cert.primal_conv.vertices()[0], make_vec({1, 1})));
        CHECK(cert.dual_set_value == cert.primal_conv);
        CHECK(cert.operator_chain);
    }
    SECTION("single feasible decision certifies with dual 0")
    {
        const Certificate cert = certify_strong_duality(convexify(single_feasible_instance()));
        CHECK(cert.verdict == CertificateVerdict::Certified);
        REQUIRE(cert.duals.size() == 1);
        CHECK(vec_eq(cert.duals[0], make_vec({0})));
    }
    SECTION("slater failure is reported, not certified")
    {
        const Certificate cert = certify_strong_duality(convexify(caveat_instance()));
        CHECK(cert.verdict == CertificateVerdict::Failed);
        CHECK(cert.reason == "slater");
    }
}

TEST_CASE("certificate JSON is stable")
{
    const Certificate cert = certify_strong_duality(convexify(gap_instance()));
    const auto j = certificate_to_json(cert);
    CHECK(j.begin().key() == "verdict");
    CHECK(j["verdict"] == "Certified");
    CHECK(j["duals"][0][0] == "1");
    CHECK(j["primal_conv"]["vertices"][0][0] == "1");
    CHECK(certificate_to_json(certify_strong_duality(convexify(gap_instance()))).dump() ==
          j.dump());
}

TEST_CASE("relaxation bound and certificate soundness on random instances")
{
    Rng rng(411);
    int certified = 0;
    for (int trial = 0; trial < 40; ++trial) {
        InstanceOptions opt;
        opt.allow_empty = false;
        opt.ensure_slater = true;
        opt.decisions = static_cast<int>(rng.int_in(1, 4));
        opt.max_points = 3;
        const Instance inst = random_instance(rng, opt);
        const auto cv = convexify(inst);

        const ConvexFrontier relaxed = primal_value_conv(cv);
        CHECK(leq(relaxed, primal_value(inst)));  // relaxing can only lower the value

        const Certificate cert = certify_strong_duality(cv);
        REQUIRE(cert.verdict == CertificateVerdict::Certified);
        ++certified;
        for (const auto& u : cert.duals) CHECK(in_neg_polar(inst.constraint_cone(), u));
        CHECK(dual_value_conv(cv, cert.duals) == cert.primal_conv);

        // Lemma-style witness: every touched vertex sits on the frontier of
        // the facet's dual objective.
        const auto fs = facets(cert.primal_conv, inst.scalarization());
        for (size_t k = 0; k < fs.size(); ++k) {
            const ScalarizationNormal sn(RVec(-fs[k].normal), inst);
            const SynthesizedDual syn = synthesize_dual(cv, sn);
            const ConvexFrontier phi = conv_dual_objective(cv, syn.u_star);
            for (const auto& v : fs[k].touching)
                CHECK(classify_point(phi, v) == PointClass::OnFrontier);
        }
    }
    CHECK(certified == 40);
}

TEST_CASE("heuristic certification stays scalar-consistent")
{
    Rng rng(517);
    InstanceOptions opt;
    opt.q = 3;
    opt.m = 2;
    opt.allow_empty = false;
    opt.ensure_slater = true;
    const Instance inst = random_instance(rng, opt);
    const Certificate cert = certify_heuristic(convexify(inst), 8, 99);
    CHECK(cert.verdict == CertificateVerdict::NotRefuted);
    CHECK(cert.lp_values.size() == 8);
}
