// Acceptance suite: nine exact, seeded criteria covering oracle agreement,
// the lattice laws, complete-lattice behavior, weak duality on both dual
// layers, the sup-Lagrangian dichotomy, certified strong duality in the
// convex regime, the canonical gap fixture, and the discretized subgradient
// oracle. Prints one pass/fail line per criterion; exits nonzero on any
// failure. Everything runs on exact rational arithmetic: no tolerances.

#include <chrono>
#include <cstdio>
#include <string>

#include <setopt/props.hpp>

using namespace setopt;

namespace {

int failures = 0;

void report(int idx, bool pass, const std::string& what, const std::string& detail = "")
{
    std::printf("[%d/9] %s: %s%s%s\n", idx, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

void law_criterion(int idx, const std::string& what, const LawResult& law)
{
    report(idx, law.violations == 0, what,
           law.violations == 0 ? std::to_string(law.trials) + " trials, 0 violations"
                               : law.witness);
}

Instance gap_instance()
{
    Decision x1{"x1", {make_vec({0, 0})}, {make_vec({1})}};
    Decision x2{"x2", {make_vec({2, 2})}, {make_vec({-1})}};
    return Instance(orthant_cone(2), orthant_cone(1), make_vec({1, 1}), {x1, x2});
}

void criterion_gap_fixture(int idx)
{
    const Instance inst = gap_instance();
    std::string fail;

    const Frontier primal = primal_value(inst);
    if (primal.text() != "INF {(2,2)}") fail = "primal " + primal.text();

    std::vector<RVec> grid_duals;
    for (int k = 0; k <= 4; ++k) grid_duals.push_back(make_vec({Rational(k) / 2}));
    const DualityReport rep = gap_report(inst, grid_duals);
    if (fail.empty() && rep.dual_finite.text() != "INF {(1,1)}")
        fail = "dual " + rep.dual_finite.text();
    if (fail.empty() && rep.relation != GapRelation::StrictlyBelow)
        fail = "relation " + std::string(gap_relation_name(rep.relation));

    const StabilityResult st = stability_check(inst, {make_vec({2, 2})}, grid_duals);
    if (fail.empty() && (st.stable || !st.unstable_at || !vec_eq(*st.unstable_at, make_vec({2, 2}))))
        fail = "stability did not report UnstableAt((2,2))";

    const Certificate cert = certify_strong_duality(convexify(inst));
    if (fail.empty() && cert.verdict != CertificateVerdict::Certified)
        fail = "certificate verdict " + std::string(verdict_name(cert.verdict));
    if (fail.empty() &&
        (!cert.primal_conv.is_proper() || cert.primal_conv.vertices().size() != 1 ||
         !vec_eq(cert.primal_conv.vertices()[0], make_vec({1, 1}))))
        fail = "convexified primal " + cert.primal_conv.text();

    report(idx, fail.empty(),
           "gap fixture: primal {(2,2)}, dual {(1,1)}, strict gap, unstable at (2,2), "
           "relaxation certifies at {(1,1)}",
           fail);
}

}  // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const uint64_t seed = 20260809;

    law_criterion(1, "oracle equivalence on 200 q=2 + 50 q=3 cases, box [-5,5]^q step 1/2",
                  props::law_oracle_agreement(seed + 100, 200, 50));

    {  // Criterion 2: the lattice law suite, 500 seeded trials per law.
        const LawResult laws[] = {
            props::law_lattice_sum(seed + 200, 500),
            props::law_lattice_scale(seed + 201, 500),
            props::law_lattice_idempotent(seed + 202, 500),
            props::law_lattice_family_inf(seed + 203, 500),
            props::law_lattice_family_sum(seed + 204, 500),
            props::law_lattice_strict_order(seed + 205, 500),
        };
        bool pass = true;
        std::string detail = "500 trials per law, 0 violations";
        for (const auto& law : laws) {
            if (law.violations) {
                pass = false;
                detail = law.name + ": " + law.witness;
                break;
            }
        }
        report(2, pass, "lattice laws: sums, scaling, idempotence, families, strict order",
               detail);
    }

    {  // Criterion 3: complete-lattice behavior on 200 random families.
        const LawResult glb = props::law_lattice_glb_lub(seed + 300, 200);
        const LawResult ord = props::law_lattice_order(seed + 301, 200);
        const bool pass = glb.violations == 0 && ord.violations == 0;
        report(3, pass, "complete lattice: glb/lub on 200 families, order axioms",
               pass ? "0 violations" : (glb.violations ? glb.witness : ord.witness));
    }

    law_criterion(4, "weak duality on 200 instances x 20 duals",
                  props::law_duality_weak(seed + 400, 200, 20));

    {  // Criterion 5: operator layer.
        const LawResult dec = props::law_duality_decomposition(seed + 500, 200);
        const LawResult chain = props::law_duality_chain(seed + 501, 200);
        const bool pass = dec.violations == 0 && chain.violations == 0;
        report(5, pass,
               "operator layer: objective decomposition (200) and dual chain with embedded + "
               "random positive operators (200)",
               pass ? "0 violations" : (dec.violations ? dec.witness : chain.witness));
    }

    law_criterion(6, "sup-Lagrangian dichotomy incl. the non-convex caveat fixture",
                  props::law_duality_sup_lagrangian(seed + 600, 200));

    law_criterion(7, "certified strong duality on 50 convexified Slater instances",
                  props::law_convex_certify(seed + 700, 50));

    criterion_gap_fixture(8);

    law_criterion(9, "discretized subgradient oracle on 20 instances",
                  props::law_duality_subgradient(seed + 900, 20));

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);
    std::printf("ACCEPTANCE: %d/9 criteria passed in %.1fs\n", 9 - failures,
                static_cast<double>(elapsed.count()) / 1000.0);
    return failures == 0 ? 0 : 1;
}
