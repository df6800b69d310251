// Walkthrough of the library on the classic two-decision gap instance:
// primal value, dual objectives over a small grid, the duality report, and
// the certificate for the convexified relaxation.

#include <iostream>

#include <setopt/convex.hpp>

using namespace setopt;

int main()
{
    Decision x1{"x1", {make_vec({0, 0})}, {make_vec({1})}};
    Decision x2{"x2", {make_vec({2, 2})}, {make_vec({-1})}};
    const Instance inst(orthant_cone(2), orthant_cone(1), make_vec({1, 1}), {x1, x2});

    std::cout << "primal: " << primal_value(inst).text() << "\n";
    std::cout << "feasible:";
    for (const auto& name : feasible_set(inst)) std::cout << " " << name;
    std::cout << "\n\n";

    std::vector<RVec> duals;
    for (int k = 0; k <= 4; ++k) {
        const RVec u = make_vec({Rational(k) / 2});
        duals.push_back(u);
        std::cout << "phi(" << to_string(u(0)) << ") = " << dual_objective(inst, u).text() << "\n";
    }

    const DualityReport rep = gap_report(inst, duals);
    std::cout << "\ndual over the grid:   " << rep.dual_finite.text() << "\n";
    std::cout << "operator dual:        " << rep.operator_dual.text() << "\n";
    std::cout << "relation:             " << gap_relation_name(rep.relation) << "\n\n";

    const StabilityResult st = stability_check(inst, default_probes(inst), duals);
    std::cout << "stable on probes:     " << (st.stable ? "yes" : "no") << "\n";
    if (st.unstable_at) std::cout << "no subgradient at:    " << format_point(*st.unstable_at) << "\n";

    const Certificate cert = certify_strong_duality(convexify(inst));
    std::cout << "\nconvexified instance: " << cert.primal_conv.text() << "\n";
    std::cout << "certificate verdict:  " << verdict_name(cert.verdict) << "\n";
    std::cout << "certificate duals:   ";
    for (const auto& u : cert.duals) std::cout << " " << format_point(u);
    std::cout << "\n";
    return 0;
}
