#pragma once

// Lagrange duality for finite set-valued instances, with vectors and with
// positive operators as dual variables: Lagrangians, dual objectives, finite
// dual values (certified lower bounds through weak duality), positive
// subgradients, probe-based stability, and gap reports.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setopt/instance.hpp"
#include "setopt/lp.hpp"

namespace setopt {

// A linear map T with T(D) contained in C.
struct PositiveOperator {
    RMat matrix;  // q x m

    PositiveOperator(RMat t, const Instance& inst) : matrix(std::move(t))
    {
        if (matrix.rows() != inst.q() || matrix.cols() != inst.m())
            throw InputError("positive operator: wrong shape");
        for (Eigen::Index j = 0; j < inst.m(); ++j) {
            const RVec image = matrix * inst.constraint_cone()->generator(j);
            if (cone_classify(inst.ordering_cone(), image) == ConeClass::Outside)
                throw InputError("positive operator: T(D) is not contained in C");
        }
    }
};

enum class GapRelation { Equal, StrictlyBelow, Incomparable };

inline std::string_view gap_relation_name(GapRelation r)
{
    switch (r) {
        case GapRelation::Equal: return "Equal";
        case GapRelation::StrictlyBelow: return "StrictlyBelow";
        case GapRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

struct DualityReport {
    Frontier primal;
    Frontier dual_finite;     // sup of the dual objective over the given duals
    Frontier operator_dual;   // sup of the operator dual objective
    std::vector<RVec> duals_used;
    GapRelation relation = GapRelation::Incomparable;
};

// L(x,u*) = F(x) + Inf over u in G(x)+D of <u*,u> c. The inner infimum is 0
// shifted by min <u*,g> when u* lies in -D°, and -infinity otherwise.
inline Frontier lagrangian(const Instance& inst, std::string_view decision, const RVec& u_star)
{
    if (u_star.size() != inst.m()) throw InputError("lagrangian: dual dimension mismatch");
    const Decision& d = inst.decision(decision);
    const ConePtr& cone = inst.ordering_cone();

    if (d.constraint_points.empty()) return Frontier::top(cone);
    if (!in_neg_polar(inst.constraint_cone(), u_star))
        return d.objective_points.empty() ? Frontier::top(cone) : Frontier::bottom(cone);

    if (d.objective_points.empty()) return Frontier::top(cone);
    Rational t = u_star.dot(d.constraint_points.front());
    for (const auto& g : d.constraint_points) t = std::min(t, Rational(u_star.dot(g)));

    std::vector<RVec> shifted;
    shifted.reserve(d.objective_points.size());
    for (const auto& f : d.objective_points) shifted.push_back(f + t * inst.scalarization());
    return infer_from_points(shifted, cone);
}

// The variant without the cone term: the inner infimum runs over G(x) alone,
// so it stays finite for every u*.
inline Frontier lagrangian_raw(const Instance& inst, std::string_view decision, const RVec& u_star)
{
    if (u_star.size() != inst.m()) throw InputError("lagrangian_raw: dual dimension mismatch");
    const Decision& d = inst.decision(decision);
    const ConePtr& cone = inst.ordering_cone();

    if (d.constraint_points.empty() || d.objective_points.empty()) return Frontier::top(cone);
    Rational t = u_star.dot(d.constraint_points.front());
    for (const auto& g : d.constraint_points) t = std::min(t, Rational(u_star.dot(g)));

    std::vector<RVec> shifted;
    shifted.reserve(d.objective_points.size());
    for (const auto& f : d.objective_points) shifted.push_back(f + t * inst.scalarization());
    return infer_from_points(shifted, cone);
}

inline Frontier dual_objective(const Instance& inst, const RVec& u_star)
{
    std::vector<Frontier> parts;
    parts.reserve(inst.decisions().size());
    for (const auto& d : inst.decisions()) parts.push_back(lagrangian(inst, d.name, u_star));
    return inf_family(parts);
}

inline Frontier dual_objective_raw(const Instance& inst, const RVec& u_star)
{
    std::vector<Frontier> parts;
    parts.reserve(inst.decisions().size());
    for (const auto& d : inst.decisions()) parts.push_back(lagrangian_raw(inst, d.name, u_star));
    return inf_family(parts);
}

// Sup of the dual objective over a finite dual set: a certified lower bound
// for the full dual value, hence (weak duality) for the primal value.
inline Frontier dual_value(const Instance& inst, const std::vector<RVec>& duals)
{
    if (duals.empty()) throw InputError("dual_value: empty dual set");
    std::vector<Frontier> parts;
    parts.reserve(duals.size());
    for (const auto& u : duals) parts.push_back(dual_objective(inst, u));
    return sup_family(parts);
}

// Must hold for every input; a violation is a kernel bug and surfaces as a
// VerificationError carrying the witness.
inline bool weak_duality_check(const Instance& inst, const std::vector<RVec>& duals)
{
    const Frontier dual = dual_value(inst, duals);
    const Frontier primal = primal_value(inst);
    if (!leq(dual, primal))
        throw VerificationError("weak duality violated: dual " + dual.text() +
                                " vs primal " + primal.text());
    return true;
}

// Sup over all u* of L(x,u*), decided through the exact dichotomy: the scalar
// inner sup is 0 iff conv(G(x)) meets -D (an LP feasibility problem in the
// mixing weights), and +infinity otherwise.
inline Frontier sup_lagrangian_over_duals(const Instance& inst, std::string_view decision)
{
    const Decision& d = inst.decision(decision);
    const ConePtr& cone = inst.ordering_cone();
    if (d.objective_points.empty() || d.constraint_points.empty())
        return Frontier::top(cone, Orientation::Sup);

    // lambda >= 0, sum lambda = 1, D-coordinates of -sum lambda_g g >= 0.
    const Eigen::Index k = static_cast<Eigen::Index>(d.constraint_points.size());
    const Eigen::Index m = inst.m();
    RMat a = RMat::Zero(k + 2 + m, k);
    RVec b = RVec::Zero(k + 2 + m);
    for (Eigen::Index i = 0; i < k; ++i) a(i, i) = -1;
    for (Eigen::Index i = 0; i < k; ++i) {
        a(k, i) = 1;
        a(k + 1, i) = -1;
    }
    b(k) = 1;
    b(k + 1) = -1;
    const RMat& dinv = inst.constraint_cone()->inverse();
    for (Eigen::Index i = 0; i < k; ++i) {
        const RVec zg = dinv * d.constraint_points[static_cast<size_t>(i)];
        for (Eigen::Index r = 0; r < m; ++r) a(k + 2 + r, i) = zg(r);
    }
    if (!lp_feasible(a, b)) return Frontier::top(cone, Orientation::Sup);
    return sup_from_points(d.objective_points, cone);
}

// u* is a positive subgradient of the perturbation map at (0,y) iff y lies on
// the frontier of the dual objective at u*.
inline bool subgradient_check(const Instance& inst, const RVec& u_star, const RVec& y)
{
    if (!in_neg_polar(inst.constraint_cone(), u_star))
        throw InputError("subgradient_check: u* must lie in -D°");
    const Frontier primal = primal_value(inst);
    if (!primal.is_proper() || classify_point(primal, y) != PointClass::OnFrontier)
        throw InputError("subgradient_check: y must lie on the primal frontier");
    const Frontier phi = dual_objective(inst, u_star);
    return phi.is_proper() && classify_point(phi, y) == PointClass::OnFrontier;
}

struct StabilityResult {
    bool stable = false;
    // Set when unstable because some probe has no subgradient among the
    // candidates; empty for the degenerate (non-proper primal) case.
    std::optional<RVec> unstable_at;
    // probe -> witnessing dual, aligned by index with the probes.
    std::vector<std::pair<RVec, RVec>> witnesses;
};

// Probe-based stability: certifies subgradient existence only at the probes.
inline StabilityResult stability_check(const Instance& inst, const std::vector<RVec>& probes,
                                       const std::vector<RVec>& candidate_duals)
{
    const Frontier primal = primal_value(inst);
    if (!primal.is_proper()) return {};  // unstable by degeneracy, no witness point

    for (const auto& p : probes)
        if (classify_point(primal, p) != PointClass::OnFrontier)
            throw InputError("stability_check: probe " + format_point(p) +
                             " is not on the primal frontier");

    StabilityResult res;
    for (const auto& p : probes) {
        bool found = false;
        for (const auto& u : candidate_duals) {
            if (!in_neg_polar(inst.constraint_cone(), u)) continue;
            const Frontier phi = dual_objective(inst, u);
            if (phi.is_proper() && classify_point(phi, p) == PointClass::OnFrontier) {
                res.witnesses.emplace_back(p, u);
                found = true;
                break;
            }
        }
        if (!found) {
            res.stable = false;
            res.unstable_at = p;
            return res;
        }
    }
    res.stable = true;
    return res;
}

// Default probe set: the primal generators, plus (q = 2) the midpoints of the
// two staircase segments between each pair of adjacent generators.
inline std::vector<RVec> default_probes(const Instance& inst)
{
    const Frontier primal = primal_value(inst);
    if (!primal.is_proper()) return {};
    std::vector<RVec> probes = primal.generators();
    if (inst.q() != 2 || primal.generators().size() < 2) return probes;

    std::vector<std::pair<RVec, RVec>> pts;  // (z, y) sorted by z1
    for (size_t i = 0; i < primal.generators().size(); ++i)
        pts.emplace_back(primal.generator_coords()[i], primal.generators()[i]);
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first(0) < b.first(0); });
    const RMat& gen = inst.ordering_cone()->generators();
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const RVec corner_z = pts[i].first.cwiseMax(pts[i + 1].first);
        const RVec corner = gen * corner_z;
        probes.push_back((pts[i].second + corner) / 2);
        probes.push_back((corner + pts[i + 1].second) / 2);
    }
    return probes;
}

// Rank-one embedding <u*,.> c of a dual vector into the positive operators.
inline PositiveOperator embed_operator(const Instance& inst, const RVec& u_star)
{
    if (!in_neg_polar(inst.constraint_cone(), u_star))
        throw InputError("embed_operator: u* must lie in -D°");
    return PositiveOperator(inst.scalarization() * u_star.transpose(), inst);
}

// L(x,T) = F(x) + T(G(x)).
inline Frontier operator_lagrangian(const Instance& inst, std::string_view decision,
                                    const PositiveOperator& op)
{
    const Decision& d = inst.decision(decision);
    const ConePtr& cone = inst.ordering_cone();
    if (d.objective_points.empty() || d.constraint_points.empty()) return Frontier::top(cone);

    std::vector<RVec> pts;
    pts.reserve(d.objective_points.size() * d.constraint_points.size());
    for (const auto& f : d.objective_points)
        for (const auto& g : d.constraint_points) pts.push_back(f + op.matrix * g);
    return infer_from_points(pts, cone);
}

inline Frontier operator_dual_objective(const Instance& inst, const PositiveOperator& op)
{
    std::vector<Frontier> parts;
    parts.reserve(inst.decisions().size());
    for (const auto& d : inst.decisions()) parts.push_back(operator_lagrangian(inst, d.name, op));
    return inf_family(parts);
}

inline Frontier operator_dual_value(const Instance& inst, const std::vector<PositiveOperator>& ops)
{
    if (ops.empty()) throw InputError("operator_dual_value: empty operator set");
    std::vector<Frontier> parts;
    parts.reserve(ops.size());
    for (const auto& op : ops) parts.push_back(operator_dual_objective(inst, op));
    return sup_family(parts);
}

// Primal value, finite dual values on both layers, and the certified chain
// dual <= operator-dual <= primal. Default operators: the embeddings of the
// duals that lie in -D°, plus any extras supplied by the caller.
inline DualityReport gap_report(const Instance& inst, const std::vector<RVec>& duals,
                                const std::vector<PositiveOperator>& extra_operators = {})
{
    if (duals.empty()) throw InputError("gap_report: empty dual set");

    const Frontier primal = primal_value(inst);
    const Frontier dual = dual_value(inst, duals);

    std::vector<PositiveOperator> ops = extra_operators;
    for (const auto& u : duals)
        if (in_neg_polar(inst.constraint_cone(), u)) ops.push_back(embed_operator(inst, u));
    // Sup over an empty operator set is the lattice least element.
    const Frontier op_dual =
        ops.empty() ? Frontier::bottom(inst.ordering_cone()) : operator_dual_value(inst, ops);

    if (!leq(dual, op_dual) || !leq(op_dual, primal))
        throw VerificationError("duality chain violated: " + dual.text() + " / " +
                                op_dual.text() + " / " + primal.text());

    DualityReport rep{primal, dual, op_dual, duals, GapRelation::StrictlyBelow};
    if (leq(primal, dual)) rep.relation = GapRelation::Equal;
    return rep;
}

}  // namespace setopt
