#pragma once

// The convex regime: explicit convexification of a finite instance, the exact
// planar primal value of the relaxation, LP-driven synthesis of dual vectors
// from separating normals, and finite strong-duality certificates.
//
// A ConvexFrontier represents the upper set conv(vertices) + C. It is the one
// non-antichain representation in the library and stays confined to this
// header; order and membership queries against it are exact planar geometry
// in cone coordinates (q = 2).

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "setopt/duality.hpp"

namespace setopt {

class ConvexFrontier {
public:
    enum class Kind { Proper, Top };

    static ConvexFrontier top(ConePtr cone) { return ConvexFrontier(std::move(cone), Kind::Top, {}, {}); }

    // Canonicalizes: keeps exactly the vertices of conv(points) + C.
    static ConvexFrontier from_points(const std::vector<RVec>& points, ConePtr cone);

    Kind kind() const { return kind_; }
    bool is_top() const { return kind_ == Kind::Top; }
    bool is_proper() const { return kind_ == Kind::Proper; }
    const ConePtr& cone() const { return cone_; }

    const std::vector<RVec>& vertices() const
    {
        if (!is_proper()) throw InputError("vertices(): frontier is not proper");
        return verts_;
    }
    // Cone coordinates, ordered by first coordinate ascending.
    const std::vector<RVec>& vertex_coords() const
    {
        if (!is_proper()) throw InputError("vertex_coords(): frontier is not proper");
        return zs_;
    }

    std::string text() const
    {
        if (is_top()) return "TOP";
        std::string s = "CONV {";
        for (size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ",";
            s += format_point(verts_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const ConvexFrontier& a, const ConvexFrontier& b)
    {
        if (a.kind_ != b.kind_ || !(*a.cone_ == *b.cone_)) return false;
        if (a.kind_ == Kind::Top) return true;
        if (a.verts_.size() != b.verts_.size()) return false;
        for (size_t i = 0; i < a.verts_.size(); ++i)
            if (!vec_eq(a.verts_[i], b.verts_[i])) return false;
        return true;
    }
    friend bool operator!=(const ConvexFrontier& a, const ConvexFrontier& b) { return !(a == b); }

private:
    ConvexFrontier(ConePtr cone, Kind kind, std::vector<RVec> verts, std::vector<RVec> zs)
        : cone_(std::move(cone)), kind_(kind), verts_(std::move(verts)), zs_(std::move(zs))
    {
    }

    ConePtr cone_;
    Kind kind_;
    std::vector<RVec> verts_;  // ordered along the boundary, left to right
    std::vector<RVec> zs_;
};

namespace detail {

inline Rational cross2(const RVec& a, const RVec& b) { return a(0) * b(1) - a(1) * b(0); }

// Vertices of conv(zs) + orthant: dominance-prune, then keep strictly convex
// turns along the lower-left hull.
inline std::vector<RVec> conv_vertices(std::vector<RVec> zs)
{
    zs = sorted_unique(std::move(zs));
    std::vector<RVec> chain;
    for (const auto& z : zs) {
        bool dominated = false;
        for (const auto& other : zs) {
            if (&other == &z) continue;
            if (coords_geq(z, other) && !vec_eq(z, other)) { dominated = true; break; }
        }
        if (!dominated) chain.push_back(z);
    }
    // After pruning: z1 strictly ascending, z2 strictly descending.
    std::vector<RVec> hull;
    for (const auto& z : chain) {
        while (hull.size() >= 2 &&
               cross2(hull.back() - hull[hull.size() - 2], z - hull.back()) <= 0)
            hull.pop_back();
        hull.push_back(z);
    }
    return hull;
}

}  // namespace detail

inline ConvexFrontier ConvexFrontier::from_points(const std::vector<RVec>& points, ConePtr cone)
{
    if (cone->dim() != 2) throw InputError("convex frontiers are exact for q=2 only");
    if (points.empty()) return top(cone);
    std::vector<RVec> zs;
    zs.reserve(points.size());
    for (const auto& p : points) zs.push_back(cone->cone_coords(p));
    std::vector<RVec> hull = detail::conv_vertices(std::move(zs));
    std::vector<RVec> verts;
    verts.reserve(hull.size());
    for (const auto& z : hull) verts.push_back(cone->generators() * z);
    return ConvexFrontier(std::move(cone), Kind::Proper, std::move(verts), std::move(hull));
}

// Exact boundary walk: the upper set is bounded on the left by a vertical ray
// above the first vertex and below by the hull polyline plus a horizontal ray.
inline PointClass classify_point(const ConvexFrontier& s, const RVec& y)
{
    if (!s.is_proper()) throw InputError("classify_point: convex frontier must be proper");
    const RVec z = s.cone()->cone_coords(y);
    const auto& vs = s.vertex_coords();

    if (z(0) < vs.front()(0)) return PointClass::Below;

    Rational bound;
    if (z(0) >= vs.back()(0)) {
        bound = vs.back()(1);
    } else {
        size_t i = 0;
        while (!(vs[i](0) <= z(0) && z(0) <= vs[i + 1](0))) ++i;
        bound = vs[i](1) + (z(0) - vs[i](0)) * (vs[i + 1](1) - vs[i](1)) / (vs[i + 1](0) - vs[i](0));
    }
    if (z(1) < bound) return PointClass::Below;
    if (z(0) > vs.front()(0) && z(1) > bound) return PointClass::Above;
    return PointClass::OnFrontier;
}

inline bool leq(const ConvexFrontier& a, const ConvexFrontier& b)
{
    if (!(*a.cone() == *b.cone())) throw InputError("leq: cone mismatch");
    if (b.is_top()) return true;
    if (a.is_top()) return false;
    for (const auto& v : b.vertices())
        if (classify_point(a, v) == PointClass::Below) return false;
    return true;
}

// Cross-mode order: convex element against an antichain frontier.
inline bool leq(const ConvexFrontier& a, const Frontier& b)
{
    if (!(*a.cone() == *b.cone())) throw InputError("leq: cone mismatch");
    if (b.orientation() != Orientation::Inf) throw InputError("leq: inf orientation required");
    if (b.is_top()) return true;
    if (b.is_bottom() || a.is_top()) return false;
    for (const auto& g : b.generators())
        if (classify_point(a, g) == PointClass::Below) return false;
    return true;
}

struct ConvexFacet {
    RVec normal_coords;  // inner normal in cone coordinates, unnormalized
    RVec normal;         // inner normal in Y, scaled so that <normal, c> = 1
    Rational support;    // min of <normal, .> over the upper set
    std::vector<RVec> touching;  // vertices lying on the facet
};

// All facets of the upper set: the slant edges left to right, then the two
// cone-parallel facets (vertical extent, horizontal extent).
inline std::vector<ConvexFacet> facets(const ConvexFrontier& s, const RVec& c)
{
    if (!s.is_proper()) throw InputError("facets: convex frontier must be proper");
    const auto& vs = s.vertex_coords();
    const RVec zc = s.cone()->cone_coords(c);
    const RMat wtrans = s.cone()->inverse().transpose();

    std::vector<ConvexFacet> out;
    auto push = [&](RVec wz, std::vector<size_t> touch_idx) {
        const Rational norm = wz.dot(zc);  // positive: wz >= 0, zc > 0
        ConvexFacet f;
        f.normal_coords = wz;
        f.normal = (wtrans * wz) / norm;
        f.support = wz.dot(vs[touch_idx.front()]) / norm;
        for (size_t i : touch_idx) f.touching.push_back(s.vertices()[i]);
        out.push_back(std::move(f));
    };

    for (size_t i = 0; i + 1 < vs.size(); ++i)
        push(make_vec({vs[i](1) - vs[i + 1](1), vs[i + 1](0) - vs[i](0)}), {i, i + 1});
    push(make_vec({1, 0}), {0});
    push(make_vec({0, 1}), {vs.size() - 1});
    return out;
}

// Intersection of upper closures: collect every operand's facet half-planes,
// intersect pairwise boundary lines, keep the feasible ones, canonicalize.
inline ConvexFrontier sup_family_conv(const std::vector<ConvexFrontier>& family, const RVec& c)
{
    if (family.empty()) throw InputError("sup_family_conv: empty family");
    for (const auto& f : family) {
        if (!(*f.cone() == *family.front().cone()))
            throw InputError("sup_family_conv: cone mismatch");
        if (f.is_top()) return ConvexFrontier::top(family.front().cone());
    }
    const ConePtr& cone = family.front().cone();

    std::vector<std::pair<RVec, Rational>> halfplanes;  // <w,z> >= beta in cone coords
    for (const auto& f : family) {
        for (const auto& facet : facets(f, c)) {
            Rational beta = facet.normal_coords.dot(f.vertex_coords().front());
            for (const auto& vz : f.vertex_coords())
                beta = std::min(beta, Rational(facet.normal_coords.dot(vz)));
            halfplanes.emplace_back(facet.normal_coords, beta);
        }
    }

    std::vector<RVec> candidates;
    for (size_t i = 0; i < halfplanes.size(); ++i) {
        for (size_t j = i + 1; j < halfplanes.size(); ++j) {
            RMat a(2, 2);
            a.row(0) = halfplanes[i].first.transpose();
            a.row(1) = halfplanes[j].first.transpose();
            const RVec rhs = make_vec({halfplanes[i].second, halfplanes[j].second});
            auto z = solve_square(a, rhs);
            if (!z) continue;
            bool feasible = true;
            for (const auto& [w, beta] : halfplanes)
                if (w.dot(*z) < beta) { feasible = false; break; }
            if (feasible) candidates.push_back(*z);
        }
    }
    std::vector<RVec> hull = detail::conv_vertices(sorted_unique(std::move(candidates)));
    std::vector<RVec> pts;
    pts.reserve(hull.size());
    for (const auto& z : hull) pts.push_back(cone->generators() * z);
    return ConvexFrontier::from_points(pts, cone);
}

// The canonical convex surrogate of a finite instance: all (f, g) pairs over
// decisions inside dom F and dom G; the relaxation optimizes over their
// convex combinations.
struct ConvexifiedInstance {
    Instance base;
    std::vector<std::pair<RVec, RVec>> vertices;  // (objective point, constraint point)
};

inline ConvexifiedInstance convexify(const Instance& inst)
{
    std::vector<std::pair<RVec, RVec>> verts;
    for (const auto& d : inst.decisions()) {
        for (const auto& f : d.objective_points)
            for (const auto& g : d.constraint_points) verts.emplace_back(f, g);
    }
    std::sort(verts.begin(), verts.end(), [](const auto& a, const auto& b) {
        return lex_less(a.first, b.first) ||
               (vec_eq(a.first, b.first) && lex_less(a.second, b.second));
    });
    verts.erase(std::unique(verts.begin(), verts.end(),
                            [](const auto& a, const auto& b) {
                                return vec_eq(a.first, b.first) && vec_eq(a.second, b.second);
                            }),
                verts.end());
    if (verts.empty()) throw InputError("convexify: dom F and dom G do not meet");
    return ConvexifiedInstance{inst, std::move(verts)};
}

namespace detail {

// min over feasible mixing weights of <w, f-coords(lambda)>, optionally with
// an extra pinning constraint <pin, coords(lambda)> <= pin_rhs. Returns the
// support point in cone coordinates through `point`.
struct ConvexSupportLp {
    const ConvexifiedInstance& cv;
    std::vector<RVec> fz;  // cone coordinates of the objective points

    explicit ConvexSupportLp(const ConvexifiedInstance& cv_) : cv(cv_)
    {
        for (const auto& [f, g] : cv.vertices)
            fz.push_back(cv.base.ordering_cone()->cone_coords(f));
    }

    bool minimize(const RVec& w, const RVec* pin, const Rational* pin_rhs, RVec& point,
                  Rational& value) const
    {
        const Eigen::Index k = static_cast<Eigen::Index>(cv.vertices.size());
        const Eigen::Index m = cv.base.m();
        const Eigen::Index extra = pin ? 1 : 0;
        RMat a = RMat::Zero(k + 2 + m + extra, k);
        RVec b = RVec::Zero(k + 2 + m + extra);
        for (Eigen::Index i = 0; i < k; ++i) a(i, i) = -1;
        for (Eigen::Index i = 0; i < k; ++i) {
            a(k, i) = 1;
            a(k + 1, i) = -1;
        }
        b(k) = 1;
        b(k + 1) = -1;
        const RMat& dinv = cv.base.constraint_cone()->inverse();
        for (Eigen::Index i = 0; i < k; ++i) {
            const RVec zg = dinv * cv.vertices[static_cast<size_t>(i)].second;
            for (Eigen::Index r = 0; r < m; ++r) a(k + 2 + r, i) = zg(r);
        }
        RVec obj(k);
        for (Eigen::Index i = 0; i < k; ++i) obj(i) = w.dot(fz[static_cast<size_t>(i)]);
        if (pin) {
            for (Eigen::Index i = 0; i < k; ++i)
                a(k + 2 + m, i) = pin->dot(fz[static_cast<size_t>(i)]);
            b(k + 2 + m) = *pin_rhs;
        }
        const LpOutcome out = lp_solve(a, b, obj, LpSense::Minimize);
        if (out.status != LpStatus::Optimal) return false;
        RVec z = RVec::Zero(2);
        for (Eigen::Index i = 0; i < k; ++i) z += out.point(i) * fz[static_cast<size_t>(i)];
        point = z;
        value = out.value;
        return true;
    }
};

}  // namespace detail

// Exact planar value of the relaxation: the frontier of (projected feasible
// objective polygon) + C, found by support probing — the two lexicographic
// extremes first, then recursive refinement between known boundary points.
inline ConvexFrontier primal_value_conv(const ConvexifiedInstance& cv)
{
    if (cv.base.q() != 2)
        throw InputError("primal_value_conv: exact mode requires q=2");
    const ConePtr& cone = cv.base.ordering_cone();
    detail::ConvexSupportLp lp(cv);

    RVec tmp(2);
    Rational v1, v2;
    const RVec e1 = make_vec({1, 0});
    const RVec e2 = make_vec({0, 1});
    if (!lp.minimize(e1, nullptr, nullptr, tmp, v1)) return ConvexFrontier::top(cone);
    RVec left(2);
    lp.minimize(e2, &e1, &v1, left, v2);  // lexmin (z1, z2)
    left = make_vec({v1, v2});

    Rational w1, w2;
    lp.minimize(e2, nullptr, nullptr, tmp, w2);
    lp.minimize(e1, &e2, &w2, tmp, w1);  // lexmin (z2, z1)
    const RVec bottom = make_vec({w1, w2});

    std::vector<RVec> support = {left, bottom};
    std::deque<std::pair<RVec, RVec>> work;
    if (!vec_eq(left, bottom)) work.emplace_back(left, bottom);
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop_front();
        const RVec w = make_vec({p(1) - q(1), q(0) - p(0)});
        RVec z(2);
        Rational val;
        lp.minimize(w, nullptr, nullptr, z, val);
        if (val < w.dot(p)) {
            support.push_back(z);
            work.emplace_back(p, z);
            work.emplace_back(z, q);
        }
    }

    std::vector<RVec> pts;
    pts.reserve(support.size());
    for (const auto& z : support) pts.push_back(cone->generators() * z);
    return ConvexFrontier::from_points(pts, cone);
}

// A separating normal: y* in C° \ {0} normalized against the scalarization
// direction, <y*, c> = -1.
struct ScalarizationNormal {
    RVec y_star;

    ScalarizationNormal(RVec y, const Instance& inst) : y_star(std::move(y))
    {
        if (y_star.size() != inst.q()) throw InputError("scalarization normal: dimension mismatch");
        bool nonzero = false;
        for (Eigen::Index i = 0; i < y_star.size(); ++i)
            if (y_star(i) != 0) nonzero = true;
        if (!nonzero) throw InputError("scalarization normal: zero vector");
        for (Eigen::Index i = 0; i < inst.q(); ++i)
            if (y_star.dot(inst.ordering_cone()->generator(i)) > 0)
                throw InputError("scalarization normal: not in the polar cone C°");
        if (y_star.dot(inst.scalarization()) != -1)
            throw InputError("scalarization normal: <y*,c> = -1 required");
    }
};

struct SynthesizedDual {
    RVec u_star;
    Rational lp_value;  // optimal t: the certified support value in direction -y*
};

// Scalar Lagrange dual of the scalarized relaxation:
//   max t  s.t.  t <= <-y*, f> + <u*, g> per vertex,  u* in -D°.
inline SynthesizedDual synthesize_dual(const ConvexifiedInstance& cv, const ScalarizationNormal& sn)
{
    const Eigen::Index m = cv.base.m();
    const Eigen::Index k = static_cast<Eigen::Index>(cv.vertices.size());
    RMat a = RMat::Zero(k + m, 1 + m);
    RVec b = RVec::Zero(k + m);
    for (Eigen::Index i = 0; i < k; ++i) {
        a(i, 0) = 1;
        for (Eigen::Index j = 0; j < m; ++j)
            a(i, 1 + j) = -cv.vertices[static_cast<size_t>(i)].second(j);
        b(i) = -sn.y_star.dot(cv.vertices[static_cast<size_t>(i)].first);
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index r = 0; r < m; ++r)
            a(k + j, 1 + r) = -cv.base.constraint_cone()->generator(j)(r);
    }
    RVec obj = RVec::Zero(1 + m);
    obj(0) = 1;
    const LpOutcome out = lp_solve(a, b, obj, LpSense::Maximize);
    if (out.status == LpStatus::Unbounded)
        throw VerificationError("synthesize_dual: unbounded separation LP (relaxation infeasible)");
    if (out.status != LpStatus::Optimal)
        throw VerificationError("synthesize_dual: separation LP failed");
    SynthesizedDual res;
    res.u_star = out.point.segment(1, m);
    res.lp_value = out.value;
    return res;
}

// Dual objective evaluated on the convexified semantics: the convex frontier
// of the scalar-shifted objective vertices.
inline ConvexFrontier conv_dual_objective(const ConvexifiedInstance& cv, const RVec& u_star)
{
    if (!in_neg_polar(cv.base.constraint_cone(), u_star))
        throw InputError("conv_dual_objective: u* must lie in -D°");
    std::vector<RVec> pts;
    pts.reserve(cv.vertices.size());
    for (const auto& [f, g] : cv.vertices) pts.push_back(f + u_star.dot(g) * cv.base.scalarization());
    return ConvexFrontier::from_points(pts, cv.base.ordering_cone());
}

inline ConvexFrontier dual_value_conv(const ConvexifiedInstance& cv, const std::vector<RVec>& duals)
{
    if (duals.empty()) throw InputError("dual_value_conv: empty dual set");
    std::vector<ConvexFrontier> parts;
    parts.reserve(duals.size());
    for (const auto& u : duals) parts.push_back(conv_dual_objective(cv, u));
    return sup_family_conv(parts, cv.base.scalarization());
}

enum class CertificateVerdict { Certified, NotRefuted, Failed };

inline std::string_view verdict_name(CertificateVerdict v)
{
    switch (v) {
        case CertificateVerdict::Certified: return "Certified";
        case CertificateVerdict::NotRefuted: return "NotRefuted";
        case CertificateVerdict::Failed: return "Failed";
    }
    return "?";
}

struct Certificate {
    CertificateVerdict verdict = CertificateVerdict::Failed;
    std::string reason;  // set when Failed
    std::vector<RVec> duals;
    std::vector<RVec> facet_normals;  // the normalized y* per facet
    std::vector<Rational> lp_values;
    ConvexFrontier primal_conv;
    ConvexFrontier dual_set_value;
    bool operator_chain = false;
};

// One dual per facet of the relaxation's frontier (slant edges plus the
// vertical/horizontal extent facets). With all facets covered, each dual's
// objective is trapped inside its facet half-plane at the exact support
// value, so the intersection collapses onto the primal frontier.
inline Certificate certify_strong_duality(const ConvexifiedInstance& cv)
{
    if (cv.base.q() != 2) throw InputError("exact certification requires q=2");
    const ConePtr& cone = cv.base.ordering_cone();

    Certificate cert{CertificateVerdict::Failed, "", {}, {}, {},
                     ConvexFrontier::top(cone), ConvexFrontier::top(cone), false};
    if (!slater_check(cv.base)) {
        cert.reason = "slater";
        return cert;
    }

    cert.primal_conv = primal_value_conv(cv);
    if (!cert.primal_conv.is_proper())
        throw VerificationError("certify: Slater holds but the relaxation is infeasible");

    std::vector<ConvexFrontier> phis;
    std::vector<ConvexFrontier> op_phis;
    for (const auto& facet : facets(cert.primal_conv, cv.base.scalarization())) {
        const ScalarizationNormal sn(RVec(-facet.normal), cv.base);
        const SynthesizedDual syn = synthesize_dual(cv, sn);
        if (syn.lp_value != facet.support)
            throw VerificationError("certify: scalar support mismatch on facet " +
                                    format_point(facet.normal));
        const ConvexFrontier phi = conv_dual_objective(cv, syn.u_star);
        if (!leq(phi, cert.primal_conv))
            throw VerificationError("certify: synthesized dual violates weak duality");
        phis.push_back(phi);

        // Operator layer: the rank-one embedding reproduces the same value.
        const PositiveOperator op = embed_operator(cv.base, syn.u_star);
        std::vector<RVec> op_pts;
        for (const auto& [f, g] : cv.vertices) op_pts.push_back(f + op.matrix * g);
        op_phis.push_back(ConvexFrontier::from_points(op_pts, cone));

        cert.facet_normals.push_back(sn.y_star);
        cert.lp_values.push_back(syn.lp_value);
        bool seen = false;
        for (const auto& u : cert.duals)
            if (vec_eq(u, syn.u_star)) { seen = true; break; }
        if (!seen) cert.duals.push_back(syn.u_star);
    }

    cert.dual_set_value = sup_family_conv(phis, cv.base.scalarization());
    const ConvexFrontier op_dual = sup_family_conv(op_phis, cv.base.scalarization());
    cert.operator_chain = leq(cert.dual_set_value, op_dual) && leq(op_dual, cert.primal_conv) &&
                          op_dual == cert.dual_set_value;

    if (cert.dual_set_value == cert.primal_conv) {
        cert.verdict = CertificateVerdict::Certified;
    } else {
        cert.verdict = CertificateVerdict::Failed;
        cert.reason = "gap";
    }
    return cert;
}

// Sampled-normal mode for q != 2: checks, per sampled direction, that the
// synthesized dual attains the exact scalarized support value (independent
// LP) and respects weak duality in that direction. Verdict is NotRefuted at
// best; it never claims the full lattice equality.
inline Certificate certify_heuristic(const ConvexifiedInstance& cv, int samples, uint64_t seed)
{
    const ConePtr& cone = cv.base.ordering_cone();
    Certificate cert{CertificateVerdict::Failed, "", {}, {}, {},
                     ConvexFrontier::top(cone), ConvexFrontier::top(cone), false};
    if (!slater_check(cv.base)) {
        cert.reason = "slater";
        return cert;
    }

    const Eigen::Index q = cv.base.q();
    const RVec zc = cone->cone_coords(cv.base.scalarization());
    const RMat wtrans = cone->inverse().transpose();
    std::vector<RVec> fz;
    for (const auto& [f, g] : cv.vertices) fz.push_back(cone->cone_coords(f));

    uint64_t state = seed ? seed : 1;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };

    for (int s = 0; s < samples; ++s) {
        RVec wz(q);
        for (Eigen::Index i = 0; i < q; ++i) wz(i) = Rational(1 + next() % 7);
        const Rational norm = wz.dot(zc);
        const RVec w = (wtrans * wz) / norm;
        const ScalarizationNormal sn(RVec(-w), cv.base);
        const SynthesizedDual syn = synthesize_dual(cv, sn);

        // Independent scalarized support value over the feasible mixtures.
        const Eigen::Index k = static_cast<Eigen::Index>(cv.vertices.size());
        const Eigen::Index m = cv.base.m();
        RMat a = RMat::Zero(k + 2 + m, k);
        RVec b = RVec::Zero(k + 2 + m);
        for (Eigen::Index i = 0; i < k; ++i) a(i, i) = -1;
        for (Eigen::Index i = 0; i < k; ++i) {
            a(k, i) = 1;
            a(k + 1, i) = -1;
        }
        b(k) = 1;
        b(k + 1) = -1;
        const RMat& dinv = cv.base.constraint_cone()->inverse();
        for (Eigen::Index i = 0; i < k; ++i) {
            const RVec zg = dinv * cv.vertices[static_cast<size_t>(i)].second;
            for (Eigen::Index r = 0; r < m; ++r) a(k + 2 + r, i) = zg(r);
        }
        RVec obj(k);
        for (Eigen::Index i = 0; i < k; ++i) obj(i) = (wz / norm).dot(fz[static_cast<size_t>(i)]);
        const LpOutcome support = lp_solve(a, b, obj, LpSense::Minimize);
        if (support.status != LpStatus::Optimal || support.value != syn.lp_value) {
            cert.reason = "scalar support mismatch";
            return cert;
        }
        cert.facet_normals.push_back(sn.y_star);
        cert.lp_values.push_back(syn.lp_value);
        bool seen = false;
        for (const auto& u : cert.duals)
            if (vec_eq(u, syn.u_star)) { seen = true; break; }
        if (!seen) cert.duals.push_back(syn.u_star);
    }
    cert.verdict = CertificateVerdict::NotRefuted;
    return cert;
}

inline nlohmann::ordered_json conv_frontier_json(const ConvexFrontier& f)
{
    nlohmann::ordered_json j;
    if (f.is_top()) {
        j["kind"] = "top";
        j["vertices"] = nlohmann::ordered_json::array();
        return j;
    }
    j["kind"] = "proper";
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : f.vertices()) j["vertices"].push_back(detail::vector_json(v));
    return j;
}

inline nlohmann::ordered_json certificate_to_json(const Certificate& cert)
{
    nlohmann::ordered_json j;
    j["verdict"] = std::string(verdict_name(cert.verdict));
    j["reason"] = cert.reason;
    j["duals"] = nlohmann::ordered_json::array();
    for (const auto& u : cert.duals) j["duals"].push_back(detail::vector_json(u));
    j["facet_normals"] = nlohmann::ordered_json::array();
    for (const auto& n : cert.facet_normals) j["facet_normals"].push_back(detail::vector_json(n));
    j["lp_values"] = nlohmann::ordered_json::array();
    for (const auto& v : cert.lp_values) j["lp_values"].push_back(to_string(v));
    j["primal_conv"] = conv_frontier_json(cert.primal_conv);
    j["dual_set_value"] = conv_frontier_json(cert.dual_set_value);
    j["operator_chain"] = cert.operator_chain;
    return j;
}

// Duals synthesized from an instance's convexification, for use as stability
// candidates; empty when synthesis does not apply.
inline std::vector<RVec> certificate_duals(const Instance& inst)
{
    if (inst.q() != 2) return {};
    try {
        const Certificate cert = certify_strong_duality(convexify(inst));
        return cert.duals;
    } catch (const InputError&) {
        return {};
    }
}

}  // namespace setopt
