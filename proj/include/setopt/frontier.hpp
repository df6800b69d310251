#pragma once

// Canonical elements of the complete lattice of self-infimal (resp.
// self-supremal) sets over a simplicial cone. A Proper element is stored as
// the finite antichain of generator points whose translated-cone union is the
// upper (resp. lower) closure; Bottom is {-infinity}, Top is {+infinity}.
// All pruning, ordering and family operations happen in cone coordinates,
// where the cone is the nonnegative orthant and every test is a sign check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "setopt/cone.hpp"

namespace setopt {

enum class Orientation { Inf, Sup };
enum class PointClass { OnFrontier, Above, Below };

// A point of the extended space: -infinity, finite, or +infinity.
struct ExtPoint {
    enum class Tag { MinusInfinity, Finite, PlusInfinity };
    Tag tag = Tag::Finite;
    RVec value;

    static ExtPoint minus_infinity() { return {Tag::MinusInfinity, {}}; }
    static ExtPoint plus_infinity() { return {Tag::PlusInfinity, {}}; }
    static ExtPoint finite(RVec v) { return {Tag::Finite, std::move(v)}; }
};

class Frontier;

namespace detail {

Frontier make_frontier(ConePtr cone, Orientation orient, int kind,
                       std::vector<RVec> gens, std::vector<RVec> zs);

// Test hook: with pruning disabled infer_from_points keeps dominated points,
// which the canonicity law in the property suite is expected to catch.
inline bool& pruning_disabled()
{
    static bool flag = false;
    return flag;
}

}  // namespace detail

class Frontier {
public:
    enum class Kind { Bottom, Proper, Top };

    static Frontier bottom(ConePtr cone, Orientation orient = Orientation::Inf)
    {
        return Frontier(std::move(cone), orient, Kind::Bottom, {}, {});
    }
    static Frontier top(ConePtr cone, Orientation orient = Orientation::Inf)
    {
        return Frontier(std::move(cone), orient, Kind::Top, {}, {});
    }

    Kind kind() const { return kind_; }
    Orientation orientation() const { return orient_; }
    const ConePtr& cone() const { return cone_; }
    bool is_proper() const { return kind_ == Kind::Proper; }
    bool is_bottom() const { return kind_ == Kind::Bottom; }
    bool is_top() const { return kind_ == Kind::Top; }

    const std::vector<RVec>& generators() const
    {
        if (!is_proper()) throw InputError("generators(): frontier is not proper");
        return gens_;
    }
    // Generators expressed in cone coordinates, aligned with generators().
    const std::vector<RVec>& generator_coords() const
    {
        if (!is_proper()) throw InputError("generator_coords(): frontier is not proper");
        return zs_;
    }

    // Canonical text: orientation tag + generators sorted lexicographically,
    // or the bare BOTTOM / TOP keywords.
    std::string text() const
    {
        if (kind_ == Kind::Bottom) return "BOTTOM";
        if (kind_ == Kind::Top) return "TOP";
        std::string s = orient_ == Orientation::Inf ? "INF {" : "SUP {";
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ",";
            s += format_point(gens_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Frontier& a, const Frontier& b)
    {
        if (a.orient_ != b.orient_ || a.kind_ != b.kind_) return false;
        if (!(*a.cone_ == *b.cone_)) return false;
        if (a.kind_ != Kind::Proper) return true;
        if (a.gens_.size() != b.gens_.size()) return false;
        for (size_t i = 0; i < a.gens_.size(); ++i)
            if (!vec_eq(a.gens_[i], b.gens_[i])) return false;
        return true;
    }
    friend bool operator!=(const Frontier& a, const Frontier& b) { return !(a == b); }

private:
    Frontier(ConePtr cone, Orientation orient, Kind kind,
             std::vector<RVec> gens, std::vector<RVec> zs)
        : cone_(std::move(cone)), orient_(orient), kind_(kind),
          gens_(std::move(gens)), zs_(std::move(zs))
    {
        if (!cone_) throw InputError("frontier requires a cone");
    }

    friend Frontier detail::make_frontier(ConePtr, Orientation, int,
                                          std::vector<RVec>, std::vector<RVec>);

    ConePtr cone_;
    Orientation orient_;
    Kind kind_;
    std::vector<RVec> gens_;  // sorted lexicographically
    std::vector<RVec> zs_;    // cone coordinates, aligned with gens_
};

namespace detail {

inline Frontier make_frontier(ConePtr cone, Orientation orient, int kind,
                              std::vector<RVec> gens, std::vector<RVec> zs)
{
    return Frontier(std::move(cone), orient, static_cast<Frontier::Kind>(kind),
                    std::move(gens), std::move(zs));
}

inline bool coords_geq(const RVec& a, const RVec& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) < b(i)) return false;
    return true;
}

inline bool coords_gt(const RVec& a, const RVec& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) <= b(i)) return false;
    return true;
}

// Dedupe, prune points dominated within direction `dir` (+1: drop p when
// p >= q for another q, the inf antichain; -1: mirrored), sort by original
// coordinates. Points come as (original, cone-coords) pairs.
inline std::pair<std::vector<RVec>, std::vector<RVec>>
prune_antichain(std::vector<std::pair<RVec, RVec>> pts, int dir)
{
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) { return vec_eq(a.first, b.first); }),
              pts.end());

    std::vector<char> keep(pts.size(), 1);
    if (!pruning_disabled()) {
        for (size_t i = 0; i < pts.size(); ++i) {
            for (size_t j = 0; j < pts.size(); ++j) {
                if (i == j) continue;
                const bool dominated = dir > 0 ? coords_geq(pts[i].second, pts[j].second)
                                               : coords_geq(pts[j].second, pts[i].second);
                if (dominated) { keep[i] = 0; break; }
            }
        }
    }

    std::vector<RVec> gens, zs;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (!keep[i]) continue;
        gens.push_back(std::move(pts[i].first));
        zs.push_back(std::move(pts[i].second));
    }
    return {std::move(gens), std::move(zs)};
}

inline Frontier build_proper(ConePtr cone, Orientation orient,
                             std::vector<std::pair<RVec, RVec>> pts, int dir)
{
    auto [gens, zs] = prune_antichain(std::move(pts), dir);
    return make_frontier(std::move(cone), orient, static_cast<int>(Frontier::Kind::Proper),
                         std::move(gens), std::move(zs));
}

inline std::vector<std::pair<RVec, RVec>> with_coords(const ConePtr& cone,
                                                      const std::vector<RVec>& pts)
{
    std::vector<std::pair<RVec, RVec>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(p, cone->cone_coords(p));
    return out;
}

}  // namespace detail

// Inf of a finite point set: Bottom if -infinity occurs, Top if nothing
// finite remains, otherwise the antichain of non-dominated points (pruning
// keeps the upper closure intact because C + C = C).
inline Frontier infer_from_points(const std::vector<ExtPoint>& points, ConePtr cone)
{
    std::vector<RVec> finite;
    for (const auto& p : points) {
        switch (p.tag) {
            case ExtPoint::Tag::MinusInfinity: return Frontier::bottom(cone, Orientation::Inf);
            case ExtPoint::Tag::PlusInfinity: break;
            case ExtPoint::Tag::Finite:
                if (p.value.size() != cone->dim())
                    throw InputError("infer_from_points: dimension mismatch");
                finite.push_back(p.value);
                break;
        }
    }
    if (finite.empty()) return Frontier::top(cone, Orientation::Inf);
    return detail::build_proper(cone, Orientation::Inf, detail::with_coords(cone, finite), +1);
}

inline Frontier infer_from_points(const std::vector<RVec>& points, ConePtr cone)
{
    if (points.empty()) return Frontier::top(cone, Orientation::Inf);
    for (const auto& p : points)
        if (p.size() != cone->dim()) throw InputError("infer_from_points: dimension mismatch");
    return detail::build_proper(cone, Orientation::Inf, detail::with_coords(cone, points), +1);
}

// Mirror of infer_from_points: lower closures, Sup, the roles of the two
// infinities swapped.
inline Frontier sup_from_points(const std::vector<ExtPoint>& points, ConePtr cone)
{
    std::vector<RVec> finite;
    for (const auto& p : points) {
        switch (p.tag) {
            case ExtPoint::Tag::PlusInfinity: return Frontier::top(cone, Orientation::Sup);
            case ExtPoint::Tag::MinusInfinity: break;
            case ExtPoint::Tag::Finite:
                if (p.value.size() != cone->dim())
                    throw InputError("sup_from_points: dimension mismatch");
                finite.push_back(p.value);
                break;
        }
    }
    if (finite.empty()) return Frontier::bottom(cone, Orientation::Sup);
    return detail::build_proper(cone, Orientation::Sup, detail::with_coords(cone, finite), -1);
}

inline Frontier sup_from_points(const std::vector<RVec>& points, ConePtr cone)
{
    if (points.empty()) return Frontier::bottom(cone, Orientation::Sup);
    for (const auto& p : points)
        if (p.size() != cone->dim()) throw InputError("sup_from_points: dimension mismatch");
    return detail::build_proper(cone, Orientation::Sup, detail::with_coords(cone, points), -1);
}

// Trichotomy against a proper inf-frontier: Above = strictly dominated by a
// generator, OnFrontier = in the upper closure but not Above, Below = rest.
inline PointClass classify_point(const Frontier& s, const RVec& y)
{
    if (!s.is_proper()) throw InputError("classify_point: frontier must be proper");
    if (s.orientation() != Orientation::Inf)
        throw InputError("classify_point: frontier must be inf-oriented");
    if (y.size() != s.cone()->dim()) throw InputError("classify_point: dimension mismatch");

    const RVec zy = s.cone()->cone_coords(y);
    bool in_closure = false;
    for (const auto& zg : s.generator_coords()) {
        if (detail::coords_gt(zy, zg)) return PointClass::Above;
        if (detail::coords_geq(zy, zg)) in_closure = true;
    }
    return in_closure ? PointClass::OnFrontier : PointClass::Below;
}

// Lattice order: a <= b iff the upper closure of a contains that of b
// (mirrored through lower closures for sup-oriented elements).
inline bool leq(const Frontier& a, const Frontier& b)
{
    if (a.orientation() != b.orientation()) throw InputError("leq: orientation mismatch");
    if (!(*a.cone() == *b.cone())) throw InputError("leq: cone mismatch");

    if (a.is_bottom() || b.is_top()) return true;
    if (a.is_top() || b.is_bottom()) return false;

    if (a.orientation() == Orientation::Inf) {
        // Every generator of b must lie in some translated cone of a.
        for (const auto& zb : b.generator_coords()) {
            bool covered = false;
            for (const auto& za : a.generator_coords())
                if (detail::coords_geq(zb, za)) { covered = true; break; }
            if (!covered) return false;
        }
        return true;
    }
    // Sup orientation: every generator of a must lie below some generator of b.
    for (const auto& za : a.generator_coords()) {
        bool covered = false;
        for (const auto& zb : b.generator_coords())
            if (detail::coords_geq(zb, za)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

// Inf-addition: Top absorbs, then Bottom, then the pairwise Minkowski sums.
inline Frontier add(const Frontier& a, const Frontier& b)
{
    if (a.orientation() != Orientation::Inf || b.orientation() != Orientation::Inf)
        throw InputError("add: inf-oriented frontiers required");
    if (!(*a.cone() == *b.cone())) throw InputError("add: cone mismatch");

    if (a.is_top() || b.is_top()) return Frontier::top(a.cone());
    if (a.is_bottom() || b.is_bottom()) return Frontier::bottom(a.cone());

    std::vector<std::pair<RVec, RVec>> sums;
    sums.reserve(a.generators().size() * b.generators().size());
    for (size_t i = 0; i < a.generators().size(); ++i)
        for (size_t j = 0; j < b.generators().size(); ++j)
            sums.emplace_back(a.generators()[i] + b.generators()[j],
                              a.generator_coords()[i] + b.generator_coords()[j]);
    return detail::build_proper(a.cone(), Orientation::Inf, std::move(sums), +1);
}

inline Frontier scale(const Frontier& s, const Rational& alpha)
{
    if (alpha <= 0) throw InputError("scale: factor must be positive");
    if (!s.is_proper()) return s;
    std::vector<std::pair<RVec, RVec>> pts;
    pts.reserve(s.generators().size());
    for (size_t i = 0; i < s.generators().size(); ++i)
        pts.emplace_back(alpha * s.generators()[i], alpha * s.generator_coords()[i]);
    return detail::build_proper(s.cone(), s.orientation(), std::move(pts),
                                s.orientation() == Orientation::Inf ? +1 : -1);
}

namespace detail {

inline void check_family(const std::vector<Frontier>& family, const char* who)
{
    if (family.empty()) throw InputError(std::string(who) + ": empty family");
    for (const auto& f : family) {
        if (f.orientation() != Orientation::Inf)
            throw InputError(std::string(who) + ": inf-oriented frontiers required");
        if (!(*f.cone() == *family.front().cone()))
            throw InputError(std::string(who) + ": cone mismatch");
    }
}

}  // namespace detail

// Greatest lower bound of a nonempty family: Inf of the generator union.
inline Frontier inf_family(const std::vector<Frontier>& family)
{
    detail::check_family(family, "inf_family");
    const ConePtr& cone = family.front().cone();

    std::vector<std::pair<RVec, RVec>> pool;
    for (const auto& f : family) {
        if (f.is_bottom()) return Frontier::bottom(cone);
        if (!f.is_proper()) continue;
        for (size_t i = 0; i < f.generators().size(); ++i)
            pool.emplace_back(f.generators()[i], f.generator_coords()[i]);
    }
    if (pool.empty()) return Frontier::top(cone);
    return detail::build_proper(cone, Orientation::Inf, std::move(pool), +1);
}

// Least upper bound: intersection of upper closures. For a simplicial cone
// the intersection of two translated-cone unions is the union over pairwise
// componentwise joins in cone coordinates.
inline Frontier sup_family(const std::vector<Frontier>& family)
{
    detail::check_family(family, "sup_family");
    const ConePtr& cone = family.front().cone();

    for (const auto& f : family)
        if (f.is_top()) return Frontier::top(cone);

    bool have = false;
    std::vector<RVec> cur;  // cone coordinates of the running antichain
    for (const auto& f : family) {
        if (!f.is_proper()) continue;  // Bottom is neutral for sup
        if (!have) {
            cur = f.generator_coords();
            have = true;
            continue;
        }
        std::vector<RVec> joined;
        joined.reserve(cur.size() * f.generator_coords().size());
        for (const auto& za : cur)
            for (const auto& zb : f.generator_coords())
                joined.push_back(za.cwiseMax(zb));
        cur = std::move(joined);
        // Re-prune between folds to keep the pool small.
        std::vector<std::pair<RVec, RVec>> pts;
        pts.reserve(cur.size());
        for (auto& z : cur) pts.emplace_back(cone->generators() * z, z);
        auto [gens, zs] = detail::prune_antichain(std::move(pts), +1);
        (void)gens;
        cur = std::move(zs);
    }
    if (!have) return Frontier::bottom(cone);

    std::vector<std::pair<RVec, RVec>> pts;
    pts.reserve(cur.size());
    for (auto& z : cur) pts.emplace_back(cone->generators() * z, z);
    return detail::build_proper(cone, Orientation::Inf, std::move(pts), +1);
}

// Weakly minimal members of a finite point set: those on their own frontier.
inline std::vector<RVec> wmin_points(const std::vector<RVec>& points, const ConePtr& cone)
{
    if (points.empty()) return {};
    const Frontier s = infer_from_points(points, cone);
    std::vector<RVec> out;
    for (const auto& p : sorted_unique(points))
        if (classify_point(s, p) == PointClass::OnFrontier) out.push_back(p);
    return out;
}

}  // namespace setopt
