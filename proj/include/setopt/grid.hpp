#pragma once

// Brute-force reference for the lattice operations: classify and compare
// upper closures by exhaustive enumeration over a rational grid, working
// from the raw (unpruned) point set and the definitions alone. Cone tests
// stay exact; discretization only limits which points get checked.

#include <vector>

#include "setopt/cone.hpp"
#include "setopt/frontier.hpp"

namespace setopt {

struct Grid {
    RVec lo, hi;
    Rational step;

    Grid(RVec lo_, RVec hi_, Rational step_) : lo(std::move(lo_)), hi(std::move(hi_)), step(step_)
    {
        if (lo.size() != hi.size() || lo.size() == 0) throw InputError("grid: bad box");
        if (step <= 0) throw InputError("grid: step must be positive");
        for (Eigen::Index i = 0; i < lo.size(); ++i) {
            if (!(lo(i) < hi(i))) throw InputError("grid: lo < hi required");
            const Rational k = (hi(i) - lo(i)) / step;
            if (denominator(k) != 1) throw InputError("grid: (hi-lo)/step must be integral");
        }
    }

    Eigen::Index dim() const { return lo.size(); }

    bool contains(const RVec& y) const
    {
        if (y.size() != dim()) return false;
        for (Eigen::Index i = 0; i < dim(); ++i) {
            const Rational k = (y(i) - lo(i)) / step;
            if (denominator(k) != 1) return false;
            if (k < 0 || lo(i) + k * step > hi(i)) return false;
        }
        return true;
    }

    std::vector<RVec> points() const
    {
        std::vector<RVec> out;
        RVec cur = lo;
        for (;;) {
            out.push_back(cur);
            Eigen::Index i = 0;
            for (; i < dim(); ++i) {
                cur(i) += step;
                if (cur(i) <= hi(i)) break;
                cur(i) = lo(i);
            }
            if (i == dim()) break;
        }
        return out;
    }
};

namespace detail {

inline std::vector<RVec> coords_of(const std::vector<RVec>& pts, const SimplicialCone& cone)
{
    std::vector<RVec> zs;
    zs.reserve(pts.size());
    for (const auto& p : pts) zs.push_back(cone.cone_coords(p));
    return zs;
}

inline PointClass classify_raw(const std::vector<RVec>& zpts, const RVec& zy)
{
    bool in_closure = false;
    for (const auto& zp : zpts) {
        if (coords_gt(zy, zp)) return PointClass::Above;
        if (coords_geq(zy, zp)) in_closure = true;
    }
    return in_closure ? PointClass::OnFrontier : PointClass::Below;
}

}  // namespace detail

// Classification of a grid point straight from the definitions: Above iff it
// lies in some point's translated open cone, OnFrontier iff it is in the
// upper closure without a strict dominator, Below otherwise.
inline PointClass grid_classify(const std::vector<RVec>& points, const SimplicialCone& cone,
                                const Grid& grid, const RVec& y)
{
    if (!grid.contains(y)) throw InputError("grid_classify: point off grid");
    return detail::classify_raw(detail::coords_of(points, cone), cone.cone_coords(y));
}

// One-sided order falsifier: true iff every grid point inside the upper
// closure of points2 also lies inside the upper closure of points1.
inline bool grid_leq(const std::vector<RVec>& points1, const std::vector<RVec>& points2,
                     const SimplicialCone& cone, const Grid& grid)
{
    const auto z1 = detail::coords_of(points1, cone);
    const auto z2 = detail::coords_of(points2, cone);
    for (const auto& y : grid.points()) {
        const RVec zy = cone.cone_coords(y);
        if (detail::classify_raw(z2, zy) == PointClass::Below) continue;
        if (detail::classify_raw(z1, zy) == PointClass::Below) return false;
    }
    return true;
}

}  // namespace setopt
