#pragma once

// Simplicial ordering cones. A cone is given by dim linearly independent
// generator columns M; membership and interior queries reduce to the sign
// pattern of M^{-1} y, so every order query in the library is exact.

#include <memory>
#include <utility>

#include "setopt/rational.hpp"

namespace setopt {

enum class ConeClass { Interior, Boundary, Outside };

class SimplicialCone {
public:
    // Throws InputError unless `generators` is square and invertible.
    explicit SimplicialCone(RMat generators) : gens_(std::move(generators))
    {
        if (gens_.rows() == 0 || gens_.rows() != gens_.cols())
            throw InputError("cone generator matrix must be square and nonempty");
        auto inv = try_inverse(gens_);
        if (!inv) throw InputError("cone generator matrix is singular");
        inv_ = std::move(*inv);
    }

    Eigen::Index dim() const { return gens_.rows(); }
    const RMat& generators() const { return gens_; }
    const RMat& inverse() const { return inv_; }
    RVec generator(Eigen::Index i) const { return gens_.col(i); }

    RVec cone_coords(const RVec& y) const
    {
        if (y.size() != dim()) throw InputError("cone_coords: dimension mismatch");
        return inv_ * y;
    }

    friend bool operator==(const SimplicialCone& a, const SimplicialCone& b)
    {
        return a.gens_.rows() == b.gens_.rows() && a.gens_ == b.gens_;
    }

private:
    RMat gens_;
    RMat inv_;
};

using ConePtr = std::shared_ptr<const SimplicialCone>;

inline ConePtr make_cone(RMat generators)
{
    return std::make_shared<const SimplicialCone>(std::move(generators));
}

// Orthant cone: the componentwise order on Y.
inline ConePtr orthant_cone(Eigen::Index dim)
{
    return make_cone(RMat::Identity(dim, dim));
}

namespace detail {

// Classification of a point already expressed in cone coordinates.
inline ConeClass classify_coords(const RVec& z)
{
    bool boundary = false;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        if (z(i) < 0) return ConeClass::Outside;
        if (z(i) == 0) boundary = true;
    }
    return boundary ? ConeClass::Boundary : ConeClass::Interior;
}

}  // namespace detail

inline ConeClass cone_classify(const SimplicialCone& cone, const RVec& y)
{
    if (y.size() != cone.dim()) throw InputError("cone_classify: dimension mismatch");
    return detail::classify_coords(cone.cone_coords(y));
}

inline ConeClass cone_classify(const ConePtr& cone, const RVec& y)
{
    return cone_classify(*cone, y);
}

// u* lies in -D° iff <u*, d> >= 0 for every generator d of D.
inline bool in_neg_polar(const SimplicialCone& d_cone, const RVec& u_star)
{
    if (u_star.size() != d_cone.dim()) throw InputError("in_neg_polar: dimension mismatch");
    for (Eigen::Index j = 0; j < d_cone.dim(); ++j) {
        if (u_star.dot(d_cone.generator(j)) < 0) return false;
    }
    return true;
}

inline bool in_neg_polar(const ConePtr& d_cone, const RVec& u_star)
{
    return in_neg_polar(*d_cone, u_star);
}

}  // namespace setopt
