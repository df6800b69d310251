#pragma once

// Seeded pseudo-random generation of cones, points, duals, operators and
// whole instances. All draws go through mt19937_64 with modulo reduction, so
// a seed pins byte-identical output on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "setopt/duality.hpp"

namespace setopt {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }

    // Inclusive bounds.
    long long int_in(long long lo, long long hi)
    {
        return lo + static_cast<long long>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }

    // Rational in [lo, hi] with denominator drawn from 1..max_den.
    Rational rational_in(long long lo, long long hi, long long max_den = 4)
    {
        const long long den = int_in(1, max_den);
        return Rational(int_in(lo * den, hi * den)) / Rational(den);
    }

    // Half-integer coordinate in [lo, hi]; lands on the default oracle grid.
    Rational half_in(long long lo, long long hi)
    {
        return Rational(int_in(2 * lo, 2 * hi)) / 2;
    }

private:
    std::mt19937_64 eng_;
};

inline ConePtr random_cone(Rng& rng, Eigen::Index dim, long long bound = 3)
{
    for (;;) {
        RMat m(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Rational(rng.int_in(-bound, bound));
        if (try_inverse(m)) return make_cone(std::move(m));
    }
}

inline RVec random_point(Rng& rng, Eigen::Index dim, long long lo = -5, long long hi = 5,
                         bool on_half_grid = true)
{
    RVec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        v(i) = on_half_grid ? rng.half_in(lo, hi) : rng.rational_in(lo, hi);
    return v;
}

// A point of -D°: nonnegative combination weights against the rows of D^{-1}.
inline RVec random_neg_polar(Rng& rng, const SimplicialCone& d_cone, long long bound = 3)
{
    RVec w(d_cone.dim());
    for (Eigen::Index i = 0; i < d_cone.dim(); ++i) w(i) = Rational(rng.int_in(0, bound));
    return d_cone.inverse().transpose() * w;
}

// T = sum of c_i v_i^T with c_i in C and v_i in -D°, so T(D) lies in C by
// construction.
inline PositiveOperator random_positive_operator(Rng& rng, const Instance& inst)
{
    RMat t = RMat::Zero(inst.q(), inst.m());
    const long long terms = rng.int_in(1, 2);
    for (long long k = 0; k < terms; ++k) {
        RVec zc(inst.q());
        for (Eigen::Index i = 0; i < inst.q(); ++i) zc(i) = Rational(rng.int_in(0, 2));
        const RVec c_point = inst.ordering_cone()->generators() * zc;
        const RVec v = random_neg_polar(rng, *inst.constraint_cone(), 2);
        t += c_point * v.transpose();
    }
    return PositiveOperator(std::move(t), inst);
}

struct InstanceOptions {
    Eigen::Index q = 2;
    Eigen::Index m = 1;
    int decisions = 3;
    bool ensure_slater = false;   // force a decision with g in -Int D and F nonempty
    bool allow_empty = true;      // allow empty F / G lists (outside the domains)
    long long coord_bound = 5;
    int max_points = 4;
};

inline Instance random_instance(Rng& rng, const InstanceOptions& opt)
{
    const ConePtr cone_c = random_cone(rng, opt.q);
    const ConePtr cone_d = random_cone(rng, opt.m);
    // Sum of generators: interior by construction.
    RVec c = RVec::Zero(opt.q);
    for (Eigen::Index i = 0; i < opt.q; ++i) c += cone_c->generator(i);

    std::vector<Decision> decisions;
    for (int i = 0; i < opt.decisions; ++i) {
        Decision d;
        d.name = "x" + std::to_string(i + 1);
        const int fmin = opt.allow_empty && rng.int_in(0, 9) == 0 ? 0 : 1;
        const int gmin = opt.allow_empty && rng.int_in(0, 9) == 0 ? 0 : 1;
        const long long nf = rng.int_in(fmin, opt.max_points);
        const long long ng = rng.int_in(gmin, opt.max_points);
        for (long long k = 0; k < nf; ++k)
            d.objective_points.push_back(random_point(rng, opt.q, -opt.coord_bound, opt.coord_bound));
        for (long long k = 0; k < ng; ++k)
            d.constraint_points.push_back(random_point(rng, opt.m, -opt.coord_bound, opt.coord_bound));
        decisions.push_back(std::move(d));
    }

    if (opt.ensure_slater) {
        Decision& d = decisions.front();
        if (d.objective_points.empty())
            d.objective_points.push_back(random_point(rng, opt.q, -opt.coord_bound, opt.coord_bound));
        RVec z(opt.m);
        for (Eigen::Index i = 0; i < opt.m; ++i) z(i) = Rational(rng.int_in(1, 3));
        d.constraint_points.push_back(-(cone_d->generators() * z));
    }

    return Instance(cone_c, cone_d, std::move(c), std::move(decisions));
}

// Deterministic instance for the CLI generator; same seed, same bytes.
inline Instance generate_instance(uint64_t seed, Eigen::Index q, Eigen::Index m, int decisions)
{
    Rng rng(seed);
    InstanceOptions opt;
    opt.q = q;
    opt.m = m;
    opt.decisions = decisions;
    opt.allow_empty = true;
    return random_instance(rng, opt);
}

inline std::string instance_to_bytes(const Instance& inst)
{
    return inst.to_json().dump(2) + "\n";
}

}  // namespace setopt
