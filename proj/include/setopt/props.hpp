#pragma once

// Seeded property suites over every module: lattice laws, oracle agreement,
// duality laws, and certification fuzzing. Each law generates its own cases
// from a per-law seed, checks an exact predicate, and greedily shrinks the
// first failing case by halving point counts and coordinates before
// reporting the witness. Laws are pure; the runner may fan them out to a
// worker pool and still reports in a fixed order.

#include <functional>
#include <future>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "setopt/convex.hpp"
#include "setopt/gen.hpp"
#include "setopt/grid.hpp"

namespace setopt {

struct LawResult {
    std::string name;
    int trials = 0;
    int violations = 0;
    std::string witness;  // shrunk description of the first violation
};

struct PropsReport {
    uint64_t seed = 0;
    int trials = 0;
    std::vector<LawResult> laws;

    bool ok() const
    {
        for (const auto& l : laws)
            if (l.violations) return false;
        return true;
    }
};

namespace props {

namespace detail {

template <typename Case>
LawResult run_law(const std::string& name, uint64_t seed, int trials,
                  const std::function<Case(Rng&)>& gen,
                  const std::function<std::optional<std::string>(const Case&)>& check,
                  const std::function<std::vector<Case>(const Case&)>& shrink)
{
    // An exception inside a predicate is itself a violation of the law's
    // contract and is reported like any other failure.
    auto safe_check = [&check](const Case& c) -> std::optional<std::string> {
        try {
            return check(c);
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    };
    LawResult res{name, trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Case c = gen(rng);
        auto msg = safe_check(c);
        if (!msg) continue;
        ++res.violations;
        if (!res.witness.empty()) continue;
        std::string why = *msg;
        for (int step = 0; step < 64; ++step) {
            bool advanced = false;
            for (Case& cand : shrink(c)) {
                if (auto m2 = safe_check(cand)) {
                    c = std::move(cand);
                    why = std::move(*m2);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        res.witness = why;
    }
    return res;
}

// Shared case shape for the lattice laws: a cone, a few point sets, a factor.
struct SetsCase {
    ConePtr cone;
    std::vector<std::vector<RVec>> sets;
    Rational alpha = 1;
};

inline std::string describe(const SetsCase& c)
{
    std::string s = "cone " + format_point(RVec(c.cone->generators().reshaped()));
    for (size_t i = 0; i < c.sets.size(); ++i) {
        s += "; set" + std::to_string(i) + " {";
        for (size_t j = 0; j < c.sets[i].size(); ++j) {
            if (j) s += ",";
            s += format_point(c.sets[i][j]);
        }
        s += "}";
    }
    if (c.alpha != 1) s += "; alpha " + to_string(c.alpha);
    return s;
}

inline SetsCase gen_sets(Rng& rng, size_t n_sets, Eigen::Index q, int max_points = 5,
                         bool allow_empty = false)
{
    SetsCase c;
    c.cone = random_cone(rng, q);
    for (size_t i = 0; i < n_sets; ++i) {
        std::vector<RVec> pts;
        const long long n = rng.int_in(allow_empty ? 0 : 1, max_points);
        for (long long k = 0; k < n; ++k) pts.push_back(random_point(rng, q));
        c.sets.push_back(std::move(pts));
    }
    c.alpha = Rational(rng.int_in(1, 8)) / rng.int_in(1, 4);
    return c;
}

// Structural shrinks first (halve point counts, drop sets), then halve
// coordinates while anything is still larger than one in absolute value.
inline std::vector<SetsCase> shrink_sets(const SetsCase& c, size_t min_sets = 1,
                                         int min_points = 1)
{
    std::vector<SetsCase> out;
    for (size_t i = 0; i < c.sets.size(); ++i) {
        if (c.sets[i].size() > static_cast<size_t>(min_points) && c.sets[i].size() > 1) {
            SetsCase one_less = c;
            one_less.sets[i].pop_back();
            out.push_back(std::move(one_less));
            SetsCase halved = c;
            halved.sets[i].resize((c.sets[i].size() + 1) / 2);
            out.push_back(std::move(halved));
        }
    }
    if (c.sets.size() > min_sets) {
        SetsCase fewer = c;
        fewer.sets.pop_back();
        out.push_back(std::move(fewer));
    }
    {
        SetsCase halved = c;
        bool any = false;
        for (auto& set : halved.sets)
            for (auto& p : set)
                for (Eigen::Index i = 0; i < p.size(); ++i)
                    if (p(i) > 1 || p(i) < -1) { p(i) /= 2; any = true; }
        if (any) out.push_back(std::move(halved));
    }
    return out;
}

inline Eigen::Index pick_q(Rng& rng) { return rng.int_in(0, 3) == 0 ? 3 : 2; }

struct InstCase {
    Instance inst;
    std::vector<RVec> duals;
};

inline std::string describe(const InstCase& c)
{
    std::string s = "instance " + c.inst.to_json().dump();
    if (!c.duals.empty()) {
        s += "; duals ";
        for (const auto& u : c.duals) s += format_point(u);
    }
    return s;
}

inline std::vector<InstCase> shrink_inst(const InstCase& c)
{
    std::vector<InstCase> out;
    const auto rebuild = [&](std::vector<Decision> ds) -> std::optional<InstCase> {
        if (ds.empty()) return std::nullopt;
        try {
            return InstCase{Instance(c.inst.ordering_cone(), c.inst.constraint_cone(),
                                     c.inst.scalarization(), std::move(ds)),
                            c.duals};
        } catch (const InputError&) {
            return std::nullopt;
        }
    };
    if (c.inst.decisions().size() > 1) {
        auto ds = c.inst.decisions();
        ds.pop_back();
        if (auto s = rebuild(std::move(ds))) out.push_back(std::move(*s));
    }
    {
        auto ds = c.inst.decisions();
        bool any = false;
        for (auto& d : ds) {
            if (d.objective_points.size() > 1) { d.objective_points.pop_back(); any = true; }
            if (d.constraint_points.size() > 1) { d.constraint_points.pop_back(); any = true; }
        }
        if (any)
            if (auto s = rebuild(std::move(ds))) out.push_back(std::move(*s));
    }
    {
        auto ds = c.inst.decisions();
        bool any = false;
        for (auto& d : ds) {
            for (auto& p : d.objective_points)
                for (Eigen::Index i = 0; i < p.size(); ++i)
                    if (p(i) > 1 || p(i) < -1) { p(i) /= 2; any = true; }
            for (auto& p : d.constraint_points)
                for (Eigen::Index i = 0; i < p.size(); ++i)
                    if (p(i) > 1 || p(i) < -1) { p(i) /= 2; any = true; }
        }
        if (any)
            if (auto s = rebuild(std::move(ds))) out.push_back(std::move(*s));
    }
    if (c.duals.size() > 1) {
        InstCase fewer = c;
        fewer.duals.pop_back();
        out.push_back(std::move(fewer));
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// cone_kernel laws

inline LawResult law_cone_coords(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "cone.coords_exact", seed, trials,
        [](Rng& rng) {
            C c = detail::gen_sets(rng, 1, detail::pick_q(rng), 1);
            return c;
        },
        [](const C& c) -> std::optional<std::string> {
            const RVec z = c.cone->cone_coords(c.sets[0][0]);
            const RVec back = c.cone->generators() * z;
            if (!vec_eq(back, c.sets[0][0]))
                return "coordinate transform not exact: " + detail::describe(c);
            bool pos = true, neg = false;
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                if (z(i) <= 0) pos = false;
                if (z(i) < 0) neg = true;
            }
            const ConeClass cls = cone_classify(c.cone, c.sets[0][0]);
            if (pos && cls != ConeClass::Interior) return "interior misclassified";
            if (neg && cls != ConeClass::Outside) return "outside misclassified";
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c); });
}

inline LawResult law_cone_absorb(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "cone.interior_absorbs", seed, trials,
        [](Rng& rng) {
            C c = detail::gen_sets(rng, 2, detail::pick_q(rng), 1);
            return c;
        },
        [](const C& c) -> std::optional<std::string> {
            // Reinterpret the two sampled points as cone coordinates: one
            // pushed strictly inside, one clamped into the cone.
            RVec zi(c.cone->dim()), zb(c.cone->dim());
            for (Eigen::Index i = 0; i < c.cone->dim(); ++i) {
                const Rational a = c.sets[0][0](i), b = c.sets[1][0](i);
                zi(i) = (a < 0 ? -a : a) + Rational(1, 7);
                zb(i) = b < 0 ? -b : b;
            }
            const RVec sum = c.cone->generators() * RVec(zi + zb);
            if (cone_classify(c.cone, sum) != ConeClass::Interior)
                return "interior + cone left the interior: " + detail::describe(c);
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 2); });
}

inline LawResult law_neg_polar_convex(uint64_t seed, int trials)
{
    LawResult res{"cone.neg_polar_convex", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const ConePtr d = random_cone(rng, rng.int_in(1, 3));
        const RVec u = random_neg_polar(rng, *d);
        const RVec v = random_neg_polar(rng, *d);
        if (!in_neg_polar(d, u) || !in_neg_polar(d, v) || !in_neg_polar(d, RVec(u + v))) {
            ++res.violations;
            if (res.witness.empty())
                res.witness = "-D° not closed under addition: u " + format_point(u) + " v " +
                              format_point(v);
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// lattice laws

// Self-infimality of the canonical form: generators coincide with their own
// weakly minimal elements and re-inferring reproduces them (Inf Inf = Inf).
inline LawResult law_lattice_idempotent(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.idempotence_canonical", seed, trials,
        [](Rng& rng) { return detail::gen_sets(rng, 1, detail::pick_q(rng), 6); },
        [](const C& c) -> std::optional<std::string> {
            const Frontier s = infer_from_points(c.sets[0], c.cone);
            if (!s.is_proper()) return std::nullopt;
            const auto wmin = wmin_points(s.generators(), c.cone);
            if (wmin != s.generators())
                return "generators are not self-infimal (Inf Inf != Inf): " + s.text() +
                       " from " + detail::describe(c);
            if (infer_from_points(s.generators(), c.cone) != s)
                return "re-inferring the generators changed the element: " + s.text();
            const Frontier again = infer_from_points(c.sets[0], c.cone);
            if (!(leq(s, again) && leq(again, s) && s == again))
                return "two-sided order does not match canonical equality";
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c); });
}

inline LawResult law_lattice_sum(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.sum_law", seed, trials,
        [](Rng& rng) { return detail::gen_sets(rng, 2, detail::pick_q(rng)); },
        [](const C& c) -> std::optional<std::string> {
            std::vector<RVec> sums;
            for (const auto& a : c.sets[0])
                for (const auto& b : c.sets[1]) sums.push_back(a + b);
            const Frontier lhs =
                add(infer_from_points(c.sets[0], c.cone), infer_from_points(c.sets[1], c.cone));
            const Frontier rhs = infer_from_points(sums, c.cone);
            if (lhs != rhs)
                return "Inf(Inf A + Inf B) != Inf(A+B): " + lhs.text() + " vs " + rhs.text() +
                       " on " + detail::describe(c);
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 2); });
}

inline LawResult law_lattice_scale(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.scale_law", seed, trials,
        [](Rng& rng) { return detail::gen_sets(rng, 1, detail::pick_q(rng)); },
        [](const C& c) -> std::optional<std::string> {
            std::vector<RVec> scaled;
            for (const auto& p : c.sets[0]) scaled.push_back(c.alpha * p);
            const Frontier lhs = scale(infer_from_points(c.sets[0], c.cone), c.alpha);
            const Frontier rhs = infer_from_points(scaled, c.cone);
            if (lhs != rhs)
                return "alpha Inf A != Inf(alpha A) on " + detail::describe(c);
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c); });
}

inline LawResult law_lattice_family_inf(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.family_inf", seed, trials,
        [](Rng& rng) {
            return detail::gen_sets(rng, 1 + static_cast<size_t>(rng.int_in(1, 4)),
                                    detail::pick_q(rng), 4, true);
        },
        [](const C& c) -> std::optional<std::string> {
            std::vector<Frontier> members;
            std::vector<RVec> all;
            for (const auto& set : c.sets) {
                members.push_back(infer_from_points(set, c.cone));
                all.insert(all.end(), set.begin(), set.end());
            }
            if (inf_family(members) != infer_from_points(all, c.cone))
                return "Inf of union != inf of member infima on " + detail::describe(c);
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 1, 0); });
}

// Family sums, inf side exact and sup side one-sided.
inline LawResult law_lattice_family_sum(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.family_sum_inf", seed, trials,
        [](Rng& rng) {
            const size_t na = static_cast<size_t>(rng.int_in(1, 3));
            const size_t nb = static_cast<size_t>(rng.int_in(1, 3));
            C c = detail::gen_sets(rng, na + nb, detail::pick_q(rng), 3);
            c.alpha = Rational(static_cast<long long>(na));  // split marker
            return c;
        },
        [](const C& c) -> std::optional<std::string> {
            const size_t na = static_cast<size_t>(numerator(c.alpha).convert_to<long long>());
            if (na == 0 || na >= c.sets.size()) return std::nullopt;  // shrunk past the split
            std::vector<Frontier> a_members, b_members, sum_members;
            for (size_t i = 0; i < c.sets.size(); ++i)
                (i < na ? a_members : b_members).push_back(infer_from_points(c.sets[i], c.cone));
            for (size_t i = 0; i < na; ++i) {
                for (size_t j = na; j < c.sets.size(); ++j) {
                    std::vector<RVec> sums;
                    for (const auto& a : c.sets[i])
                        for (const auto& b : c.sets[j]) sums.push_back(a + b);
                    sum_members.push_back(infer_from_points(sums, c.cone));
                }
            }
            const Frontier inf_a = inf_family(a_members);
            const Frontier inf_b = inf_family(b_members);
            if (inf_family(sum_members) != add(inf_a, inf_b))
                return "inf of pairwise sums != sum of infima on " + detail::describe(c);
            // Sup side of the same proposition: only the inequality holds.
            std::vector<Frontier> lattice_sums;
            for (const auto& fa : a_members)
                for (const auto& fb : b_members) lattice_sums.push_back(add(fa, fb));
            if (!leq(sup_family(lattice_sums), add(sup_family(a_members), sup_family(b_members))))
                return "sup of pairwise lattice sums exceeds the sum of sups on " +
                       detail::describe(c);
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 2); });
}

inline LawResult law_lattice_order(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.order_axioms", seed, trials,
        [](Rng& rng) { return detail::gen_sets(rng, 3, detail::pick_q(rng), 4); },
        [](const C& c) -> std::optional<std::string> {
            // Build a chain by unions so transitivity has teeth.
            std::vector<RVec> p1 = c.sets[0], p2 = p1, p3;
            p2.insert(p2.end(), c.sets[1].begin(), c.sets[1].end());
            p3 = p2;
            p3.insert(p3.end(), c.sets[2].begin(), c.sets[2].end());
            const Frontier s3 = infer_from_points(p1, c.cone);   // fewest points: largest
            const Frontier s2 = infer_from_points(p2, c.cone);
            const Frontier s1 = infer_from_points(p3, c.cone);   // most points: smallest
            if (!leq(s1, s2) || !leq(s2, s3) || !leq(s1, s3))
                return "union chain is not monotone on " + detail::describe(c);
            for (const Frontier* s : {&s1, &s2, &s3}) {
                if (!leq(*s, *s)) return "reflexivity failed";
                if (!leq(Frontier::bottom(c.cone), *s)) return "bottom is not least";
                if (!leq(*s, Frontier::top(c.cone))) return "top is not greatest";
            }
            if (leq(s2, s1) && s1 != s2) return "antisymmetry failed (s1,s2)";
            if (leq(s3, s2) && s2 != s3) return "antisymmetry failed (s2,s3)";
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 3); });
}

// Greatest lower bound / least upper bound behavior on random families.
inline LawResult law_lattice_glb_lub(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.glb_lub", seed, trials,
        [](Rng& rng) {
            return detail::gen_sets(rng, 2 + static_cast<size_t>(rng.int_in(0, 3)),
                                    detail::pick_q(rng), 3, true);
        },
        [](const C& c) -> std::optional<std::string> {
            std::vector<Frontier> members;
            for (const auto& set : c.sets) members.push_back(infer_from_points(set, c.cone));
            const Frontier lo = inf_family(members);
            const Frontier hi = sup_family(members);
            // Families combine order-insensitively.
            std::vector<Frontier> reversed(members.rbegin(), members.rend());
            if (inf_family(reversed) != lo || sup_family(reversed) != hi)
                return "family operations are order-sensitive on " + detail::describe(c);
            for (const auto& m : members) {
                if (!leq(lo, m)) return "inf_family is not a lower bound on " + detail::describe(c);
                if (!leq(m, hi)) return "sup_family is not an upper bound on " + detail::describe(c);
            }
            // Candidate bounds from the family's closure under inf/sup.
            std::vector<Frontier> pool = members;
            pool.push_back(lo);
            pool.push_back(hi);
            for (size_t i = 0; i + 1 < members.size(); ++i) {
                pool.push_back(inf_family({members[i], members[i + 1]}));
                pool.push_back(sup_family({members[i], members[i + 1]}));
            }
            for (const auto& cand : pool) {
                bool lower = true, upper = true;
                for (const auto& m : members) {
                    if (!leq(cand, m)) lower = false;
                    if (!leq(m, cand)) upper = false;
                }
                if (lower && !leq(cand, lo))
                    return "a lower bound escapes inf_family on " + detail::describe(c);
                if (upper && !leq(hi, cand))
                    return "an upper bound escapes sup_family on " + detail::describe(c);
            }
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 2, 0); });
}

// Order characterization at generator level plus the grid falsifier
// ((A - Int C) meets B iff some generator of B classifies Below).
inline LawResult law_lattice_strict_order(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.strict_order_grid", seed, trials,
        [](Rng& rng) { return detail::gen_sets(rng, 2, 2, 4); },
        [](const C& c) -> std::optional<std::string> {
            const Frontier s1 = infer_from_points(c.sets[0], c.cone);
            const Frontier s2 = infer_from_points(c.sets[1], c.cone);
            const bool ord = leq(s1, s2);
            bool no_gen_below = true;
            for (const auto& b : s2.generators())
                if (classify_point(s1, b) == PointClass::Below) no_gen_below = false;
            if (ord != no_gen_below)
                return "order vs Below-classification mismatch on " + detail::describe(c);
            const Grid g(RVec::Constant(2, Rational(-8)), RVec::Constant(2, Rational(8)),
                         Rational(1) / 2);
            if (ord && !grid_leq(c.sets[0], c.sets[1], *c.cone, g))
                return "grid oracle contradicts leq on " + detail::describe(c);
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 2); });
}

inline LawResult law_lattice_mirror(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.mirror_duality", seed, trials,
        [](Rng& rng) { return detail::gen_sets(rng, 1, detail::pick_q(rng)); },
        [](const C& c) -> std::optional<std::string> {
            std::vector<RVec> neg;
            for (const auto& p : c.sets[0]) neg.push_back(-p);
            const Frontier sup = sup_from_points(c.sets[0], c.cone);
            const Frontier inf = infer_from_points(neg, c.cone);
            std::vector<RVec> mirrored;
            for (const auto& g : inf.generators()) mirrored.push_back(-g);
            if (sup.generators() != sorted_unique(mirrored))
                return "sup is not the negation mirror of inf on " + detail::describe(c);
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c); });
}

// Partition of the plane (frontier / above / below) and agreement of
// sup_family with the intersection of upper closures, sampled on the grid.
inline LawResult law_lattice_partition(uint64_t seed, int trials)
{
    using C = detail::SetsCase;
    return detail::run_law<C>(
        "lattice.partition_sup_grid", seed, trials,
        [](Rng& rng) { return detail::gen_sets(rng, 2, 2, 4); },
        [](const C& c) -> std::optional<std::string> {
            const Frontier a = infer_from_points(c.sets[0], c.cone);
            const Frontier b = infer_from_points(c.sets[1], c.cone);
            const Frontier sup = sup_family({a, b});
            const Grid g(RVec::Constant(2, Rational(-8)), RVec::Constant(2, Rational(8)),
                         Rational(1) / 2);
            for (const auto& y : g.points()) {
                const PointClass ca = classify_point(a, y);
                const bool in_a = ca != PointClass::Below;
                const bool in_b = classify_point(b, y) != PointClass::Below;
                const bool in_sup = sup.is_proper() && classify_point(sup, y) != PointClass::Below;
                if (in_sup != (in_a && in_b))
                    return "sup closure differs from the closure intersection at " +
                           format_point(y) + " on " + detail::describe(c);
            }
            return std::nullopt;
        },
        [](const C& c) { return detail::shrink_sets(c, 2); });
}

// ---------------------------------------------------------------------------
// grid oracle agreement (classification + order consistency)

inline LawResult law_oracle_agreement(uint64_t seed, int cases_q2, int cases_q3)
{
    LawResult res{"oracle.classify_agreement", cases_q2 + cases_q3, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < cases_q2 + cases_q3; ++t) {
        const Eigen::Index q = t < cases_q2 ? 2 : 3;
        const ConePtr cone = random_cone(rng, q);
        std::vector<RVec> pts;
        for (long long i = 0, n = rng.int_in(1, 6); i < n; ++i)
            pts.push_back(random_point(rng, q));
        const Frontier s = infer_from_points(pts, cone);
        const Grid g(RVec::Constant(q, Rational(-5)), RVec::Constant(q, Rational(5)),
                     Rational(1) / 2);
        for (const auto& y : g.points()) {
            if (grid_classify(pts, *cone, g, y) != classify_point(s, y)) {
                ++res.violations;
                if (res.witness.empty())
                    res.witness = "classification mismatch at " + format_point(y) + " for " +
                                  s.text();
                break;
            }
        }
    }
    return res;
}

inline LawResult law_oracle_leq(uint64_t seed, int trials)
{
    LawResult res{"oracle.leq_consistency", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const Eigen::Index q = t % 5 == 4 ? 3 : 2;
        const ConePtr cone = random_cone(rng, q);
        std::vector<RVec> a, b;
        for (long long i = 0, n = rng.int_in(1, 5); i < n; ++i) a.push_back(random_point(rng, q));
        for (long long i = 0, n = rng.int_in(1, 5); i < n; ++i) b.push_back(random_point(rng, q));
        const bool exact = leq(infer_from_points(a, cone), infer_from_points(b, cone));
        const Grid g(RVec::Constant(q, Rational(-5)), RVec::Constant(q, Rational(5)),
                     Rational(1) / 2);
        const bool sampled = grid_leq(a, b, *cone, g);
        if (exact && !sampled) {
            ++res.violations;
            if (res.witness.empty()) res.witness = "grid_leq contradicts an exact leq";
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// LP against exhaustive vertex/ray enumeration. Valid for pointed feasible
// sets; the generated systems always carry lower bounds.

namespace detail {

inline std::optional<RVec> kernel_vector(const RMat& rows)
{
    const Eigen::Index n = rows.cols();
    for (Eigen::Index k = 0; k < n; ++k) {
        RMat m(n, n);
        m.topRows(n - 1) = rows;
        m.row(n - 1) = RVec::Zero(n).transpose();
        m(n - 1, k) = 1;
        RVec rhs = RVec::Zero(n);
        rhs(n - 1) = 1;
        if (auto r = solve_square(m, rhs)) return r;
    }
    return std::nullopt;
}

inline bool satisfies(const RMat& a, const RVec& b, const RVec& x)
{
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (a.row(i).dot(x) > b(i)) return false;
    return true;
}

inline LpOutcome enumerate_lp(const RMat& a, const RVec& b, const RVec& obj)
{
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();

    std::vector<RVec> vertices;
    std::vector<Eigen::Index> pick(static_cast<size_t>(n));
    auto choose_vertices = [&](auto&& self, Eigen::Index start, Eigen::Index depth) -> void {
        if (depth == n) {
            RMat sub(n, n);
            RVec rhs(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                sub.row(i) = a.row(pick[static_cast<size_t>(i)]);
                rhs(i) = b(pick[static_cast<size_t>(i)]);
            }
            if (auto x = solve_square(sub, rhs); x && satisfies(a, b, *x))
                vertices.push_back(*x);
            return;
        }
        for (Eigen::Index i = start; i < m; ++i) {
            pick[static_cast<size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    choose_vertices(choose_vertices, 0, 0);

    if (vertices.empty()) return {LpStatus::Infeasible, {}, {}};

    bool unbounded = false;
    auto check_ray = [&](const RVec& dir) {
        bool recession = true;
        for (Eigen::Index i = 0; i < m; ++i)
            if (a.row(i).dot(dir) > 0) { recession = false; break; }
        if (recession && obj.dot(dir) > 0) unbounded = true;
    };
    if (n >= 2) {
        std::vector<Eigen::Index> rpick(static_cast<size_t>(n - 1));
        auto choose_rays = [&](auto&& self, Eigen::Index start, Eigen::Index depth) -> void {
            if (unbounded) return;
            if (depth == n - 1) {
                RMat sub(n - 1, n);
                for (Eigen::Index i = 0; i < n - 1; ++i)
                    sub.row(i) = a.row(rpick[static_cast<size_t>(i)]);
                if (auto r = kernel_vector(sub)) {
                    check_ray(*r);
                    check_ray(RVec(-*r));
                }
                return;
            }
            for (Eigen::Index i = start; i < m; ++i) {
                rpick[static_cast<size_t>(depth)] = i;
                self(self, i + 1, depth + 1);
            }
        };
        choose_rays(choose_rays, 0, 0);
    } else {
        check_ray(make_vec({1}));
        check_ray(make_vec({-1}));
    }
    if (unbounded) return {LpStatus::Unbounded, {}, {}};

    LpOutcome best{LpStatus::Optimal, vertices.front(), obj.dot(vertices.front())};
    for (const auto& v : vertices) {
        const Rational val = obj.dot(v);
        if (val > best.value) {
            best.value = val;
            best.point = v;
        }
    }
    return best;
}

}  // namespace detail

inline LawResult law_lp_oracle(uint64_t seed, int trials)
{
    LawResult res{"lp.vertex_enumeration_agreement", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const Eigen::Index n = rng.int_in(1, 4);
        const Eigen::Index extra = rng.int_in(1, 4);
        RMat a(n + extra, n);
        RVec b(n + extra);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) a(i, j) = i == j ? Rational(-1) : Rational(0);
            b(i) = Rational(10);
        }
        for (Eigen::Index i = 0; i < extra; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) a(n + i, j) = Rational(rng.int_in(-3, 3));
            b(n + i) = Rational(rng.int_in(-4, 6));
        }
        RVec obj(n);
        for (Eigen::Index j = 0; j < n; ++j) obj(j) = Rational(rng.int_in(-3, 3));

        const LpOutcome got = lp_solve(a, b, obj, LpSense::Maximize);
        const LpOutcome want = detail::enumerate_lp(a, b, obj);
        const bool ok = got.status == want.status &&
                        (got.status != LpStatus::Optimal ||
                         (got.value == want.value && detail::satisfies(a, b, got.point) &&
                          obj.dot(got.point) == got.value));
        if (!ok) {
            ++res.violations;
            if (res.witness.empty())
                res.witness = "simplex disagrees with enumeration on a " + std::to_string(n) +
                              "-variable system";
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// problem model laws

inline LawResult law_model_origin(uint64_t seed, int trials)
{
    using C = detail::InstCase;
    return detail::run_law<C>(
        "model.perturbation_origin", seed, trials,
        [](Rng& rng) {
            InstanceOptions opt;
            opt.q = detail::pick_q(rng);
            opt.m = rng.int_in(1, 2);
            opt.decisions = static_cast<int>(rng.int_in(1, 4));
            return C{random_instance(rng, opt), {}};
        },
        [](const C& c) -> std::optional<std::string> {
            if (perturbation_value(c.inst, RVec::Zero(c.inst.m())) != primal_value(c.inst))
                return "W(0) differs from the primal value on " + detail::describe(c);
            if (slater_check(c.inst) && feasible_set(c.inst).empty())
                return "Slater holds on an infeasible instance: " + detail::describe(c);
            return std::nullopt;
        },
        detail::shrink_inst);
}

inline LawResult law_model_monotone(uint64_t seed, int trials)
{
    LawResult res{"model.relaxation_monotone", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.m = rng.int_in(1, 2);
        const Instance inst = random_instance(rng, opt);
        const RVec u = random_point(rng, inst.m(), -2, 2);
        RVec z(inst.m());
        for (Eigen::Index i = 0; i < inst.m(); ++i) z(i) = Rational(rng.int_in(0, 2));
        const RVec relaxed_u = u - inst.constraint_cone()->generators() * z;
        if (!leq(perturbation_value(inst, relaxed_u), perturbation_value(inst, u))) {
            ++res.violations;
            if (res.witness.empty())
                res.witness = "inf over the larger feasible set is not lower at u=" +
                              format_point(u);
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// duality laws

inline LawResult law_duality_decomposition(uint64_t seed, int trials)
{
    using C = detail::InstCase;
    return detail::run_law<C>(
        "duality.objective_decomposition", seed, trials,
        [](Rng& rng) {
            InstanceOptions opt;
            opt.q = detail::pick_q(rng);
            opt.m = rng.int_in(1, 2);
            opt.decisions = static_cast<int>(rng.int_in(1, 4));
            C c{random_instance(rng, opt), {}};
            c.duals.push_back(random_point(rng, c.inst.m(), -3, 3));
            return c;
        },
        [](const C& c) -> std::optional<std::string> {
            const RVec& u = c.duals[0];
            const Frontier phi = dual_objective(c.inst, u);
            if (in_neg_polar(c.inst.constraint_cone(), u)) {
                if (phi != dual_objective_raw(c.inst, u))
                    return "phi differs from its raw form on -D°: " + detail::describe(c);
            } else {
                bool any_pair = false;
                for (const auto& d : c.inst.decisions())
                    if (!d.objective_points.empty() && !d.constraint_points.empty())
                        any_pair = true;
                if (any_pair && !phi.is_bottom())
                    return "phi is not bottom off -D°: " + detail::describe(c);
            }
            return std::nullopt;
        },
        detail::shrink_inst);
}

inline LawResult law_duality_weak(uint64_t seed, int instances, int duals_per)
{
    using C = detail::InstCase;
    return detail::run_law<C>(
        "duality.weak", seed, instances,
        [duals_per](Rng& rng) {
            InstanceOptions opt;
            opt.q = detail::pick_q(rng);
            opt.m = rng.int_in(1, 2);
            opt.decisions = static_cast<int>(rng.int_in(1, 5));
            C c{random_instance(rng, opt), {}};
            for (int k = 0; k < duals_per; ++k)
                c.duals.push_back(random_point(rng, c.inst.m(), -3, 3));
            return c;
        },
        [](const C& c) -> std::optional<std::string> {
            if (!leq(dual_value(c.inst, c.duals), primal_value(c.inst)))
                return "weak duality violated on " + detail::describe(c);
            return std::nullopt;
        },
        detail::shrink_inst);
}

inline LawResult law_duality_chain(uint64_t seed, int trials)
{
    LawResult res{"duality.operator_chain", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.q = detail::pick_q(rng);
        opt.m = rng.int_in(1, 2);
        const Instance inst = random_instance(rng, opt);
        std::vector<RVec> duals;
        for (int k = 0; k < 5; ++k) duals.push_back(random_point(rng, inst.m(), -3, 3));
        std::vector<PositiveOperator> extra;
        for (int k = 0; k < 5; ++k) extra.push_back(random_positive_operator(rng, inst));
        try {
            const DualityReport rep = gap_report(inst, duals, extra);
            if (!leq(rep.dual_finite, rep.operator_dual) || !leq(rep.operator_dual, rep.primal))
                throw VerificationError("chain order");
        } catch (const VerificationError& e) {
            ++res.violations;
            if (res.witness.empty()) res.witness = e.what();
        }
    }
    return res;
}

// Prop 2.5 / 2.8 behavior of the sup over all duals, including the caveat
// fixture where convexity of G(x)+D fails.
inline LawResult law_duality_sup_lagrangian(uint64_t seed, int trials)
{
    LawResult res{"duality.sup_lagrangian", trials, 0, ""};
    Rng rng(seed);

    // Fixture: infeasible decision with conv G meeting -D yields a finite sup.
    {
        Decision x0{"x0", {make_vec({0, 0})}, {make_vec({2, -2}), make_vec({-2, 2})}};
        const Instance caveat(orthant_cone(2), orthant_cone(2), make_vec({1, 1}), {x0});
        const Frontier sup = sup_lagrangian_over_duals(caveat, "x0");
        if (feasible_set(caveat).empty() &&
            (!sup.is_proper() || sup.text() != "SUP {(0,0)}")) {
            ++res.violations;
            res.witness = "caveat fixture did not reproduce the finite sup at an infeasible "
                          "decision";
        }
    }

    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.m = rng.int_in(1, 2);
        opt.decisions = static_cast<int>(rng.int_in(1, 3));
        const Instance inst = random_instance(rng, opt);
        const auto feas = feasible_set(inst);
        for (const auto& d : inst.decisions()) {
            const Frontier sup = sup_lagrangian_over_duals(inst, d.name);
            const bool feasible =
                std::find(feas.begin(), feas.end(), d.name) != feas.end();
            if (feasible) {
                // Prop 2.5: Sup over all duals recovers F(x) on the feasible
                // set; an empty objective list encodes F(x) = {+infinity}.
                const Frontier expect =
                    d.objective_points.empty()
                        ? Frontier::top(inst.ordering_cone(), Orientation::Sup)
                        : sup_from_points(d.objective_points, inst.ordering_cone());
                if (sup != expect) {
                    ++res.violations;
                    if (res.witness.empty())
                        res.witness = "sup over duals differs from Sup F(x) at feasible " + d.name;
                }
            } else if (!d.constraint_points.empty() && !d.objective_points.empty()) {
                // Outside S the sup is +infinity exactly when conv G misses -D.
                if (!sup.is_top()) {
                    if (sup != sup_from_points(d.objective_points, inst.ordering_cone())) {
                        ++res.violations;
                        if (res.witness.empty())
                            res.witness = "finite sup with wrong value at " + d.name;
                    }
                    // Dual-grid brute force: a finite sup means the inner
                    // scalar supremum is 0, so no grid dual beats it.
                    const Grid ug(RVec::Constant(inst.m(), Rational(-3)),
                                  RVec::Constant(inst.m(), Rational(3)), Rational(1) / 2);
                    for (const auto& u : ug.points()) {
                        if (!in_neg_polar(inst.constraint_cone(), u)) continue;
                        Rational t = u.dot(d.constraint_points.front());
                        for (const auto& g : d.constraint_points)
                            t = std::min(t, Rational(u.dot(g)));
                        if (t > 0) {
                            ++res.violations;
                            if (res.witness.empty())
                                res.witness = "grid dual beats a supposedly attained sup at " +
                                              d.name;
                            break;
                        }
                    }
                }
            }
        }
    }
    return res;
}

// Lemma 3.3 consistency plus the one-sided discretized subgradient oracle.
inline LawResult law_duality_subgradient(uint64_t seed, int trials)
{
    LawResult res{"duality.subgradient_oracle", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.m = 1;  // keeps the u-grid small
        opt.decisions = static_cast<int>(rng.int_in(1, 3));
        opt.ensure_slater = rng.int_in(0, 1) == 0;
        const Instance inst = random_instance(rng, opt);
        const Frontier primal = primal_value(inst);
        if (!primal.is_proper()) continue;

        std::vector<RVec> candidates;
        for (int k = 0; k <= 8; ++k) candidates.push_back(make_vec({Rational(k) / 2}));
        for (const auto& u : certificate_duals(inst)) candidates.push_back(u);

        const Grid ugrid(RVec::Constant(1, Rational(-2)), RVec::Constant(1, Rational(2)),
                         Rational(1) / 2);
        for (const auto& y : primal.generators()) {
            for (const auto& u : candidates) {
                if (!in_neg_polar(inst.constraint_cone(), u)) continue;
                const bool sg = subgradient_check(inst, u, y);
                const Frontier phi = dual_objective(inst, u);
                const bool via_phi =
                    phi.is_proper() && classify_point(phi, y) == PointClass::OnFrontier;
                if (sg != via_phi) {
                    ++res.violations;
                    if (res.witness.empty()) res.witness = "Lemma 3.3 route mismatch";
                    continue;
                }
                if (!sg) continue;
                // Discretized perturbation-map evaluation: Inf over sampled u
                // of W(u) - <u*,u> c must never put y strictly above.
                std::vector<RVec> shifted;
                for (const auto& up : ugrid.points()) {
                    const Frontier w = perturbation_value(inst, up);
                    if (!w.is_proper()) continue;
                    const Rational shift = u.dot(up);
                    for (const auto& g : w.generators())
                        shifted.push_back(g - shift * inst.scalarization());
                }
                if (shifted.empty()) continue;
                const Frontier discrete = infer_from_points(shifted, inst.ordering_cone());
                if (classify_point(discrete, y) == PointClass::Above) {
                    ++res.violations;
                    if (res.witness.empty())
                        res.witness = "discretized subgradient oracle contradicts Lemma 3.3 at " +
                                      format_point(y);
                }
            }
        }
    }
    return res;
}

namespace detail {

struct StaircaseFace {
    RVec a, b;      // segment endpoints in cone coordinates (a == b for rays)
    int ray = 0;    // 0 segment, +1 vertical top ray at a, +2 horizontal right ray at a
};

inline std::vector<StaircaseFace> staircase_faces(const Frontier& s)
{
    std::vector<std::pair<RVec, RVec>> pts;  // (z, y)
    for (size_t i = 0; i < s.generators().size(); ++i)
        pts.emplace_back(s.generator_coords()[i], s.generators()[i]);
    std::sort(pts.begin(), pts.end(),
              [](const auto& x, const auto& y) { return x.first(0) < y.first(0); });
    std::vector<StaircaseFace> faces;
    faces.push_back({pts.front().first, pts.front().first, +1});
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const RVec corner = pts[i].first.cwiseMax(pts[i + 1].first);
        faces.push_back({pts[i].first, corner, 0});
        faces.push_back({corner, pts[i + 1].first, 0});
    }
    faces.push_back({pts.back().first, pts.back().first, +2});
    return faces;
}

}  // namespace detail

// Stability => strong duality, in the provable face-witness form: when every
// face of the primal staircase lies on the frontier of some candidate's dual
// objective, the finite dual value equals the primal value exactly. Also
// pins the contrapositive gap fixture.
inline LawResult law_duality_stability(uint64_t seed, int trials)
{
    LawResult res{"duality.stability_strong", trials, 0, ""};

    {  // Contrapositive fixture: unstable and strictly below.
        Decision x1{"x1", {make_vec({0, 0})}, {make_vec({1})}};
        Decision x2{"x2", {make_vec({2, 2})}, {make_vec({-1})}};
        const Instance gap(orthant_cone(2), orthant_cone(1), make_vec({1, 1}), {x1, x2});
        std::vector<RVec> cands;
        for (int k = 0; k <= 4; ++k) cands.push_back(make_vec({Rational(k) / 2}));
        const StabilityResult st = stability_check(gap, {make_vec({2, 2})}, cands);
        const DualityReport rep = gap_report(gap, cands);
        if (st.stable || rep.relation != GapRelation::StrictlyBelow) {
            ++res.violations;
            res.witness = "gap fixture is not unstable-with-gap";
        }
    }

    Rng rng(seed);
    int hypothesis_hits = 0;
    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.m = 1;
        opt.decisions = static_cast<int>(rng.int_in(1, 3));
        opt.ensure_slater = true;
        opt.allow_empty = false;
        const Instance inst = t == 0 ? Instance(orthant_cone(2), orthant_cone(1),
                                                make_vec({1, 1}),
                                                {Decision{"x2", {make_vec({2, 2})},
                                                          {make_vec({-1})}}})
                                     : random_instance(rng, opt);
        const Frontier primal = primal_value(inst);
        if (!primal.is_proper()) continue;

        std::vector<RVec> candidates;
        for (int k = 0; k <= 8; ++k) candidates.push_back(make_vec({Rational(k) / 2}));
        for (const auto& u : certificate_duals(inst)) candidates.push_back(u);

        const Rational min_z1 = [&] {
            Rational v = primal.generator_coords()[0](0);
            for (const auto& z : primal.generator_coords()) v = std::min(v, Rational(z(0)));
            return v;
        }();
        const Rational min_z2 = [&] {
            Rational v = primal.generator_coords()[0](1);
            for (const auto& z : primal.generator_coords()) v = std::min(v, Rational(z(1)));
            return v;
        }();

        auto witnessed = [&](const detail::StaircaseFace& face) -> std::optional<RVec> {
            for (const auto& u : candidates) {
                if (!in_neg_polar(inst.constraint_cone(), u)) continue;
                const Frontier phi = dual_objective(inst, u);
                if (!phi.is_proper()) continue;
                const RVec pa = inst.ordering_cone()->generators() * face.a;
                const RVec pb = inst.ordering_cone()->generators() * face.b;
                if (classify_point(phi, pa) != PointClass::OnFrontier) continue;
                if (face.ray == 0) {
                    if (classify_point(phi, pb) != PointClass::OnFrontier) continue;
                    return u;
                }
                Rational ext = phi.generator_coords()[0](face.ray == 1 ? 0 : 1);
                for (const auto& z : phi.generator_coords())
                    ext = std::min(ext, Rational(z(face.ray == 1 ? 0 : 1)));
                if (face.ray == 1 && ext == min_z1) return u;
                if (face.ray == 2 && ext == min_z2) return u;
            }
            return std::nullopt;
        };

        std::vector<RVec> witnesses;
        bool all = true;
        for (const auto& face : detail::staircase_faces(primal)) {
            auto w = witnessed(face);
            if (!w) { all = false; break; }
            witnesses.push_back(*w);
        }
        if (!all) continue;
        ++hypothesis_hits;
        const DualityReport rep = gap_report(inst, witnesses);
        if (rep.relation != GapRelation::Equal) {
            ++res.violations;
            if (res.witness.empty())
                res.witness = "face-witnessed stability without strong duality on " +
                              primal.text();
        }
    }
    if (hypothesis_hits == 0) {
        ++res.violations;
        if (res.witness.empty()) res.witness = "stability hypothesis never satisfied";
    }
    return res;
}

// ---------------------------------------------------------------------------
// convex regime laws

inline LawResult law_convex_relaxation(uint64_t seed, int trials)
{
    LawResult res{"convex.relaxation_bound", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.allow_empty = false;
        opt.decisions = static_cast<int>(rng.int_in(1, 4));
        opt.max_points = 3;
        const Instance inst = random_instance(rng, opt);
        const ConvexFrontier relaxed = primal_value_conv(convexify(inst));
        if (!leq(relaxed, primal_value(inst))) {
            ++res.violations;
            if (res.witness.empty())
                res.witness = "relaxation is not below the primal: " + relaxed.text();
        }
    }
    return res;
}

inline LawResult law_convex_certify(uint64_t seed, int trials)
{
    LawResult res{"convex.certify", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.allow_empty = false;
        opt.ensure_slater = true;
        opt.decisions = static_cast<int>(rng.int_in(1, 4));
        opt.max_points = 3;
        opt.m = rng.int_in(1, 2);
        const Instance inst = random_instance(rng, opt);
        const auto cv = convexify(inst);
        try {
            const Certificate cert = certify_strong_duality(cv);
            if (cert.verdict != CertificateVerdict::Certified) {
                ++res.violations;
                if (res.witness.empty())
                    res.witness = "certification failed (" + cert.reason + ") under Slater on " +
                                  detail::describe(detail::InstCase{inst, {}});
                continue;
            }
            if (dual_value_conv(cv, cert.duals) != cert.primal_conv || !cert.operator_chain) {
                ++res.violations;
                if (res.witness.empty()) res.witness = "certificate is not sound";
                continue;
            }
            for (const auto& u : cert.duals)
                if (!in_neg_polar(inst.constraint_cone(), u)) {
                    ++res.violations;
                    if (res.witness.empty()) res.witness = "synthesized dual escapes -D°";
                }
            // Subgradient relation at the supported frontier points.
            for (const auto& facet : facets(cert.primal_conv, inst.scalarization())) {
                const ScalarizationNormal sn(RVec(-facet.normal), inst);
                const SynthesizedDual syn = synthesize_dual(cv, sn);
                const ConvexFrontier phi = conv_dual_objective(cv, syn.u_star);
                for (const auto& v : facet.touching)
                    if (classify_point(phi, v) != PointClass::OnFrontier) {
                        ++res.violations;
                        if (res.witness.empty())
                            res.witness = "supported vertex misses the dual frontier at " +
                                          format_point(v);
                    }
            }
        } catch (const VerificationError& e) {
            ++res.violations;
            if (res.witness.empty()) res.witness = e.what();
        }
    }
    return res;
}

inline LawResult law_convex_scalarization(uint64_t seed, int trials)
{
    LawResult res{"convex.scalarization_support", trials, 0, ""};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        InstanceOptions opt;
        opt.allow_empty = false;
        opt.ensure_slater = true;
        opt.max_points = 3;
        const Instance inst = random_instance(rng, opt);
        const auto cv = convexify(inst);
        const ConvexFrontier primal = primal_value_conv(cv);
        if (!primal.is_proper()) continue;
        for (const auto& facet : facets(primal, inst.scalarization())) {
            const ScalarizationNormal sn(RVec(-facet.normal), inst);
            const SynthesizedDual syn = synthesize_dual(cv, sn);
            // The LP optimum must equal both the facet support value and the
            // minimum of the shifted vertex values.
            Rational min_shift = syn.lp_value;
            bool first = true;
            for (const auto& [f, g] : cv.vertices) {
                const Rational v = facet.normal.dot(f) + syn.u_star.dot(g);
                if (first || v < min_shift) min_shift = v;
                first = false;
            }
            if (syn.lp_value != facet.support || min_shift != syn.lp_value) {
                ++res.violations;
                if (res.witness.empty())
                    res.witness = "scalar support mismatch at facet " + format_point(facet.normal);
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// suite runner

struct NamedLaw {
    std::string name;
    std::function<LawResult()> run;
};

inline std::vector<NamedLaw> all_laws(uint64_t seed, int trials)
{
    const int grid_trials = std::max(1, trials / 5);
    const int convex_trials = std::max(1, trials / 2);
    std::vector<NamedLaw> laws;
    auto add = [&](std::string name, std::function<LawResult()> f) {
        laws.push_back({std::move(name), std::move(f)});
    };

    add("cone.coords_exact", [=] { return law_cone_coords(seed + 1, trials); });
    add("cone.interior_absorbs", [=] { return law_cone_absorb(seed + 2, trials); });
    add("cone.neg_polar_convex", [=] { return law_neg_polar_convex(seed + 3, trials); });
    add("lp.vertex_enumeration_agreement",
        [=] { return law_lp_oracle(seed + 4, std::max(1, trials / 2)); });
    add("lattice.idempotence_canonical", [=] { return law_lattice_idempotent(seed + 5, trials); });
    add("lattice.sum_law", [=] { return law_lattice_sum(seed + 6, trials); });
    add("lattice.scale_law", [=] { return law_lattice_scale(seed + 7, trials); });
    add("lattice.family_inf", [=] { return law_lattice_family_inf(seed + 8, trials); });
    add("lattice.family_sum_inf", [=] { return law_lattice_family_sum(seed + 9, trials); });
    add("lattice.order_axioms", [=] { return law_lattice_order(seed + 10, trials); });
    add("lattice.glb_lub", [=] { return law_lattice_glb_lub(seed + 11, trials); });
    add("lattice.strict_order_grid",
        [=] { return law_lattice_strict_order(seed + 12, grid_trials); });
    add("lattice.mirror_duality", [=] { return law_lattice_mirror(seed + 13, trials); });
    add("lattice.partition_sup_grid",
        [=] { return law_lattice_partition(seed + 14, grid_trials); });
    add("oracle.classify_agreement",
        [=] { return law_oracle_agreement(seed + 15, grid_trials, std::max(1, grid_trials / 4)); });
    add("oracle.leq_consistency", [=] { return law_oracle_leq(seed + 16, grid_trials); });
    add("model.perturbation_origin", [=] { return law_model_origin(seed + 17, trials); });
    add("model.relaxation_monotone", [=] { return law_model_monotone(seed + 18, trials); });
    add("duality.objective_decomposition",
        [=] { return law_duality_decomposition(seed + 19, trials); });
    add("duality.weak", [=] { return law_duality_weak(seed + 20, trials, 10); });
    add("duality.operator_chain", [=] { return law_duality_chain(seed + 21, convex_trials); });
    add("duality.sup_lagrangian",
        [=] { return law_duality_sup_lagrangian(seed + 22, convex_trials); });
    add("duality.subgradient_oracle",
        [=] { return law_duality_subgradient(seed + 23, std::max(1, trials / 10)); });
    add("duality.stability_strong", [=] { return law_duality_stability(seed + 24, convex_trials); });
    add("convex.relaxation_bound", [=] { return law_convex_relaxation(seed + 25, convex_trials); });
    add("convex.certify", [=] { return law_convex_certify(seed + 26, convex_trials); });
    add("convex.scalarization_support",
        [=] { return law_convex_scalarization(seed + 27, std::max(1, trials / 5)); });
    return laws;
}

}  // namespace props

// Runs every suite; laws execute on a worker pool but always report in the
// fixed registry order, so output is identical under any worker count. A law
// that escapes with an exception is reported as a single violation.
inline PropsReport run_property_suites(uint64_t seed, int trials, unsigned workers = 0)
{
    if (trials < 1) throw InputError("trials must be >= 1");
    auto laws = props::all_laws(seed, trials);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    PropsReport report;
    report.seed = seed;
    report.trials = trials;
    report.laws.resize(laws.size());

    std::vector<std::future<void>> running;
    size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= laws.size()) return;
                idx = next++;
            }
            try {
                report.laws[idx] = laws[idx].run();
            } catch (const std::exception& e) {
                report.laws[idx] = {laws[idx].name, 0, 1, std::string("exception: ") + e.what()};
            }
            report.laws[idx].name = laws[idx].name;
        }
    };
    const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(laws.size()));
    running.reserve(n);
    for (unsigned i = 0; i < n; ++i) running.push_back(std::async(std::launch::async, worker));
    for (auto& f : running) f.get();
    return report;
}

}  // namespace setopt
