#pragma once

// The finite set-valued optimization instance: a decision set with finite
// objective values F(x) in Y and constraint values G(x) in U, ordering cones
// C and D, and the scalarization direction c in the interior of C. An empty
// F(x) encodes x outside dom F; an empty G(x) encodes x outside dom G.

#include <json.hpp>

#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setopt/frontier.hpp"

namespace setopt {

struct Decision {
    std::string name;
    std::vector<RVec> objective_points;   // F(x), dimension q
    std::vector<RVec> constraint_points;  // G(x), dimension m
};

class Instance {
public:
    Instance(ConePtr cone_c, ConePtr cone_d, RVec scalarization, std::vector<Decision> decisions)
        : cone_c_(std::move(cone_c)), cone_d_(std::move(cone_d)),
          c_(std::move(scalarization)), decisions_(std::move(decisions))
    {
        if (!cone_c_ || !cone_d_) throw InputError("instance: cones required");
        if (decisions_.empty()) throw InputError("instance: at least one decision required");
        if (cone_classify(cone_c_, c_) != ConeClass::Interior)
            throw InputError("instance: c must lie in the interior of C");
        std::set<std::string> names;
        for (const auto& d : decisions_) {
            if (!names.insert(d.name).second)
                throw InputError("instance: duplicate decision name '" + d.name + "'");
            for (const auto& f : d.objective_points)
                if (f.size() != q()) throw InputError("instance: F point dimension mismatch");
            for (const auto& g : d.constraint_points)
                if (g.size() != m()) throw InputError("instance: G point dimension mismatch");
        }
    }

    Eigen::Index q() const { return cone_c_->dim(); }
    Eigen::Index m() const { return cone_d_->dim(); }
    const ConePtr& ordering_cone() const { return cone_c_; }
    const ConePtr& constraint_cone() const { return cone_d_; }
    const RVec& scalarization() const { return c_; }
    const std::vector<Decision>& decisions() const { return decisions_; }

    const Decision& decision(std::string_view name) const
    {
        for (const auto& d : decisions_)
            if (d.name == name) return d;
        throw InputError("unknown decision '" + std::string(name) + "'");
    }

    static Instance from_json(const nlohmann::json& j);
    static Instance load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open instance file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw InputError("instance file '" + path + "': " + e.what());
        }
        return from_json(j);
    }

    nlohmann::ordered_json to_json() const;

private:
    ConePtr cone_c_;
    ConePtr cone_d_;
    RVec c_;
    std::vector<Decision> decisions_;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError("rational values must be strings or integers");
}

inline RVec json_vector(const nlohmann::json& j)
{
    if (!j.is_array()) throw InputError("expected an array of rationals");
    RVec v(static_cast<Eigen::Index>(j.size()));
    Eigen::Index i = 0;
    for (const auto& e : j) v(i++) = json_rational(e);
    return v;
}

inline void reject_unknown(const nlohmann::json& j, std::initializer_list<std::string_view> keys,
                           const char* where)
{
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (auto k : keys)
            if (key == k) { known = true; break; }
        if (!known) throw InputError(std::string("unknown field '") + key + "' in " + where);
    }
}

inline ConePtr json_cone(const nlohmann::json& j, Eigen::Index dim, const char* where)
{
    if (!j.is_object()) throw InputError(std::string(where) + " must be an object");
    reject_unknown(j, {"generators"}, where);
    if (!j.contains("generators")) throw InputError(std::string(where) + ": generators missing");
    const auto& cols = j.at("generators");
    if (!cols.is_array() || static_cast<Eigen::Index>(cols.size()) != dim)
        throw InputError(std::string(where) + ": generator matrix must be square");
    RMat m(dim, dim);
    Eigen::Index cidx = 0;
    for (const auto& col : cols) {
        const RVec v = json_vector(col);
        if (v.size() != dim) throw InputError(std::string(where) + ": generator matrix must be square");
        m.col(cidx++) = v;
    }
    return make_cone(std::move(m));
}

inline nlohmann::ordered_json vector_json(const RVec& v)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_string(v(i)));
    return arr;
}

}  // namespace detail

inline Instance Instance::from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw InputError("instance: top-level object expected");
    detail::reject_unknown(j, {"q", "m", "cone_C", "cone_D", "c", "decisions"}, "instance");
    for (auto key : {"q", "m", "cone_C", "cone_D", "c", "decisions"})
        if (!j.contains(key)) throw InputError(std::string("instance: field '") + key + "' missing");

    if (!j.at("q").is_number_integer() || !j.at("m").is_number_integer())
        throw InputError("instance: q and m must be integers");
    const auto q = j.at("q").get<Eigen::Index>();
    const auto m = j.at("m").get<Eigen::Index>();
    if (q < 1 || m < 1) throw InputError("instance: q and m must be positive");

    ConePtr cone_c = detail::json_cone(j.at("cone_C"), q, "cone_C");
    ConePtr cone_d = detail::json_cone(j.at("cone_D"), m, "cone_D");
    RVec c = detail::json_vector(j.at("c"));
    if (c.size() != q) throw InputError("instance: c has wrong dimension");

    if (!j.at("decisions").is_array() || j.at("decisions").empty())
        throw InputError("instance: nonempty decisions array required");
    std::vector<Decision> decisions;
    for (const auto& dj : j.at("decisions")) {
        if (!dj.is_object()) throw InputError("instance: each decision must be an object");
        detail::reject_unknown(dj, {"name", "F", "G"}, "decision");
        for (auto key : {"name", "F", "G"})
            if (!dj.contains(key)) throw InputError(std::string("decision: field '") + key + "' missing");
        Decision d;
        if (!dj.at("name").is_string()) throw InputError("decision: name must be a string");
        d.name = dj.at("name").get<std::string>();
        for (const auto& fj : dj.at("F")) d.objective_points.push_back(detail::json_vector(fj));
        for (const auto& gj : dj.at("G")) d.constraint_points.push_back(detail::json_vector(gj));
        decisions.push_back(std::move(d));
    }
    return Instance(std::move(cone_c), std::move(cone_d), std::move(c), std::move(decisions));
}

inline nlohmann::ordered_json Instance::to_json() const
{
    nlohmann::ordered_json j;
    j["q"] = q();
    j["m"] = m();
    nlohmann::ordered_json cc, cd;
    cc["generators"] = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < q(); ++i)
        cc["generators"].push_back(detail::vector_json(cone_c_->generator(i)));
    cd["generators"] = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < m(); ++i)
        cd["generators"].push_back(detail::vector_json(cone_d_->generator(i)));
    j["cone_C"] = cc;
    j["cone_D"] = cd;
    j["c"] = detail::vector_json(c_);
    j["decisions"] = nlohmann::ordered_json::array();
    for (const auto& d : decisions_) {
        nlohmann::ordered_json dj;
        dj["name"] = d.name;
        dj["F"] = nlohmann::ordered_json::array();
        for (const auto& f : d.objective_points) dj["F"].push_back(detail::vector_json(f));
        dj["G"] = nlohmann::ordered_json::array();
        for (const auto& g : d.constraint_points) dj["G"].push_back(detail::vector_json(g));
        j["decisions"].push_back(std::move(dj));
    }
    return j;
}

// S: decisions whose constraint set meets -D.
inline std::vector<std::string> feasible_set(const Instance& inst)
{
    std::vector<std::string> out;
    for (const auto& d : inst.decisions()) {
        for (const auto& g : d.constraint_points) {
            if (cone_classify(inst.constraint_cone(), RVec(-g)) != ConeClass::Outside) {
                out.push_back(d.name);
                break;
            }
        }
    }
    return out;
}

// Value of the shifted problem: feasibility gate G(x) ∩ (-D - u) != {} and
// Inf of the union of objective sets over the decisions that pass.
inline Frontier perturbation_value(const Instance& inst, const RVec& u)
{
    if (u.size() != inst.m()) throw InputError("perturbation_value: dimension mismatch");
    std::vector<RVec> pool;
    for (const auto& d : inst.decisions()) {
        bool feasible = false;
        for (const auto& g : d.constraint_points) {
            if (cone_classify(inst.constraint_cone(), RVec(-g - u)) != ConeClass::Outside) {
                feasible = true;
                break;
            }
        }
        if (!feasible) continue;
        for (const auto& f : d.objective_points) pool.push_back(f);
    }
    return infer_from_points(pool, inst.ordering_cone());
}

inline Frontier primal_value(const Instance& inst)
{
    return perturbation_value(inst, RVec::Zero(inst.m()));
}

// Slater condition: some decision inside dom F has a constraint point in -Int D.
inline bool slater_check(const Instance& inst)
{
    for (const auto& d : inst.decisions()) {
        if (d.objective_points.empty()) continue;
        for (const auto& g : d.constraint_points)
            if (cone_classify(inst.constraint_cone(), RVec(-g)) == ConeClass::Interior) return true;
    }
    return false;
}

}  // namespace setopt
