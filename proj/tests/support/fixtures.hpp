#pragma once

// Shared fixtures: the two-decision gap instance, the infeasible caveat
// instance, and the single-feasible-decision variant.

#include <setopt/instance.hpp>

namespace setopt::testing {

inline Instance gap_instance()  // x1 infeasible, x2 feasible, duality gap
{
    Decision x1{"x1", {make_vec({0, 0})}, {make_vec({1})}};
    Decision x2{"x2", {make_vec({2, 2})}, {make_vec({-1})}};
    return Instance(orthant_cone(2), orthant_cone(1), make_vec({1, 1}), {x1, x2});
}

inline Instance caveat_instance()  // empty feasible set, conv(G) still meets -D
{
    Decision x0{"x0", {make_vec({0, 0})}, {make_vec({2, -2}), make_vec({-2, 2})}};
    return Instance(orthant_cone(2), orthant_cone(2), make_vec({1, 1}), {x0});
}

inline Instance single_feasible_instance()  // x2 alone
{
    Decision x2{"x2", {make_vec({2, 2})}, {make_vec({-1})}};
    return Instance(orthant_cone(2), orthant_cone(1), make_vec({1, 1}), {x2});
}

}  // namespace setopt::testing
