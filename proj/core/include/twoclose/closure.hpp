#pragma once

#include "twoclose/orbital.hpp"
#include "twoclose/perm_group.hpp"

namespace twoclose {

enum class closure_method { automatic, brute_force, backtrack };

closure_method parse_closure_method(const std::string& text); // "auto"|"brute"|"backtrack"
std::string to_string(closure_method m);

struct closure_options {
    closure_method method = closure_method::automatic;
    int brute_max_degree = 9;
    int backtrack_max_degree = 40;
    std::size_t element_cap = default_element_cap;
};

/// Membership in the 2-closure, pair by pair: true iff for every (a, b) some
/// g in G agrees with x on both coordinates.
bool wielandt_member(const perm_group& g, const permutation& x);

/// Filter all of Sym(n) through preserves_coloring. Exact; degree-capped.
perm_group closure2_bruteforce(const perm_group& g, const closure_options& options = {});

/// Automorphism group of the orbital coloring by partition backtracking with
/// color-degree refinement. Exact (every leaf is verified); degree-capped.
perm_group closure2_backtrack(const perm_group& g, const closure_options& options = {});

/// Dispatcher: brute force up to options.brute_max_degree, backtrack beyond.
/// Post-verifies G is contained in the result and that every generator of the
/// result passes the pair-membership criterion.
perm_group closure2(const perm_group& g, const closure_options& options = {});

bool is_2closed(const perm_group& g, const closure_options& options = {});

} // namespace twoclose
