#include "twoclose/closure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twoclose/error.hpp"

namespace twoclose {

closure_method parse_closure_method(const std::string& text) {
    if (text == "auto") return closure_method::automatic;
    if (text == "brute") return closure_method::brute_force;
    if (text == "backtrack") return closure_method::backtrack;
    throw spec_error("unknown method \"" + text + "\" (expected auto|brute|backtrack)");
}

std::string to_string(closure_method m) {
    switch (m) {
        case closure_method::automatic: return "auto";
        case closure_method::brute_force: return "brute";
        case closure_method::backtrack: return "backtrack";
    }
    return "?";
}

bool wielandt_member(const perm_group& g, const permutation& x) {
    if (x.degree() != g.degree()) throw degree_mismatch("wielandt_member: degree mismatch");
    const int n = g.degree();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            bool matched = false;
            for (const auto& e : g.elements()) {
                if (e[a] == x[a] && e[b] == x[b]) {
                    matched = true;
                    break;
                }
            }
            if (!matched) return false;
        }
    }
    return true;
}

perm_group closure2_bruteforce(const perm_group& g, const closure_options& options) {
    const int n = g.degree();
    if (n > options.brute_max_degree) {
        throw cap_exceeded("closure2_bruteforce: degree " + std::to_string(n) +
                           " exceeds cap of " + std::to_string(options.brute_max_degree));
    }
    const orbital_coloring coloring = orbitals(g);
    std::vector<std::int32_t> candidate(static_cast<std::size_t>(n));
    std::iota(candidate.begin(), candidate.end(), 0);
    std::vector<permutation> kept;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            const std::size_t row = static_cast<std::size_t>(a) * static_cast<std::size_t>(n);
            const std::size_t image_row =
                static_cast<std::size_t>(candidate[static_cast<std::size_t>(a)]) *
                static_cast<std::size_t>(n);
            for (int b = 0; b < n; ++b) {
                if (coloring.colors[image_row +
                                    static_cast<std::size_t>(candidate[static_cast<std::size_t>(b)])] !=
                    coloring.colors[row + static_cast<std::size_t>(b)]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            if (kept.size() >= options.element_cap) {
                throw cap_exceeded("closure2_bruteforce: closure exceeds element cap");
            }
            kept.emplace_back(candidate);
        }
    } while (std::next_permutation(candidate.begin(), candidate.end()));
    return perm_group::from_elements(n, std::move(kept), options.element_cap);
}

namespace {

// Ordered partition of points, refined in lockstep on the domain and image
// side of a candidate color automorphism.
using partition = std::vector<std::vector<int>>;

partition initial_partition(const orbital_coloring& coloring) {
    std::map<std::int32_t, std::vector<int>> by_diag;
    for (int v = 0; v < coloring.degree; ++v) {
        by_diag[coloring.at(v, v)].push_back(v);
    }
    partition cells;
    cells.reserve(by_diag.size());
    for (auto& [color, points] : by_diag) cells.push_back(std::move(points));
    return cells;
}

// Counts of (cell of u, color(v,u), color(u,v)) over all points u. Invariant
// under any color automorphism compatible with the current cell alignment.
using signature = std::vector<std::int64_t>;

signature signature_of(const orbital_coloring& coloring, const std::vector<int>& cell_of, int v) {
    std::map<std::int64_t, std::int64_t> counts;
    const std::int64_t c = coloring.color_count;
    for (int u = 0; u < coloring.degree; ++u) {
        std::int64_t key = (static_cast<std::int64_t>(cell_of[static_cast<std::size_t>(u)]) * c +
                            coloring.at(v, u)) * c + coloring.at(u, v);
        ++counts[key];
    }
    signature sig;
    sig.reserve(counts.size() * 2);
    for (auto [key, count] : counts) {
        sig.push_back(key);
        sig.push_back(count);
    }
    return sig;
}

std::vector<int> cell_index_of(const partition& cells, int degree) {
    std::vector<int> cell_of(static_cast<std::size_t>(degree), -1);
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        for (int v : cells[ci]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(ci);
    }
    return cell_of;
}

// One pass of color-degree refinement applied to both sides at once, repeated
// until stable. Returns false when the split patterns diverge, i.e. no
// automorphism can respect the current alignment.
bool refine_pair(const orbital_coloring& coloring, partition& p1, partition& p2) {
    const int n = coloring.degree;
    while (true) {
        std::vector<int> cell1 = cell_index_of(p1, n);
        std::vector<int> cell2 = cell_index_of(p2, n);
        partition next1;
        partition next2;
        bool changed = false;
        for (std::size_t ci = 0; ci < p1.size(); ++ci) {
            if (p1[ci].size() != p2[ci].size()) return false;
            std::map<signature, std::vector<int>> split1;
            std::map<signature, std::vector<int>> split2;
            for (int v : p1[ci]) split1[signature_of(coloring, cell1, v)].push_back(v);
            for (int v : p2[ci]) split2[signature_of(coloring, cell2, v)].push_back(v);
            if (split1.size() != split2.size()) return false;
            auto it1 = split1.begin();
            auto it2 = split2.begin();
            for (; it1 != split1.end(); ++it1, ++it2) {
                if (it1->first != it2->first || it1->second.size() != it2->second.size()) {
                    return false;
                }
                next1.push_back(std::move(it1->second));
                next2.push_back(std::move(it2->second));
            }
            if (split1.size() > 1) changed = true;
        }
        p1 = std::move(next1);
        p2 = std::move(next2);
        if (!changed) return true;
    }
}

partition individualize(const partition& cells, std::size_t ci, int point) {
    partition result;
    result.reserve(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != ci) {
            result.push_back(cells[i]);
            continue;
        }
        result.push_back({point});
        std::vector<int> rest;
        rest.reserve(cells[i].size() - 1);
        for (int v : cells[i]) {
            if (v != point) rest.push_back(v);
        }
        result.push_back(std::move(rest));
    }
    return result;
}

void search_automorphisms(const orbital_coloring& coloring, partition p1, partition p2,
                          std::vector<permutation>& out, std::size_t cap) {
    if (!refine_pair(coloring, p1, p2)) return;

    // Branch cell: smallest non-singleton, ties to the lowest index.
    std::size_t branch = p1.size();
    for (std::size_t ci = 0; ci < p1.size(); ++ci) {
        if (p1[ci].size() > 1 && (branch == p1.size() || p1[ci].size() < p1[branch].size())) {
            branch = ci;
        }
    }
    if (branch == p1.size()) {
        // Discrete on both sides: read off the candidate and verify it.
        std::vector<std::int32_t> images(static_cast<std::size_t>(coloring.degree));
        for (std::size_t ci = 0; ci < p1.size(); ++ci) {
            images[static_cast<std::size_t>(p1[ci][0])] = static_cast<std::int32_t>(p2[ci][0]);
        }
        permutation candidate(std::move(images));
        if (preserves_coloring(coloring, candidate)) {
            if (out.size() >= cap) {
                throw cap_exceeded("closure2_backtrack: closure exceeds element cap");
            }
            out.push_back(std::move(candidate));
        }
        return;
    }

    const int v = *std::min_element(p1[branch].begin(), p1[branch].end());
    std::vector<int> candidates = p2[branch];
    std::sort(candidates.begin(), candidates.end());
    for (int u : candidates) {
        search_automorphisms(coloring, individualize(p1, branch, v),
                             individualize(p2, branch, u), out, cap);
    }
}

} // namespace

perm_group closure2_backtrack(const perm_group& g, const closure_options& options) {
    const int n = g.degree();
    if (n > options.backtrack_max_degree) {
        throw cap_exceeded("closure2_backtrack: degree " + std::to_string(n) +
                           " exceeds cap of " + std::to_string(options.backtrack_max_degree));
    }
    const orbital_coloring coloring = orbitals(g);
    partition start = initial_partition(coloring);
    std::vector<permutation> found;
    search_automorphisms(coloring, start, start, found, options.element_cap);
    return perm_group::from_elements(n, std::move(found), options.element_cap);
}

perm_group closure2(const perm_group& g, const closure_options& options) {
    perm_group result = [&] {
        switch (options.method) {
            case closure_method::brute_force: return closure2_bruteforce(g, options);
            case closure_method::backtrack: return closure2_backtrack(g, options);
            case closure_method::automatic:
                return g.degree() <= options.brute_max_degree ? closure2_bruteforce(g, options)
                                                              : closure2_backtrack(g, options);
        }
        throw spec_error("closure2: bad method");
    }();
    if (!is_subgroup_of(g, result)) {
        throw invariant_violation("closure2: result does not contain the input group");
    }
    for (const auto& gen : result.generators()) {
        if (!wielandt_member(g, gen)) {
            throw invariant_violation("closure2: generator fails the pair-membership criterion");
        }
    }
    return result;
}

bool is_2closed(const perm_group& g, const closure_options& options) {
    return closure2(g, options).order() == g.order();
}

} // namespace twoclose
