#include "twoclose/perm_group.hpp"

#include <algorithm>
#include <set>

#include "twoclose/error.hpp"

namespace twoclose {

namespace {

// Breadth-first closure of `seeds` under right multiplication by `gens`.
std::vector<permutation> closure_of(int degree, const std::vector<permutation>& seeds,
                                    const std::vector<permutation>& gens, std::size_t cap) {
    std::set<std::vector<std::int32_t>> seen;
    std::vector<permutation> frontier;
    std::vector<permutation> all;
    auto push = [&](const permutation& p) {
        if (seen.insert(p.images()).second) {
            if (seen.size() > cap) {
                throw cap_exceeded("element enumeration exceeds cap of " + std::to_string(cap));
            }
            frontier.push_back(p);
            all.push_back(p);
        }
    };
    push(permutation::identity(degree));
    for (const auto& s : seeds) push(s);
    std::size_t next = 0;
    while (next < frontier.size()) {
        permutation current = frontier[next++];
        for (const auto& g : gens) {
            push(compose(current, g));
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

perm_group::perm_group(int degree, std::vector<permutation> generators, std::size_t element_cap) {
    if (degree < 1) throw spec_error("perm_group: degree must be positive");
    if (generators.empty()) throw spec_error("perm_group: generator list must be nonempty");
    for (const auto& g : generators) {
        if (g.degree() != degree) throw degree_mismatch("perm_group: generator degree mismatch");
    }
    degree_ = degree;
    elements_ = closure_of(degree, generators, generators, element_cap);
    generators_ = std::move(generators);
}

perm_group perm_group::trivial(int degree) {
    return perm_group(degree, {permutation::identity(degree)});
}

perm_group perm_group::from_elements(int degree, std::vector<permutation> elements,
                                     std::size_t element_cap) {
    if (degree < 1) throw spec_error("perm_group: degree must be positive");
    if (elements.size() > element_cap) {
        throw cap_exceeded("element list exceeds cap of " + std::to_string(element_cap));
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || !elements.front().is_identity()) {
        throw invariant_violation("from_elements: identity missing from element list");
    }
    perm_group g;
    g.degree_ = degree;
    g.generators_ = reduce_generators(degree, elements);
    g.elements_ = std::move(elements);
    return g;
}

bool perm_group::contains(const permutation& p) const {
    return index_of(p) >= 0;
}

int perm_group::index_of(const permutation& p) const {
    if (p.degree() != degree_) return -1;
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it != elements_.end() && *it == p) {
        return static_cast<int>(it - elements_.begin());
    }
    return -1;
}

perm_group perm_group::with_name(std::string name) const {
    perm_group copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool same_element_set(const perm_group& a, const perm_group& b) {
    return a.degree() == b.degree() && a.elements() == b.elements();
}

bool is_subgroup_of(const perm_group& a, const perm_group& b) {
    if (a.degree() != b.degree()) return false;
    return std::includes(b.elements().begin(), b.elements().end(),
                         a.elements().begin(), a.elements().end());
}

std::vector<std::vector<int>> orbits(const perm_group& g) {
    const int n = g.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> block{start};
        seen[static_cast<std::size_t>(start)] = true;
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (const auto& gen : g.generators()) {
                int image = gen[block[i]];
                if (!seen[static_cast<std::size_t>(image)]) {
                    seen[static_cast<std::size_t>(image)] = true;
                    block.push_back(image);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

perm_group direct_product_disjoint(std::span<const perm_group> factors, std::size_t element_cap) {
    if (factors.empty()) throw spec_error("direct_product_disjoint: no factors");
    if (factors.size() == 1) return factors[0];
    int total_degree = 0;
    for (const auto& f : factors) total_degree += f.degree();
    std::vector<permutation> gens;
    int offset = 0;
    for (const auto& f : factors) {
        for (const auto& g : f.generators()) {
            std::vector<std::int32_t> images(static_cast<std::size_t>(total_degree));
            for (int i = 0; i < total_degree; ++i) images[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < f.degree(); ++i) {
                images[static_cast<std::size_t>(offset + i)] = offset + g[i];
            }
            gens.emplace_back(std::move(images));
        }
        offset += f.degree();
    }
    return perm_group(total_degree, std::move(gens), element_cap);
}

perm_group direct_product_disjoint(const perm_group& a, const perm_group& b,
                                   std::size_t element_cap) {
    const perm_group factors[] = {a, b};
    return direct_product_disjoint(std::span<const perm_group>(factors, 2), element_cap);
}

perm_group relabel(const perm_group& g, const permutation& lambda) {
    if (lambda.degree() != g.degree()) throw degree_mismatch("relabel: degree mismatch");
    std::vector<permutation> gens;
    gens.reserve(g.generators().size());
    for (const auto& x : g.generators()) {
        gens.push_back(conjugate(x, lambda));
    }
    return perm_group(g.degree(), std::move(gens));
}

std::vector<permutation> reduce_generators(int degree, std::span<const permutation> elements) {
    std::vector<permutation> gens;
    std::set<std::vector<std::int32_t>> generated;
    generated.insert(permutation::identity(degree).images());
    for (const auto& e : elements) {
        if (generated.contains(e.images())) continue;
        gens.push_back(e);
        // Regrow the generated set with the new generator included.
        generated.clear();
        std::vector<permutation> queue{permutation::identity(degree)};
        generated.insert(queue.front().images());
        std::size_t next = 0;
        while (next < queue.size()) {
            permutation current = queue[next++];
            for (const auto& g : gens) {
                permutation prod = compose(current, g);
                if (generated.insert(prod.images()).second) queue.push_back(prod);
            }
        }
        if (generated.size() == elements.size()) break;
    }
    if (gens.empty()) gens.push_back(permutation::identity(degree));
    return gens;
}

} // namespace twoclose
