#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twoclose/permutation.hpp"

namespace twoclose {

inline constexpr std::size_t default_element_cap = 20000;

/// A finite permutation group on {0,...,n-1}, given by generators.
///
/// The full element list is computed at construction (breadth-first closure of
/// the generators) and kept sorted lexicographically by image table, so every
/// downstream output is deterministic. Construction throws cap_exceeded once
/// the enumeration would pass `element_cap`. Instances are immutable.
class perm_group {
public:
    perm_group(int degree, std::vector<permutation> generators,
               std::size_t element_cap = default_element_cap);

    static perm_group trivial(int degree);

    /// Wrap an already-enumerated element list (must be the full subgroup).
    /// Sorts, validates the identity is present, and reduces the generating
    /// set greedily unless explicit generators are supplied.
    static perm_group from_elements(int degree, std::vector<permutation> elements,
                                    std::size_t element_cap = default_element_cap);

    int degree() const { return degree_; }
    const std::vector<permutation>& generators() const { return generators_; }
    const std::vector<permutation>& elements() const { return elements_; }
    std::uint64_t order() const { return elements_.size(); }

    bool contains(const permutation& p) const;
    /// Index into elements() or -1.
    int index_of(const permutation& p) const;

    const std::optional<std::string>& name() const { return name_; }
    perm_group with_name(std::string name) const;

private:
    perm_group() = default;

    int degree_ = 0;
    std::vector<permutation> generators_;
    std::vector<permutation> elements_; // sorted
    std::optional<std::string> name_;
};

/// Same underlying subgroup of Sym(n): equal degree and equal element sets.
bool same_element_set(const perm_group& a, const perm_group& b);
bool is_subgroup_of(const perm_group& a, const perm_group& b);

/// Orbit partition on points; blocks sorted ascending and by minimum point.
std::vector<std::vector<int>> orbits(const perm_group& g);

/// The factors placed side by side on a disjoint point set.
perm_group direct_product_disjoint(std::span<const perm_group> factors,
                                   std::size_t element_cap = default_element_cap);
perm_group direct_product_disjoint(const perm_group& a, const perm_group& b,
                                   std::size_t element_cap = default_element_cap);

/// Conjugate the whole group by the point relabeling `lambda`. Order and, up
/// to relabeled points, the orbit structure are preserved.
perm_group relabel(const perm_group& g, const permutation& lambda);

/// Pick a small generating set from a full element list: scan in canonical
/// order and keep each element that enlarges the generated subgroup.
std::vector<permutation> reduce_generators(int degree, std::span<const permutation> elements);

} // namespace twoclose
