#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twoclose/perm_group.hpp"

namespace twoclose {

/// A subset of a group's canonical element list, as a bitset over indices.
class element_set {
public:
    element_set() = default;
    explicit element_set(int universe_size);

    int universe_size() const { return size_; }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    int count() const;
    std::vector<int> members() const;

    element_set& operator&=(const element_set& other);
    element_set& operator|=(const element_set& other);

    friend bool operator==(const element_set&, const element_set&) = default;
    /// Order by smallest differing member; matches lexicographic order on
    /// sorted member lists.
    friend bool operator<(const element_set& a, const element_set& b);

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Multiplication table, inverses and element orders of an enumerated group;
/// self-contained (owns a copy of the sorted element list). Element 0 is
/// always the identity.
class group_table {
public:
    explicit group_table(const perm_group& g);

    int size() const { return size_; }
    int degree() const { return degree_; }
    const std::vector<permutation>& elements() const { return elements_; }
    const permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int index_of(const permutation& p) const; // -1 when absent

    int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * size_ + j]; }
    int inv(int i) const { return inverses_[static_cast<std::size_t>(i)]; }
    std::int64_t order_of(int i) const { return orders_[static_cast<std::size_t>(i)]; }
    int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }

    /// Indices of the source group's generators, in generator order.
    const std::vector<int>& generator_indices() const { return generator_indices_; }

private:
    int size_ = 0;
    int degree_ = 0;
    std::vector<permutation> elements_;
    std::vector<int> table_;
    std::vector<int> inverses_;
    std::vector<std::int64_t> orders_;
    std::vector<int> generator_indices_;
};

/// Closure of the seed indices under multiplication and inverse.
element_set subgroup_generated_by(const group_table& table, const std::vector<int>& seeds);

/// Intersection of all conjugates; the largest normal subgroup inside H.
element_set core_of(const group_table& table, const element_set& h);

element_set centralizer_of(const group_table& table, const element_set& n);
element_set center_of(const group_table& table);

bool set_is_abelian(const group_table& table, const element_set& h);
bool set_is_cyclic(const group_table& table, const element_set& h);
bool set_is_normal(const group_table& table, const element_set& h);
/// p-element product closure for every prime p dividing |H|.
bool set_is_nilpotent(const group_table& table, const element_set& h);

bool is_nilpotent(const perm_group& g);

struct subgroup_info {
    element_set members;
    element_set core;
    std::uint64_t order = 0;
    bool normal = false;
    bool abelian = false;
    bool cyclic = false;
};

/// Every subgroup, found by closing the cyclic subgroups under pairwise join.
/// Sorted by (order, lexicographic member set); conjugacy classes attached.
class subgroup_lattice {
public:
    explicit subgroup_lattice(const perm_group& g, std::size_t order_cap = 100);

    const group_table& table() const { return table_; }
    const std::vector<subgroup_info>& subgroups() const { return subgroups_; }
    int conjugacy_class_of(int subgroup_index) const {
        return class_of_[static_cast<std::size_t>(subgroup_index)];
    }
    /// Classes in canonical order; each lists subgroup indices ascending, so
    /// front() is the class representative.
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int index_of(const element_set& members) const; // -1 when absent

private:
    group_table table_;
    std::vector<subgroup_info> subgroups_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
};

/// Join of all nilpotent normal subgroups.
subgroup_info fitting(const subgroup_lattice& lattice);

/// Indices of the normal abelian subgroups, in lattice order.
std::vector<int> normal_abelian_subgroups(const subgroup_lattice& lattice);

struct coset_action_result {
    perm_group action;     // degree [G:H]; generators mirror the parent's
    element_set kernel;    // equals core_of(table, h)
};

/// Right-coset action of the parent on H\'s cosets; coset 0 is H itself and
/// cosets are numbered by their minimal element.
coset_action_result coset_action(const group_table& table, const element_set& h);

/// The parent acting on itself by right multiplication (cosets of 1).
perm_group regular_representation(const perm_group& g);

/// An induced map source element -> target permutation, defined by images of
/// the source's generators and verified to be a homomorphism.
class group_hom {
public:
    static group_hom make(const group_table& source, const std::vector<permutation>& gen_images);

    const permutation& image_of(int element_index) const {
        return images_[static_cast<std::size_t>(element_index)];
    }
    bool injective() const;
    std::vector<int> kernel_indices() const;

private:
    std::vector<permutation> images_;
};

struct faithful_action {
    perm_group action;         // generators mirror the parent's generators
    std::vector<int> classes;  // multiset of conjugacy class ids, ascending
    int total_degree = 0;
    std::string description;   // e.g. "orbits 8+4 (stabilizer orders [1,2])"
};

/// One faithful action per multiset of subgroup conjugacy classes whose coset
/// degrees sum to at most max_degree and whose cores intersect trivially.
/// Output sorted by (degree, class multiset).
std::vector<faithful_action> faithful_actions(const subgroup_lattice& lattice, int max_degree);

} // namespace twoclose
