#include "twoclose/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "twoclose/error.hpp"

namespace twoclose {

element_set::element_set(int universe_size)
    : size_(universe_size), words_(static_cast<std::size_t>((universe_size + 63) / 64), 0) {}

int element_set::count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::vector<int> element_set::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<int>(wi * 64) + bit);
            w &= w - 1;
        }
    }
    return out;
}

element_set& element_set::operator&=(const element_set& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

element_set& element_set::operator|=(const element_set& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

bool operator<(const element_set& a, const element_set& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (!diff) continue;
        const std::uint64_t low = diff & (~diff + 1); // lowest differing bit
        const bool in_a = (a.words_[i] & low) != 0;
        // The set holding the first differing element is lexicographically
        // smaller, unless the other set simply ends there (proper prefix).
        const element_set& other = in_a ? b : a;
        std::uint64_t tail = (in_a ? b.words_[i] : a.words_[i]) & ~(low | (low - 1));
        for (std::size_t j = i + 1; !tail && j < a.words_.size(); ++j) {
            tail = other.words_[j];
        }
        return in_a ? tail != 0 : tail == 0;
    }
    return false;
}

group_table::group_table(const perm_group& g)
    : size_(static_cast<int>(g.order())), degree_(g.degree()), elements_(g.elements()) {
    if (elements_.empty() || !elements_.front().is_identity()) {
        throw invariant_violation("group_table: identity is not element 0");
    }
    table_.resize(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_));
    inverses_.assign(static_cast<std::size_t>(size_), -1);
    orders_.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i) {
        orders_.push_back(elements_[static_cast<std::size_t>(i)].order());
        for (int j = 0; j < size_; ++j) {
            permutation prod = compose(elements_[static_cast<std::size_t>(i)],
                                       elements_[static_cast<std::size_t>(j)]);
            int k = index_of(prod);
            if (k < 0) throw invariant_violation("group_table: product escaped the element list");
            table_[static_cast<std::size_t>(i) * size_ + j] = k;
            if (k == 0) inverses_[static_cast<std::size_t>(i)] = j;
        }
    }
    generator_indices_.reserve(g.generators().size());
    for (const auto& gen : g.generators()) {
        generator_indices_.push_back(index_of(gen));
    }
}

int group_table::index_of(const permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it != elements_.end() && *it == p) return static_cast<int>(it - elements_.begin());
    return -1;
}

element_set subgroup_generated_by(const group_table& table, const std::vector<int>& seeds) {
    element_set members(table.size());
    std::vector<int> queue;
    auto push = [&](int e) {
        if (!members.test(e)) {
            members.set(e);
            queue.push_back(e);
        }
    };
    push(0);
    for (int s : seeds) push(s);
    for (std::size_t next = 0; next < queue.size(); ++next) {
        int x = queue[next];
        push(table.inv(x));
        // Products with everything collected so far (both orders).
        for (std::size_t j = 0; j <= next; ++j) {
            push(table.mul(x, queue[j]));
            push(table.mul(queue[j], x));
        }
    }
    return members;
}

element_set core_of(const group_table& table, const element_set& h) {
    element_set result = h;
    const std::vector<int> members = h.members();
    for (int g = 0; g < table.size(); ++g) {
        element_set conj(table.size());
        for (int x : members) conj.set(table.conjugate(x, g));
        result &= conj;
    }
    return result;
}

element_set centralizer_of(const group_table& table, const element_set& n) {
    const std::vector<int> members = n.members();
    element_set result(table.size());
    for (int g = 0; g < table.size(); ++g) {
        bool commutes = true;
        for (int x : members) {
            if (table.mul(g, x) != table.mul(x, g)) {
                commutes = false;
                break;
            }
        }
        if (commutes) result.set(g);
    }
    return result;
}

element_set center_of(const group_table& table) {
    element_set everything(table.size());
    for (int i = 0; i < table.size(); ++i) everything.set(i);
    return centralizer_of(table, everything);
}

bool set_is_abelian(const group_table& table, const element_set& h) {
    const std::vector<int> members = h.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (table.mul(members[i], members[j]) != table.mul(members[j], members[i])) {
                return false;
            }
        }
    }
    return true;
}

bool set_is_cyclic(const group_table& table, const element_set& h) {
    const int order = h.count();
    for (int x : h.members()) {
        if (table.order_of(x) == order) return true;
    }
    return false;
}

bool set_is_normal(const group_table& table, const element_set& h) {
    for (int g = 0; g < table.size(); ++g) {
        for (int x : h.members()) {
            if (!h.test(table.conjugate(x, g))) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

bool is_prime_power_or_one(std::int64_t n, std::int64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace

bool set_is_nilpotent(const group_table& table, const element_set& h) {
    const std::vector<int> members = h.members();
    for (std::int64_t p : prime_divisors(static_cast<std::int64_t>(members.size()))) {
        std::vector<int> p_elements;
        for (int x : members) {
            if (is_prime_power_or_one(table.order_of(x), p)) p_elements.push_back(x);
        }
        element_set p_set(table.size());
        for (int x : p_elements) p_set.set(x);
        for (int a : p_elements) {
            for (int b : p_elements) {
                if (!p_set.test(table.mul(a, b))) return false;
            }
        }
    }
    return true;
}

bool is_nilpotent(const perm_group& g) {
    group_table table(g);
    element_set everything(table.size());
    for (int i = 0; i < table.size(); ++i) everything.set(i);
    return set_is_nilpotent(table, everything);
}

namespace {

subgroup_info describe_subgroup(const group_table& table, element_set members) {
    subgroup_info info;
    info.order = static_cast<std::uint64_t>(members.count());
    info.core = core_of(table, members);
    info.normal = (info.core == members);
    info.abelian = set_is_abelian(table, members);
    info.cyclic = set_is_cyclic(table, members);
    info.members = std::move(members);
    return info;
}

} // namespace

subgroup_lattice::subgroup_lattice(const perm_group& g, std::size_t order_cap)
    : table_(g) {
    if (g.order() > order_cap) {
        throw cap_exceeded("subgroup_lattice: order " + std::to_string(g.order()) +
                           " exceeds cap of " + std::to_string(order_cap));
    }
    std::set<element_set> pool;
    for (int x = 0; x < table_.size(); ++x) {
        pool.insert(subgroup_generated_by(table_, {x}));
    }
    // Close under pairwise join until stable.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<element_set> current(pool.begin(), pool.end());
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::vector<int> seeds = current[i].members();
                std::vector<int> extra = current[j].members();
                seeds.insert(seeds.end(), extra.begin(), extra.end());
                element_set join = subgroup_generated_by(table_, seeds);
                if (pool.insert(join).second) grew = true;
            }
        }
    }

    std::vector<element_set> all(pool.begin(), pool.end());
    std::sort(all.begin(), all.end(), [](const element_set& a, const element_set& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    subgroups_.reserve(all.size());
    std::map<element_set, int> index;
    for (auto& members : all) {
        index[members] = static_cast<int>(subgroups_.size());
        subgroups_.push_back(describe_subgroup(table_, std::move(members)));
    }

    class_of_.assign(subgroups_.size(), -1);
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        if (class_of_[i] >= 0) continue;
        const int class_id = static_cast<int>(classes_.size());
        std::vector<int> class_members;
        for (int g_idx = 0; g_idx < table_.size(); ++g_idx) {
            element_set conj(table_.size());
            for (int x : subgroups_[i].members.members()) {
                conj.set(table_.conjugate(x, g_idx));
            }
            int j = index.at(conj);
            if (class_of_[static_cast<std::size_t>(j)] < 0) {
                class_of_[static_cast<std::size_t>(j)] = class_id;
                class_members.push_back(j);
            }
        }
        std::sort(class_members.begin(), class_members.end());
        classes_.push_back(std::move(class_members));
    }
}

int subgroup_lattice::index_of(const element_set& members) const {
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        if (subgroups_[i].members == members) return static_cast<int>(i);
    }
    return -1;
}

subgroup_info fitting(const subgroup_lattice& lattice) {
    std::vector<int> seeds;
    for (const auto& sub : lattice.subgroups()) {
        if (sub.normal && set_is_nilpotent(lattice.table(), sub.members)) {
            std::vector<int> members = sub.members.members();
            seeds.insert(seeds.end(), members.begin(), members.end());
        }
    }
    element_set join = subgroup_generated_by(lattice.table(), seeds);
    subgroup_info info = describe_subgroup(lattice.table(), join);
    if (!info.normal || !set_is_nilpotent(lattice.table(), info.members)) {
        throw invariant_violation("fitting: join of nilpotent normal subgroups is not one");
    }
    return info;
}

std::vector<int> normal_abelian_subgroups(const subgroup_lattice& lattice) {
    std::vector<int> out;
    for (std::size_t i = 0; i < lattice.subgroups().size(); ++i) {
        const auto& sub = lattice.subgroups()[i];
        if (sub.normal && sub.abelian) out.push_back(static_cast<int>(i));
    }
    return out;
}

coset_action_result coset_action(const group_table& table, const element_set& h) {
    const int n = table.size();
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (coset_of[static_cast<std::size_t>(g)] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int x : h.members()) {
            coset_of[static_cast<std::size_t>(table.mul(x, g))] = c;
        }
    }
    const int degree = static_cast<int>(reps.size());

    auto action_perm = [&](int g) {
        std::vector<std::int32_t> images(static_cast<std::size_t>(degree));
        for (int c = 0; c < degree; ++c) {
            images[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(
                coset_of[static_cast<std::size_t>(table.mul(reps[static_cast<std::size_t>(c)], g))]);
        }
        return permutation(std::move(images));
    };

    element_set kernel(n);
    for (int g = 0; g < n; ++g) {
        if (action_perm(g).is_identity()) kernel.set(g);
    }
    if (!(kernel == core_of(table, h))) {
        throw invariant_violation("coset_action: kernel differs from the core");
    }

    std::vector<permutation> gens;
    gens.reserve(table.generator_indices().size());
    for (int gi : table.generator_indices()) {
        gens.push_back(action_perm(gi));
    }
    return {perm_group(degree, std::move(gens)), kernel};
}

perm_group regular_representation(const perm_group& g) {
    group_table table(g);
    element_set trivial(table.size());
    trivial.set(0);
    return coset_action(table, trivial).action;
}

group_hom group_hom::make(const group_table& source, const std::vector<permutation>& gen_images) {
    if (gen_images.size() != source.generator_indices().size()) {
        throw spec_error("group_hom: need one image per generator");
    }
    const int target_degree = gen_images.empty() ? 1 : gen_images.front().degree();
    for (const auto& img : gen_images) {
        if (img.degree() != target_degree) {
            throw degree_mismatch("group_hom: generator images act on different point sets");
        }
    }

    group_hom hom;
    hom.images_.assign(static_cast<std::size_t>(source.size()), permutation::identity(target_degree));
    std::vector<bool> known(static_cast<std::size_t>(source.size()), false);
    known[0] = true;
    std::vector<int> queue{0};
    for (std::size_t next = 0; next < queue.size(); ++next) {
        const int e = queue[next];
        for (std::size_t gi = 0; gi < gen_images.size(); ++gi) {
            const int e2 = source.mul(e, source.generator_indices()[gi]);
            permutation image = compose(hom.images_[static_cast<std::size_t>(e)], gen_images[gi]);
            if (!known[static_cast<std::size_t>(e2)]) {
                known[static_cast<std::size_t>(e2)] = true;
                hom.images_[static_cast<std::size_t>(e2)] = std::move(image);
                queue.push_back(e2);
            } else if (hom.images_[static_cast<std::size_t>(e2)] != image) {
                // Two words for the same element disagree on the target side.
                throw spec_error("group_hom: generator images do not extend to a homomorphism");
            }
        }
    }
    if (queue.size() != static_cast<std::size_t>(source.size())) {
        throw invariant_violation("group_hom: generators do not generate the source group");
    }
    return hom;
}

bool group_hom::injective() const {
    std::set<std::vector<std::int32_t>> distinct;
    for (const auto& p : images_) distinct.insert(p.images());
    return distinct.size() == images_.size();
}

std::vector<int> group_hom::kernel_indices() const {
    std::vector<int> kernel;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].is_identity()) kernel.push_back(static_cast<int>(i));
    }
    return kernel;
}

namespace {

std::string describe_action(const subgroup_lattice& lattice, const std::vector<int>& classes,
                            int total_degree) {
    std::ostringstream out;
    out << "deg " << total_degree << " = ";
    bool first = true;
    for (int c : classes) {
        const auto& rep = lattice.subgroups()[static_cast<std::size_t>(
            lattice.conjugacy_classes()[static_cast<std::size_t>(c)].front())];
        if (!first) out << "+";
        out << lattice.table().size() / rep.order;
        first = false;
    }
    out << " (stabilizer orders [";
    first = true;
    for (int c : classes) {
        const auto& rep = lattice.subgroups()[static_cast<std::size_t>(
            lattice.conjugacy_classes()[static_cast<std::size_t>(c)].front())];
        if (!first) out << ",";
        out << rep.order;
        first = false;
    }
    out << "])";
    return out.str();
}

} // namespace

std::vector<faithful_action> faithful_actions(const subgroup_lattice& lattice, int max_degree) {
    const group_table& table = lattice.table();
    const int group_order = table.size();
    const int class_count = static_cast<int>(lattice.conjugacy_classes().size());

    // Per class: coset degree and core of the representative.
    std::vector<int> class_degree(static_cast<std::size_t>(class_count));
    std::vector<element_set> class_core(static_cast<std::size_t>(class_count));
    std::vector<coset_action_result> class_action;
    class_action.reserve(static_cast<std::size_t>(class_count));
    for (int c = 0; c < class_count; ++c) {
        const auto& rep = lattice.subgroups()[static_cast<std::size_t>(
            lattice.conjugacy_classes()[static_cast<std::size_t>(c)].front())];
        class_degree[static_cast<std::size_t>(c)] =
            group_order / static_cast<int>(rep.order);
        class_core[static_cast<std::size_t>(c)] = rep.core;
        class_action.push_back(coset_action(table, rep.members));
    }

    std::vector<faithful_action> out;
    std::vector<int> multiset;

    auto emit = [&] {
        int total_degree = 0;
        for (int c : multiset) total_degree += class_degree[static_cast<std::size_t>(c)];
        // Combined generators: each parent generator acts on all orbits.
        std::vector<permutation> gens;
        const std::size_t gen_count = table.generator_indices().size();
        for (std::size_t gi = 0; gi < gen_count; ++gi) {
            std::vector<std::int32_t> images(static_cast<std::size_t>(total_degree));
            int offset = 0;
            for (int c : multiset) {
                const permutation& part =
                    class_action[static_cast<std::size_t>(c)].action.generators()[gi];
                for (int p = 0; p < part.degree(); ++p) {
                    images[static_cast<std::size_t>(offset + p)] =
                        static_cast<std::int32_t>(offset + part[p]);
                }
                offset += part.degree();
            }
            gens.emplace_back(std::move(images));
        }
        perm_group action(total_degree, std::move(gens));
        if (action.order() != static_cast<std::uint64_t>(group_order)) {
            throw invariant_violation("faithful_actions: action is not faithful");
        }
        out.push_back(faithful_action{std::move(action), multiset, total_degree,
                                      describe_action(lattice, multiset, total_degree)});
    };

    // DFS over non-decreasing class multisets within the degree budget,
    // emitting whenever the core intersection is trivial.
    auto dfs = [&](auto&& self, int start_class, int remaining, element_set current_core) -> void {
        if (!multiset.empty() && current_core.count() == 1) emit();
        for (int c = start_class; c < class_count; ++c) {
            if (class_degree[static_cast<std::size_t>(c)] > remaining) continue;
            multiset.push_back(c);
            element_set next_core = current_core;
            next_core &= class_core[static_cast<std::size_t>(c)];
            self(self, c, remaining - class_degree[static_cast<std::size_t>(c)],
                 std::move(next_core));
            multiset.pop_back();
        }
    };
    element_set everything(group_order);
    for (int i = 0; i < group_order; ++i) everything.set(i);
    dfs(dfs, 0, max_degree, everything);

    std::stable_sort(out.begin(), out.end(), [](const faithful_action& a, const faithful_action& b) {
        if (a.total_degree != b.total_degree) return a.total_degree < b.total_degree;
        return a.classes < b.classes;
    });
    return out;
}

} // namespace twoclose
