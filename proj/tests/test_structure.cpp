#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "twoclose/builders.hpp"
#include "twoclose/error.hpp"
#include "twoclose/structure.hpp"

using namespace twoclose;

namespace {

perm_group s3_natural() {
    return perm_group(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
}

// Independent oracle: count subgroups by scanning all subsets of the element
// list for closure under the multiplication table. Only viable for tiny groups.
int count_subgroups_by_subsets(const perm_group& g) {
    const group_table table(g);
    const int n = table.size();
    REQUIRE(n <= 12);
    int count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & 1)) continue; // must contain the identity
        bool closed = true;
        for (int i = 0; i < n && closed; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = 0; j < n; ++j) {
                if (!(mask >> j & 1)) continue;
                if (!(mask >> table.mul(i, j) & 1)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) ++count;
    }
    return count;
}

const subgroup_info& subgroup_of_order(const subgroup_lattice& lattice, std::uint64_t order) {
    for (const auto& sub : lattice.subgroups()) {
        if (sub.order == order) return sub;
    }
    REQUIRE(false);
    return lattice.subgroups().front();
}

} // namespace

TEST_CASE("element_set ordering matches sorted member lists") {
    auto make = [](std::initializer_list<int> bits) {
        element_set s(8);
        for (int b : bits) s.set(b);
        return s;
    };
    CHECK(make({0, 5}) < make({1, 2}));
    CHECK(make({1, 2}) < make({1, 3}));
    CHECK(make({1}) < make({1, 3}));
    CHECK_FALSE(make({1, 3}) < make({1, 3}));
    CHECK(make({1, 3}) == make({1, 3}));
    CHECK(make({0, 1, 7}).members() == std::vector<int>{0, 1, 7});
}

TEST_CASE("subgroup counts") {
    CHECK(subgroup_lattice(parse_group_spec("cyclic:6")).subgroups().size() == 4);
    CHECK(subgroup_lattice(parse_group_spec("direct:cyclic:2+cyclic:2")).subgroups().size() == 5);

    const subgroup_lattice q8(parse_group_spec("quaternion:8"));
    CHECK(q8.subgroups().size() == 6); // 1, Z, three C4, Q8

    const subgroup_lattice d8(parse_group_spec("dihedral:8"));
    CHECK(d8.subgroups().size() == 10);

    // Cross-check the counts against the subset-scan oracle.
    for (const std::string spec :
         {"cyclic:6", "direct:cyclic:2+cyclic:2", "quaternion:8", "dihedral:8", "cyclic:12"}) {
        CAPTURE(spec);
        const perm_group g = parse_group_spec(spec);
        CHECK(subgroup_lattice(g).subgroups().size() ==
              static_cast<std::size_t>(count_subgroups_by_subsets(g)));
    }

    // Canonical order: by order, then lexicographically by member set, with
    // no duplicates; class representatives are the first of each class.
    for (const auto& sub_pair : {std::pair{std::string("dihedral:8"), 8},
                                 {std::string("quaternion:8"), 6}}) {
        const subgroup_lattice lattice(parse_group_spec(sub_pair.first));
        CHECK(static_cast<int>(lattice.conjugacy_classes().size()) == sub_pair.second);
        for (std::size_t i = 1; i < lattice.subgroups().size(); ++i) {
            const auto& prev = lattice.subgroups()[i - 1];
            const auto& cur = lattice.subgroups()[i];
            CHECK((prev.order < cur.order ||
                   (prev.order == cur.order && prev.members < cur.members)));
        }
        for (const auto& cls : lattice.conjugacy_classes()) {
            CHECK(std::is_sorted(cls.begin(), cls.end()));
            for (int member : cls) {
                CHECK(lattice.conjugacy_class_of(member) ==
                      lattice.conjugacy_class_of(cls.front()));
            }
        }
    }
}

TEST_CASE("lattice order cap") {
    CHECK_THROWS_AS(subgroup_lattice(parse_group_spec("cyclic:12"), 10), cap_exceeded);
}

TEST_CASE("cores") {
    const perm_group d8 = parse_group_spec("dihedral:8");
    const subgroup_lattice lattice(d8);
    const group_table& table = lattice.table();

    for (const auto& sub : lattice.subgroups()) {
        // Core is normal, inside the subgroup, and idempotent.
        CHECK(set_is_normal(table, sub.core));
        element_set inter = sub.core;
        inter &= sub.members;
        CHECK(inter == sub.core);
        CHECK(core_of(table, sub.core) == sub.core);
        CHECK(sub.normal == (sub.core == sub.members));
        if (sub.normal) CHECK(sub.core == sub.members);
    }

    // A non-normal C2 (a reflection) has trivial core.
    const permutation b = d8.generators()[1];
    const element_set reflection = subgroup_generated_by(table, {table.index_of(b)});
    CHECK(core_of(table, reflection).count() == 1);
}

TEST_CASE("for abelian groups every subgroup is its own core") {
    const subgroup_lattice lattice(parse_group_spec("direct:cyclic:2+cyclic:4"));
    for (const auto& sub : lattice.subgroups()) {
        CHECK(sub.normal);
        CHECK(sub.core == sub.members);
    }
}

TEST_CASE("centralizer and center") {
    const perm_group c6 = parse_group_spec("cyclic:6");
    const group_table c6_table(c6);
    element_set whole(c6_table.size());
    for (int i = 0; i < c6_table.size(); ++i) whole.set(i);
    CHECK(centralizer_of(c6_table, whole).count() == 6); // abelian

    CHECK(center_of(group_table(parse_group_spec("quaternion:8"))).count() == 2);
    CHECK(center_of(group_table(parse_group_spec("dihedral:8"))).count() == 2);
    CHECK(center_of(group_table(s3_natural())).count() == 1);
}

TEST_CASE("nilpotency") {
    CHECK(is_nilpotent(parse_group_spec("quaternion:8")));
    CHECK(is_nilpotent(parse_group_spec("dihedral:8")));
    CHECK(is_nilpotent(parse_group_spec("cyclic:12")));
    CHECK_FALSE(is_nilpotent(s3_natural()));
    CHECK_FALSE(is_nilpotent(parse_group_spec("dihedral:6")));
    // Q8 x C3 is nilpotent (all Sylow subgroups normal).
    CHECK(is_nilpotent(parse_group_spec("direct:quaternion:8+cyclic:3")));
}

TEST_CASE("fitting subgroups") {
    CHECK(fitting(subgroup_lattice(parse_group_spec("quaternion:8"))).order == 8);
    CHECK(fitting(subgroup_lattice(parse_group_spec("dihedral:8"))).order == 8);
    // F(S3) = C3.
    const subgroup_info fit = fitting(subgroup_lattice(s3_natural()));
    CHECK(fit.order == 3);
    CHECK(fit.normal);
    // F(D6) = C3 as well.
    CHECK(fitting(subgroup_lattice(parse_group_spec("dihedral:6"))).order == 3);
}

TEST_CASE("fitting subgroup contains every nilpotent normal subgroup") {
    for (const std::string spec : {"dihedral:6", "dihedral:8", "cyclic:12", "quaternion:8"}) {
        CAPTURE(spec);
        const subgroup_lattice lattice(parse_group_spec(spec));
        const subgroup_info fit = fitting(lattice);
        for (const auto& sub : lattice.subgroups()) {
            if (!sub.normal || !set_is_nilpotent(lattice.table(), sub.members)) continue;
            element_set inter = sub.members;
            inter &= fit.members;
            CHECK(inter == sub.members);
        }
    }
}

TEST_CASE("2-groups with all normal abelian subgroups cyclic have a cyclic half") {
    for (const std::string spec :
         {"cyclic:8", "cyclic:16", "cyclic:32", "dihedral:8", "dihedral:16", "dihedral:32",
          "semidihedral:16", "semidihedral:32", "modular:2,4", "modular:2,5", "quaternion:8",
          "quaternion:16", "quaternion:32", "direct:cyclic:2+cyclic:4",
          "direct:cyclic:2+cyclic:2"}) {
        CAPTURE(spec);
        const perm_group g = parse_group_spec(spec);
        const subgroup_lattice lattice(g);
        bool all_cyclic = true;
        for (int idx : normal_abelian_subgroups(lattice)) {
            all_cyclic = all_cyclic && lattice.subgroups()[static_cast<std::size_t>(idx)].cyclic;
        }
        if (!all_cyclic) continue;
        bool has_cyclic_half = false;
        for (const auto& sub : lattice.subgroups()) {
            if (sub.order * 2 == g.order() && sub.cyclic) has_cyclic_half = true;
        }
        CHECK(has_cyclic_half);
    }
}

TEST_CASE("normal abelian subgroups") {
    const subgroup_lattice q8(parse_group_spec("quaternion:8"));
    const std::vector<int> q8_nab = normal_abelian_subgroups(q8);
    CHECK(q8_nab.size() == 5); // 1, Z, three C4
    for (int idx : q8_nab) {
        CHECK(q8.subgroups()[static_cast<std::size_t>(idx)].cyclic);
    }

    const subgroup_lattice d8(parse_group_spec("dihedral:8"));
    bool found_noncyclic = false;
    for (int idx : normal_abelian_subgroups(d8)) {
        const auto& sub = d8.subgroups()[static_cast<std::size_t>(idx)];
        if (!sub.cyclic) {
            found_noncyclic = true;
            CHECK(sub.order == 4);
        }
    }
    CHECK(found_noncyclic);

    const subgroup_lattice c6(parse_group_spec("cyclic:6"));
    CHECK(normal_abelian_subgroups(c6).size() == c6.subgroups().size());
}

TEST_CASE("coset actions") {
    const perm_group q8 = parse_group_spec("quaternion:8");
    const subgroup_lattice lattice(q8);
    const group_table& table = lattice.table();

    // H = trivial: the regular action.
    element_set trivial(table.size());
    trivial.set(0);
    const coset_action_result regular = coset_action(table, trivial);
    CHECK(regular.action.degree() == 8);
    CHECK(regular.action.order() == 8);
    CHECK(regular.kernel.count() == 1);

    // H = G: one point, kernel everything.
    element_set whole(table.size());
    for (int i = 0; i < table.size(); ++i) whole.set(i);
    const coset_action_result point = coset_action(table, whole);
    CHECK(point.action.degree() == 1);
    CHECK(point.kernel.count() == 8);

    // H = a C4: degree 2, image of order 2.
    const coset_action_result halves = coset_action(table, subgroup_of_order(lattice, 4).members);
    CHECK(halves.action.degree() == 2);
    CHECK(halves.action.order() == 2);
    CHECK(halves.kernel.count() == 4);
}

TEST_CASE("regular representation") {
    const perm_group s3 = s3_natural();
    const perm_group reg = regular_representation(s3);
    CHECK(reg.degree() == 6);
    CHECK(reg.order() == 6);
    // Only the identity fixes a point.
    for (const auto& e : reg.elements()) {
        if (e.is_identity()) continue;
        for (int p = 0; p < reg.degree(); ++p) CHECK(e[p] != p);
    }
}

TEST_CASE("group homomorphisms from generator images") {
    const perm_group s3 = s3_natural();
    const group_table table(s3);

    // Sign map onto C2.
    const group_hom sign = group_hom::make(
        table, {parse_cycles("(1 2)", 2), permutation::identity(2)});
    CHECK_FALSE(sign.injective());
    CHECK(sign.kernel_indices().size() == 3);

    // Identity map.
    const group_hom id = group_hom::make(table, s3.generators());
    CHECK(id.injective());
    CHECK(id.kernel_indices().size() == 1);

    // The sign map realized inside S3: (1 2) -> (1 2), (1 2 3) -> identity.
    const group_hom sign_in_s3 =
        group_hom::make(table, {parse_cycles("(1 2)", 3), permutation::identity(3)});
    CHECK(sign_in_s3.kernel_indices().size() == 3);

    // (1 2 3) -> (1 2) breaks the order-3 relation.
    CHECK_THROWS_AS(group_hom::make(table, {parse_cycles("(1 2)", 3), parse_cycles("(1 2)", 3)}),
                    spec_error);
}

TEST_CASE("faithful actions of C2") {
    const subgroup_lattice lattice(parse_group_spec("cyclic:2"));
    const std::vector<faithful_action> actions = faithful_actions(lattice, 3);
    REQUIRE(actions.size() == 2);
    CHECK(actions[0].total_degree == 2); // regular
    CHECK(actions[1].total_degree == 3); // regular plus a fixed point
    for (const auto& fa : actions) {
        CHECK(fa.action.order() == 2);
    }
}

TEST_CASE("faithful actions of Q8 up to degree 9 need a regular orbit") {
    const subgroup_lattice lattice(parse_group_spec("quaternion:8"));
    const std::vector<faithful_action> actions = faithful_actions(lattice, 9);
    REQUIRE(actions.size() == 2);
    CHECK(actions[0].total_degree == 8);
    CHECK(actions[1].total_degree == 9);
}

TEST_CASE("faithful actions of V4 at degree 4") {
    const subgroup_lattice lattice(parse_group_spec("direct:cyclic:2+cyclic:2"));
    const std::vector<faithful_action> actions = faithful_actions(lattice, 4);
    // The regular action plus the three (pairwise permutation-isomorphic)
    // two-distinct-C2 coset actions; class multisets are not merged.
    REQUIRE(actions.size() == 4);
    CHECK(actions[0].total_degree == 4);
    CHECK(actions[0].classes.size() == 1); // regular
    for (std::size_t i = 1; i < actions.size(); ++i) {
        CHECK(actions[i].total_degree == 4);
        CHECK(actions[i].classes.size() == 2);
    }
}

TEST_CASE("every emitted action is faithful and canonically ordered") {
    for (const std::string spec : {"cyclic:8", "dihedral:8", "quaternion:8", "cyclic:9"}) {
        CAPTURE(spec);
        const perm_group g = parse_group_spec(spec);
        const subgroup_lattice lattice(g);
        const std::vector<faithful_action> actions = faithful_actions(lattice, 12);
        std::set<std::vector<int>> seen;
        int last_degree = 0;
        for (const auto& fa : actions) {
            CHECK(fa.action.order() == g.order()); // faithful
            CHECK(fa.total_degree >= last_degree);
            last_degree = fa.total_degree;
            CHECK(seen.insert(fa.classes).second); // one per multiset
            CHECK(std::is_sorted(fa.classes.begin(), fa.classes.end()));
            // Only the identity fixes every point.
            for (const auto& e : fa.action.elements()) {
                if (e.is_identity()) continue;
                bool moves = false;
                for (int p = 0; p < fa.action.degree() && !moves; ++p) moves = e[p] != p;
                CHECK(moves);
            }
        }
    }
}
