#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "twoclose/builders.hpp"
#include "twoclose/error.hpp"
#include "twoclose/group_io.hpp"
#include "twoclose/structure.hpp"

using namespace twoclose;

namespace {

int count_involutions(const perm_group& g) {
    int count = 0;
    for (const auto& e : g.elements()) {
        if (e.order() == 2) ++count;
    }
    return count;
}

bool is_abelian(const perm_group& g) {
    for (const auto& a : g.generators()) {
        for (const auto& b : g.generators()) {
            if (compose(a, b) != compose(b, a)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("metacyclic presentations hold on the regular action") {
    struct sample {
        metacyclic_spec spec;
        std::uint64_t order;
    };
    const std::vector<sample> samples = {
        {{6, 1, 0, 1}, 6},   // C6
        {{4, 2, 2, 3}, 8},   // Q8
        {{8, 2, 0, 5}, 16},  // M16
        {{4, 2, 0, 3}, 8},   // D8
        {{8, 2, 0, 3}, 16},  // SD16
        {{9, 3, 0, 4}, 27},  // M27
    };
    for (const auto& s : samples) {
        const perm_group g = metacyclic_regular(s.spec);
        CHECK(g.order() == s.order);
        CHECK(g.degree() == static_cast<int>(s.order)); // regular

        const permutation a = g.generators()[0];
        const permutation b = s.spec.s > 1 ? g.generators()[1] : permutation::identity(g.degree());
        CHECK(power(a, s.spec.m).is_identity());
        CHECK(power(b, s.spec.s) == power(a, s.spec.t));
        // b a b^-1 = a^r; for s = 2 this is the same as b^-1 a b = a^r.
        CHECK(compose(compose(b, a), inverse(b)) == power(a, s.spec.r));
        CHECK(a.order() == s.spec.m);
    }
}

TEST_CASE("metacyclic rejects inconsistent presentations") {
    CHECK_THROWS_AS(metacyclic_regular({4, 2, 1, 3}), spec_error);  // t(r-1) != 0
    CHECK_THROWS_AS(metacyclic_regular({4, 2, 0, 2}), spec_error);  // r^s != 1
    CHECK_THROWS_AS(metacyclic_regular({0, 1, 0, 1}), spec_error);
}

TEST_CASE("named groups") {
    CHECK(named_group("cyclic", {5}).order() == 5);
    CHECK(named_group("cyclic", {1}).order() == 1);

    const perm_group d8 = named_group("dihedral", {8});
    CHECK(d8.order() == 8);
    CHECK(d8.generators().size() == 2);
    CHECK_FALSE(is_abelian(d8));

    const perm_group q8 = named_group("quaternion", {8});
    CHECK(q8.order() == 8);
    CHECK_FALSE(is_abelian(q8));
    CHECK(count_involutions(q8) == 1);

    const perm_group q16 = named_group("quaternion", {16});
    CHECK(q16.order() == 16);
    CHECK(count_involutions(q16) == 1);

    const perm_group m16 = named_group("modular", {2, 4});
    CHECK(m16.order() == 16);
    // b^-1 a b = a^5
    const permutation a = m16.generators()[0];
    const permutation b = m16.generators()[1];
    CHECK(compose(compose(inverse(b), a), b) == power(a, 5));

    CHECK(named_group("semidihedral", {16}).order() == 16);

    CHECK_THROWS_AS(named_group("quaternion", {4}), spec_error);
    CHECK_THROWS_AS(named_group("quaternion", {12}), spec_error);
    CHECK_THROWS_AS(named_group("semidihedral", {8}), spec_error);
    CHECK_THROWS_AS(named_group("modular", {2, 3}), spec_error);
    CHECK_THROWS_AS(named_group("modular", {4, 3}), spec_error);
    CHECK_THROWS_AS(named_group("dihedral", {7}), spec_error);
    CHECK_THROWS_AS(named_group("frobnicated", {7}), spec_error);
}

TEST_CASE("lemma24 actions") {
    const perm_group h22 = lemma24_action({2, 2});
    CHECK(h22.degree() == 6);
    CHECK(h22.order() == 4);
    CHECK(is_abelian(h22));
    // Exactly the advertised generators.
    CHECK(h22.generators()[0] == parse_cycles("(1 2)(3 4)", 6));
    CHECK(h22.generators()[1] == parse_cycles("(2 1)(5 6)", 6));

    const perm_group h24 = lemma24_action({2, 4});
    CHECK(h24.degree() == 8);
    CHECK(h24.order() == 8);
    CHECK(is_abelian(h24));

    const perm_group h33 = lemma24_action({3, 3});
    CHECK(h33.degree() == 9);
    CHECK(h33.order() == 9);
    CHECK(h33.generators()[0] == parse_cycles("(1 2 3)(4 5 6)", 9));
    CHECK(h33.generators()[1] == parse_cycles("(3 2 1)(7 8 9)", 9));

    CHECK_THROWS_AS(lemma24_action({1, 4}), spec_error);
    CHECK_THROWS_AS(lemma24_action({2, 3}), spec_error);
}

TEST_CASE("element order multisets") {
    CHECK(abelian_invariant_type(lemma24_action({2, 2})) ==
          std::vector<std::int64_t>{1, 2, 2, 2});
    CHECK(abelian_invariant_type(named_group("cyclic", {4})) ==
          std::vector<std::int64_t>{1, 2, 4, 4});
    // lemma24(2,4) is C2 x C4; oracle computed arithmetically.
    CHECK(abelian_invariant_type(lemma24_action({2, 4})) == cyclic_product_order_type(2, 4));
    CHECK(cyclic_product_order_type(2, 4) ==
          std::vector<std::int64_t>{1, 2, 2, 2, 4, 4, 4, 4});

    CHECK_THROWS_AS(abelian_invariant_type(named_group("dihedral", {8})), spec_error);
}

TEST_CASE("lemma24 matches the abstract product type for every in-range shape") {
    for (std::int64_t n = 2; n <= 4; ++n) {
        for (std::int64_t m = n; 2 * n + m <= 14; m += n) {
            CHECK(abelian_invariant_type(lemma24_action({n, m})) ==
                  cyclic_product_order_type(n, m));
        }
    }
}

TEST_CASE("spec grammar") {
    CHECK(parse_group_spec("cyclic:6").order() == 6);
    CHECK(parse_group_spec("metacyclic:4,2,2,3").order() == 8);
    CHECK(parse_group_spec("direct:cyclic:2+cyclic:2").order() == 4);
    CHECK(parse_group_spec("direct:cyclic:2+cyclic:2+cyclic:2").order() == 8);
    CHECK(parse_group_spec("lemma24:2,4").degree() == 8);

    CHECK_THROWS_AS(parse_group_spec("cyclic"), spec_error);
    CHECK_THROWS_AS(parse_group_spec("cyclic:x"), spec_error);
    CHECK_THROWS_AS(parse_group_spec("direct:cyclic:2"), spec_error);
    CHECK_THROWS_AS(parse_group_spec("file:/nonexistent/group.json"), spec_error);
}

TEST_CASE("file specs round trip through JSON") {
    const perm_group g = parse_group_spec("quaternion:8");
    const std::string path = "test_builders_q8.json";
    write_group_file(g, path);
    const perm_group back = parse_group_spec("file:" + path);
    CHECK(same_element_set(back, g));
    std::remove(path.c_str());
}

// Input data for the decomposition reasoning: the non-quaternion 2-groups
// with a cyclic index-2 subgroup split as a product of two proper subgroups
// with coprime cores, while generalized quaternion groups never split with
// trivial intersection.
TEST_CASE("2-group product decompositions") {
    auto has_core_disjoint_product = [](const perm_group& g) {
        const subgroup_lattice lattice(g);
        const auto& subs = lattice.subgroups();
        const std::uint64_t order = g.order();
        for (std::size_t i = 0; i < subs.size(); ++i) {
            for (std::size_t j = 0; j < subs.size(); ++j) {
                if (subs[i].order == order || subs[j].order == order) {
                    continue; // proper subgroups only
                }
                element_set intersection = subs[i].members;
                intersection &= subs[j].members;
                if (subs[i].order * subs[j].order /
                        static_cast<std::uint64_t>(intersection.count()) != order) {
                    continue; // HK != G
                }
                element_set cores = subs[i].core;
                cores &= subs[j].core;
                if (cores.count() == 1) return true;
            }
        }
        return false;
    };
    auto has_complement_decomposition = [](const perm_group& g) {
        const subgroup_lattice lattice(g);
        const auto& subs = lattice.subgroups();
        const std::uint64_t order = g.order();
        for (std::size_t i = 0; i < subs.size(); ++i) {
            for (std::size_t j = 0; j < subs.size(); ++j) {
                if (subs[i].order == order || subs[j].order == order) continue;
                element_set intersection = subs[i].members;
                intersection &= subs[j].members;
                if (intersection.count() == 1 && subs[i].order * subs[j].order == order) {
                    return true;
                }
            }
        }
        return false;
    };

    for (const std::string spec :
         {"dihedral:8", "dihedral:16", "dihedral:32", "semidihedral:16", "semidihedral:32",
          "modular:2,4", "modular:2,5"}) {
        CAPTURE(spec);
        CHECK(has_core_disjoint_product(parse_group_spec(spec)));
    }
    for (const std::string spec : {"quaternion:8", "quaternion:16", "quaternion:32"}) {
        CAPTURE(spec);
        CHECK_FALSE(has_complement_decomposition(parse_group_spec(spec)));
    }
}
