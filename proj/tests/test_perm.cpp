#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "twoclose/builders.hpp"
#include "twoclose/error.hpp"
#include "twoclose/group_io.hpp"
#include "twoclose/perm_group.hpp"
#include "twoclose/wreath.hpp"

using namespace twoclose;

namespace {

// Independent oracle: all of Sym(n) by next_permutation.
std::vector<permutation> full_symmetric_group(int n) {
    std::vector<std::int32_t> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

} // namespace

TEST_CASE("compose follows the right-action convention") {
    const permutation id = permutation::identity(3);
    const permutation p = parse_cycles("(1 2 3)", 3);
    CHECK(compose(id, p) == p);
    CHECK(compose(p, id) == p);
    CHECK(compose(p, inverse(p)) == id);

    // (0 1 2) then (0 1): 0->1->0, 1->2->2, 2->0->1.
    const permutation q = parse_cycles("(1 2)", 3);
    const permutation r = compose(p, q);
    CHECK(r.images() == std::vector<std::int32_t>{0, 2, 1});
}

TEST_CASE("inverse basics") {
    CHECK(inverse(permutation::identity(4)) == permutation::identity(4));
    const permutation swap01 = parse_cycles("(1 2)", 3);
    CHECK(inverse(swap01) == swap01);
    CHECK(inverse(parse_cycles("(1 2 3)", 3)) == parse_cycles("(1 3 2)", 3));
}

TEST_CASE("powers and orders") {
    const permutation p = parse_cycles("(1 2 3)(4 5)", 5);
    CHECK(p.order() == 6);
    CHECK(power(p, 6).is_identity());
    CHECK(power(p, 0).is_identity());
    CHECK(power(p, -1) == inverse(p));
    CHECK(power(p, -2) == inverse(compose(p, p)));
    CHECK(power(p, 7) == p);
}

TEST_CASE("compose rejects degree mismatch") {
    CHECK_THROWS_AS(compose(permutation::identity(3), permutation::identity(4)), degree_mismatch);
}

TEST_CASE("cycle notation round trip") {
    CHECK(format_cycles(permutation::identity(5)) == "()");
    const permutation p = parse_cycles("(1 2 3)(4 5)", 5);
    CHECK(format_cycles(p) == "(1 2 3)(4 5)");
    CHECK(parse_cycles(format_cycles(p), 5) == p);
    CHECK(parse_cycles("( 1 , 2 , 3 ) (4 5)", 5) == p);
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), spec_error);
    CHECK_THROWS_AS(parse_cycles("(0 1)", 3), spec_error);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), spec_error);
}

TEST_CASE("element enumeration") {
    const perm_group c2(2, {parse_cycles("(1 2)", 2)});
    CHECK(c2.order() == 2);

    // <(0 1), (0 1 2)> is all of Sym(3); oracle by full enumeration.
    const perm_group s3(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
    CHECK(s3.order() == 6);
    CHECK(s3.elements() == full_symmetric_group(3));

    const perm_group lemma = lemma24_action({2, 2});
    CHECK(lemma.order() == 4);
}

TEST_CASE("group axioms hold on the enumerated lists") {
    const std::vector<perm_group> samples = {
        perm_group(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}),
        lemma24_action({2, 2}),
        parse_group_spec("quaternion:8"),
    };
    for (const auto& g : samples) {
        CHECK(g.contains(permutation::identity(g.degree())));
        for (const auto& gen : g.generators()) {
            CHECK(g.contains(gen));
        }
        for (const auto& x : g.elements()) {
            CHECK(g.contains(inverse(x)));
            for (const auto& y : g.elements()) {
                CHECK(g.contains(compose(x, y)));
            }
        }
        CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    }
}

TEST_CASE("enumeration cap is enforced") {
    CHECK_THROWS_AS(perm_group(5, {parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4 5)", 5)}, 100),
                    cap_exceeded);
}

TEST_CASE("orbits") {
    CHECK(orbits(perm_group::trivial(3)) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(orbits(perm_group(3, {parse_cycles("(1 2 3)", 3)})) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    // Oracle: apply all four elements of the lemma24(2,2) group.
    const perm_group lemma = lemma24_action({2, 2});
    CHECK(orbits(lemma) == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
    for (const auto& block : orbits(lemma)) {
        for (const auto& gen : lemma.generators()) {
            for (int p : block) {
                CHECK(std::binary_search(block.begin(), block.end(), gen[p]));
            }
        }
    }
}

TEST_CASE("disjoint direct products") {
    const perm_group c2(2, {parse_cycles("(1 2)", 2)});
    const perm_group product = direct_product_disjoint(c2, c2);
    CHECK(product.degree() == 4);
    CHECK(product.order() == 4);

    const perm_group c3(3, {parse_cycles("(1 2 3)", 3)});
    const perm_group s3(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
    const perm_group mixed = direct_product_disjoint(c3, s3);
    CHECK(mixed.degree() == 6);
    CHECK(mixed.order() == c3.order() * s3.order());

    const perm_group single[] = {c3};
    CHECK(same_element_set(direct_product_disjoint(std::span<const perm_group>(single, 1)), c3));
}

TEST_CASE("relabel conjugates the group") {
    const perm_group g(3, {parse_cycles("(1 2)", 3)});
    CHECK(same_element_set(relabel(g, permutation::identity(3)), g));
    const perm_group h = relabel(g, parse_cycles("(2 3)", 3));
    CHECK(h.contains(parse_cycles("(1 3)", 3)));
    CHECK(h.order() == 2);

    // Order and orbit partition carry over pointwise.
    const perm_group lemma = lemma24_action({2, 2});
    const permutation lambda = parse_cycles("(1 6)(2 5)", 6);
    const perm_group moved = relabel(lemma, lambda);
    CHECK(moved.order() == lemma.order());
    auto mapped = orbits(lemma);
    for (auto& block : mapped) {
        for (int& p : block) p = lambda[p];
        std::sort(block.begin(), block.end());
    }
    std::sort(mapped.begin(), mapped.end());
    auto actual = orbits(moved);
    std::sort(actual.begin(), actual.end());
    CHECK(mapped == actual);
}

TEST_CASE("wreath products") {
    const perm_group c2(2, {parse_cycles("(1 2)", 2)});
    const perm_group c3(3, {parse_cycles("(1 2 3)", 3)});

    const wreath_product w22 = wreath_imprimitive(c2, c2);
    CHECK(w22.degree() == 4);
    CHECK(w22.order() == 8);
    CHECK(w22.enumerate().order() == 8);

    const wreath_product w23 = wreath_imprimitive(c2, c3);
    CHECK(w23.degree() == 6);
    CHECK(w23.order() == 24);
    CHECK(w23.enumerate().order() == 24);

    // N wr 1 is N itself on the single block.
    const wreath_product w_trivial = wreath_imprimitive(c3, perm_group::trivial(1));
    CHECK(same_element_set(w_trivial.enumerate(), c3));

    // Non-regular top group is rejected.
    const perm_group s3(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
    CHECK_THROWS_AS(wreath_imprimitive(c2, s3), spec_error);

    // Coordinate-wise membership agrees with enumeration.
    const perm_group full = w22.enumerate();
    for (const auto& e : full.elements()) {
        CHECK(full.contains(e));
    }
    wreath_product::element elem = w22.identity_element();
    elem.base[0] = parse_cycles("(1 2)", 2);
    CHECK(w22.contains(elem));
    CHECK(full.contains(w22.imprimitive_perm(elem)));
}

TEST_CASE("group JSON round trip") {
    const perm_group g = lemma24_action({2, 4});
    const std::string text = group_to_json(g);
    const perm_group back = group_from_json(text);
    CHECK(same_element_set(back, g));
    CHECK(back.generators() == g.generators());
    CHECK(back.name() == g.name());
    CHECK(group_to_json(back) == text);

    CHECK_THROWS_AS(group_from_json("{"), spec_error);
    CHECK_THROWS_AS(group_from_json("{\"degree\": 2}"), spec_error);
    CHECK_THROWS_AS(group_from_json("{\"degree\": 2, \"generators\": [[0, 0]]}"), spec_error);
}
