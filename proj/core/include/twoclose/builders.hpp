#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twoclose/perm_group.hpp"

namespace twoclose {

/// Presentation <a, b | a^m = 1, b^s = a^t, b a b^-1 = a^r>, realized through
/// its right-regular action on the normal-form words a^i b^j. Consistency
/// needs r^s = 1 (mod m) and t(r - 1) = 0 (mod m); the group then has order
/// exactly m*s. For s = 2 the conjugation relation reads b^-1 a b = a^r as
/// well, which covers every named 2-group here.
struct metacyclic_spec {
    std::int64_t m = 1; // order of a
    std::int64_t s = 1; // order of b modulo <a>
    std::int64_t t = 0; // b^s = a^t
    std::int64_t r = 1; // conjugation exponent

    void validate() const; // throws spec_error when inconsistent
};

/// Right-regular action on m*s points; word a^i b^j sits at point i*s + j.
perm_group metacyclic_regular(const metacyclic_spec& spec,
                              std::size_t element_cap = default_element_cap);

/// Named families mapped onto metacyclic specs:
///   cyclic:n (n >= 1), dihedral:n (order n, even n >= 4),
///   quaternion:2^k (k >= 3), semidihedral:2^k (k >= 4),
///   modular:p,k (order p^k; k >= 3, and k >= 4 when p = 2).
perm_group named_group(const std::string& family, const std::vector<std::int64_t>& params,
                       std::size_t element_cap = default_element_cap);

struct lemma24_spec {
    std::int64_t n = 2; // n >= 2
    std::int64_t m = 2; // multiple of n

    void validate() const;
};

/// The two-generator action on 2n + m points whose group is C_n x C_m but
/// whose 2-closure picks up the plain n-cycle on the first block: generators
/// (0..n-1)(n..2n-1) and (n-1..0)(2n..2n+m-1), exactly in that labeling.
perm_group lemma24_action(const lemma24_spec& spec,
                          std::size_t element_cap = default_element_cap);

/// Sorted multiset of the orders of all elements. For finite abelian groups
/// this determines the isomorphism type. Throws on non-abelian input.
std::vector<std::int64_t> abelian_invariant_type(const perm_group& g);

/// Multiset of element orders of the abstract group C_n x C_m.
std::vector<std::int64_t> cyclic_product_order_type(std::int64_t n, std::int64_t m);

/// Group spec grammar:
///   cyclic:n | dihedral:n | quaternion:n | semidihedral:n | modular:p,k
///   | metacyclic:m,s,t,r | lemma24:n,m | direct:SPEC+SPEC[+SPEC...]
///   | file:PATH
perm_group parse_group_spec(const std::string& spec,
                            std::size_t element_cap = default_element_cap);

} // namespace twoclose
