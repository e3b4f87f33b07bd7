#pragma once

#include <cstdint>
#include <vector>

#include "twoclose/perm_group.hpp"

namespace twoclose {

/// The imprimitive wreath product N wr K, for N acting on a block Delta and K
/// acting regularly on its own point set. It acts on Delta x K, point (d, u)
/// encoded as d*|K| + u, by (d, u) -> (d^{f(u)}, u^k).
///
/// The full group can be huge (|N|^|K| * |K|), so elements are handled
/// coordinate-wise: membership, multiplication and the induced permutation
/// never enumerate the group. enumerate() materializes it, cap permitting.
class wreath_product {
public:
    struct element {
        std::vector<permutation> base; // one N-part per K-point
        permutation top;               // permutation of K's points

        friend bool operator==(const element&, const element&) = default;
    };

    wreath_product(perm_group base_group, perm_group top_group);

    const perm_group& base_group() const { return base_; }
    const perm_group& top_group() const { return top_; }

    int degree() const { return base_.degree() * top_.degree(); }
    /// |N|^|K| * |K|; throws cap_exceeded on overflow.
    std::uint64_t order() const;

    bool contains(const element& e) const;
    element multiply(const element& a, const element& b) const;
    element identity_element() const;

    /// The permutation of Delta x K induced by a wreath element.
    permutation imprimitive_perm(const element& e) const;

    /// Materialize the whole wreath product as a permutation group.
    perm_group enumerate(std::size_t element_cap = default_element_cap) const;

private:
    perm_group base_;
    perm_group top_;
};

/// Build N wr K. `top` must act regularly (order equal to degree, transitive).
wreath_product wreath_imprimitive(const perm_group& base_on_delta, const perm_group& top_regular);

} // namespace twoclose
