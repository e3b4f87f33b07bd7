#include "twoclose/wreath.hpp"

#include <limits>

#include "twoclose/error.hpp"

namespace twoclose {

wreath_product::wreath_product(perm_group base_group, perm_group top_group)
    : base_(std::move(base_group)), top_(std::move(top_group)) {}

std::uint64_t wreath_product::order() const {
    std::uint64_t result = top_.order();
    for (int i = 0; i < top_.degree(); ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base_.order()) {
            throw cap_exceeded("wreath product order overflows 64 bits");
        }
        result *= base_.order();
    }
    return result;
}

bool wreath_product::contains(const element& e) const {
    if (e.top.degree() != top_.degree()) return false;
    if (!top_.contains(e.top)) return false;
    if (static_cast<int>(e.base.size()) != top_.degree()) return false;
    for (const auto& part : e.base) {
        if (part.degree() != base_.degree() || !base_.contains(part)) return false;
    }
    return true;
}

wreath_product::element wreath_product::multiply(const element& a, const element& b) const {
    // (f, k)(f', k') acts as (d, u) -> (d^{f(u) f'(u^k)}, u^{kk'}).
    std::vector<permutation> base;
    base.reserve(a.base.size());
    for (int u = 0; u < top_.degree(); ++u) {
        base.push_back(compose(a.base[static_cast<std::size_t>(u)],
                               b.base[static_cast<std::size_t>(a.top[u])]));
    }
    return element{std::move(base), compose(a.top, b.top)};
}

wreath_product::element wreath_product::identity_element() const {
    return element{std::vector<permutation>(static_cast<std::size_t>(top_.degree()),
                                            permutation::identity(base_.degree())),
                   permutation::identity(top_.degree())};
}

permutation wreath_product::imprimitive_perm(const element& e) const {
    const int k = top_.degree();
    std::vector<std::int32_t> images(static_cast<std::size_t>(degree()));
    for (int d = 0; d < base_.degree(); ++d) {
        for (int u = 0; u < k; ++u) {
            int image_d = e.base[static_cast<std::size_t>(u)][d];
            int image_u = e.top[u];
            images[static_cast<std::size_t>(d * k + u)] =
                static_cast<std::int32_t>(image_d * k + image_u);
        }
    }
    return permutation(std::move(images));
}

perm_group wreath_product::enumerate(std::size_t element_cap) const {
    if (order() > element_cap) {
        throw cap_exceeded("wreath product of order " + std::to_string(order()) +
                           " exceeds cap of " + std::to_string(element_cap));
    }
    // The wreath product is exactly all (f, k) pairs; walk them with an
    // odometer over the base coordinates.
    std::vector<permutation> perms;
    perms.reserve(static_cast<std::size_t>(order()));
    const auto& base_elems = base_.elements();
    std::vector<std::size_t> odo(static_cast<std::size_t>(top_.degree()), 0);
    while (true) {
        std::vector<permutation> base;
        base.reserve(odo.size());
        for (std::size_t idx : odo) base.push_back(base_elems[idx]);
        for (const auto& k : top_.elements()) {
            perms.push_back(imprimitive_perm(element{base, k}));
        }
        std::size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == base_elems.size()) {
            odo[pos] = 0;
            ++pos;
        }
        if (pos == odo.size()) break;
    }
    return perm_group::from_elements(degree(), std::move(perms), element_cap);
}

wreath_product wreath_imprimitive(const perm_group& base_on_delta, const perm_group& top_regular) {
    if (top_regular.order() != static_cast<std::uint64_t>(top_regular.degree())) {
        throw spec_error("wreath_imprimitive: top group must act regularly");
    }
    if (orbits(top_regular).size() != 1 && top_regular.degree() > 1) {
        throw spec_error("wreath_imprimitive: top group must be transitive");
    }
    return wreath_product(base_on_delta, top_regular);
}

} // namespace twoclose
