#include "twoclose/builders.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "twoclose/error.hpp"
#include "twoclose/group_io.hpp"

namespace twoclose {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t result = mod(1, m);
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mod(result * base, m);
        base = mod(base * base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

} // namespace

void metacyclic_spec::validate() const {
    if (m < 1 || s < 1 || t < 0 || r < 0) {
        throw spec_error("metacyclic: need m >= 1, s >= 1, t >= 0, r >= 0");
    }
    if (pow_mod(r, s, m) != mod(1, m)) {
        throw spec_error("metacyclic: r^s != 1 (mod m)");
    }
    if (mod(t * (r - 1), m) != 0) {
        throw spec_error("metacyclic: t(r-1) != 0 (mod m)");
    }
}

perm_group metacyclic_regular(const metacyclic_spec& spec, std::size_t element_cap) {
    spec.validate();
    const std::int64_t m = spec.m;
    const std::int64_t s = spec.s;
    const std::int64_t degree = m * s;
    if (degree > static_cast<std::int64_t>(element_cap)) {
        throw cap_exceeded("metacyclic: order " + std::to_string(degree) + " exceeds cap");
    }

    // (i,j) * (i',j') = (i + i' r^j + t floor((j+j')/s) mod m, (j+j') mod s)
    auto multiply = [&](std::int64_t i, std::int64_t j, std::int64_t i2, std::int64_t j2) {
        std::int64_t carry = (j + j2) / s;
        std::int64_t new_i = mod(i + i2 * pow_mod(spec.r, j, m) + spec.t * carry, m);
        std::int64_t new_j = (j + j2) % s;
        return std::pair{new_i, new_j};
    };
    auto right_mult_perm = [&](std::int64_t i2, std::int64_t j2) {
        std::vector<std::int32_t> images(static_cast<std::size_t>(degree));
        for (std::int64_t i = 0; i < m; ++i) {
            for (std::int64_t j = 0; j < s; ++j) {
                auto [ni, nj] = multiply(i, j, i2, j2);
                images[static_cast<std::size_t>(i * s + j)] =
                    static_cast<std::int32_t>(ni * s + nj);
            }
        }
        return permutation(std::move(images));
    };

    std::vector<permutation> gens;
    gens.push_back(right_mult_perm(1 % m, 0)); // a
    if (s > 1) gens.push_back(right_mult_perm(0, 1)); // b
    perm_group g(static_cast<int>(degree), std::move(gens), element_cap);
    if (g.order() != static_cast<std::uint64_t>(degree)) {
        throw invariant_violation("metacyclic: regular action order mismatch");
    }
    return g;
}

perm_group named_group(const std::string& family, const std::vector<std::int64_t>& params,
                       std::size_t element_cap) {
    auto expect_params = [&](std::size_t count) {
        if (params.size() != count) {
            throw spec_error(family + ": expected " + std::to_string(count) + " parameter(s)");
        }
    };
    metacyclic_spec spec;
    if (family == "cyclic") {
        expect_params(1);
        if (params[0] < 1) throw spec_error("cyclic: order must be >= 1");
        spec = {params[0], 1, 0, 1 % params[0]};
    } else if (family == "dihedral") {
        expect_params(1);
        const std::int64_t order = params[0];
        if (order < 4 || order % 2 != 0) {
            throw spec_error("dihedral: order must be even and >= 4");
        }
        spec = {order / 2, 2, 0, order / 2 - 1};
    } else if (family == "quaternion") {
        expect_params(1);
        const std::int64_t order = params[0];
        if (order < 8 || !is_power_of_two(order)) {
            throw spec_error("quaternion: order must be 2^k with k >= 3");
        }
        spec = {order / 2, 2, order / 4, order / 2 - 1};
    } else if (family == "semidihedral") {
        expect_params(1);
        const std::int64_t order = params[0];
        if (order < 16 || !is_power_of_two(order)) {
            throw spec_error("semidihedral: order must be 2^k with k >= 4");
        }
        spec = {order / 2, 2, 0, order / 4 - 1};
    } else if (family == "modular") {
        expect_params(2);
        const std::int64_t p = params[0];
        const std::int64_t k = params[1];
        if (!is_prime(p)) throw spec_error("modular: p must be prime");
        if (k < 3 || (p == 2 && k < 4)) {
            throw spec_error("modular: order p^k needs k >= 3 (k >= 4 for p = 2)");
        }
        std::int64_t m = 1;
        for (std::int64_t i = 0; i < k - 1; ++i) {
            if (m > static_cast<std::int64_t>(element_cap)) {
                throw cap_exceeded("modular: order overflows cap");
            }
            m *= p;
        }
        spec = {m, p, 0, 1 + m / p};
    } else {
        throw spec_error("unknown group family \"" + family + "\"");
    }
    return metacyclic_regular(spec, element_cap)
        .with_name(family == "modular"
                       ? family + ":" + std::to_string(params[0]) + "," + std::to_string(params[1])
                       : family + ":" + std::to_string(params[0]));
}

void lemma24_spec::validate() const {
    if (n < 2) throw spec_error("lemma24: n must be >= 2");
    if (m < n || m % n != 0) throw spec_error("lemma24: m must be a multiple of n");
}

perm_group lemma24_action(const lemma24_spec& spec, std::size_t element_cap) {
    spec.validate();
    const std::int64_t n = spec.n;
    const std::int64_t m = spec.m;
    const int degree = static_cast<int>(2 * n + m);

    // x1 = (0 .. n-1)(n .. 2n-1)
    std::vector<std::int32_t> x1(static_cast<std::size_t>(degree));
    std::iota(x1.begin(), x1.end(), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        x1[static_cast<std::size_t>(i)] = static_cast<std::int32_t>((i + 1) % n);
        x1[static_cast<std::size_t>(n + i)] = static_cast<std::int32_t>(n + (i + 1) % n);
    }
    // x2 = (n-1 n-2 .. 0)(2n .. 2n+m-1)
    std::vector<std::int32_t> x2(static_cast<std::size_t>(degree));
    std::iota(x2.begin(), x2.end(), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        x2[static_cast<std::size_t>(i)] = static_cast<std::int32_t>((i - 1 + n) % n);
    }
    for (std::int64_t i = 0; i < m; ++i) {
        x2[static_cast<std::size_t>(2 * n + i)] = static_cast<std::int32_t>(2 * n + (i + 1) % m);
    }
    return perm_group(degree, {permutation(std::move(x1)), permutation(std::move(x2))},
                      element_cap)
        .with_name("lemma24:" + std::to_string(n) + "," + std::to_string(m));
}

std::vector<std::int64_t> abelian_invariant_type(const perm_group& g) {
    for (const auto& a : g.generators()) {
        for (const auto& b : g.generators()) {
            if (compose(a, b) != compose(b, a)) {
                throw spec_error("abelian_invariant_type: group is not abelian");
            }
        }
    }
    std::vector<std::int64_t> orders;
    orders.reserve(g.elements().size());
    for (const auto& e : g.elements()) orders.push_back(e.order());
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<std::int64_t> cyclic_product_order_type(std::int64_t n, std::int64_t m) {
    std::vector<std::int64_t> orders;
    orders.reserve(static_cast<std::size_t>(n * m));
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < m; ++j) {
            orders.push_back(std::lcm(n / std::gcd(i, n), m / std::gcd(j, m)));
        }
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& context) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw spec_error(context + ": bad integer \"" + token + "\"");
        }
        values.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

} // namespace

perm_group parse_group_spec(const std::string& spec, std::size_t element_cap) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
        throw spec_error("group spec \"" + spec + "\" has no ':' (try cyclic:6)");
    }
    const std::string head = spec.substr(0, colon);
    const std::string tail = spec.substr(colon + 1);
    if (tail.empty()) throw spec_error("group spec \"" + spec + "\" has empty parameters");

    if (head == "file") {
        return read_group_file(tail, element_cap);
    }
    if (head == "direct") {
        std::vector<perm_group> factors;
        std::size_t pos = 0;
        while (pos <= tail.size()) {
            std::size_t plus = tail.find('+', pos);
            std::string part = tail.substr(pos, plus == std::string::npos ? plus : plus - pos);
            factors.push_back(parse_group_spec(part, element_cap));
            if (plus == std::string::npos) break;
            pos = plus + 1;
        }
        if (factors.size() < 2) throw spec_error("direct: needs at least two '+'-separated parts");
        return direct_product_disjoint(factors, element_cap).with_name(spec);
    }
    if (head == "lemma24") {
        auto params = parse_int_list(tail, "lemma24");
        if (params.size() != 2) throw spec_error("lemma24: expected lemma24:n,m");
        return lemma24_action({params[0], params[1]}, element_cap);
    }
    if (head == "metacyclic") {
        auto params = parse_int_list(tail, "metacyclic");
        if (params.size() != 4) throw spec_error("metacyclic: expected metacyclic:m,s,t,r");
        return metacyclic_regular({params[0], params[1], params[2], params[3]}, element_cap)
            .with_name(spec);
    }
    return named_group(head, parse_int_list(tail, head), element_cap);
}

} // namespace twoclose
