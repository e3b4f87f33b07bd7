#include "twoclose/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "twoclose/error.hpp"

namespace twoclose {

permutation::permutation(std::vector<std::int32_t> images) : images_(std::move(images)) {
    if (images_.empty()) {
        throw spec_error("permutation: degree must be positive");
    }
    std::vector<bool> seen(images_.size(), false);
    for (std::int32_t v : images_) {
        if (v < 0 || v >= static_cast<std::int32_t>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw spec_error("permutation: image table is not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

permutation permutation::identity(int degree) {
    std::vector<std::int32_t> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return permutation(std::move(images));
}

bool permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

std::int64_t permutation::order() const {
    std::vector<bool> seen(images_.size(), false);
    std::int64_t result = 1;
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::int64_t len = 0;
        int p = start;
        while (!seen[static_cast<std::size_t>(p)]) {
            seen[static_cast<std::size_t>(p)] = true;
            p = images_[static_cast<std::size_t>(p)];
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

permutation compose(const permutation& p, const permutation& q) {
    if (p.degree() != q.degree()) {
        throw degree_mismatch("compose: degrees differ");
    }
    std::vector<std::int32_t> images(static_cast<std::size_t>(p.degree()));
    for (int a = 0; a < p.degree(); ++a) {
        images[static_cast<std::size_t>(a)] = q[p[a]];
    }
    return permutation(std::move(images));
}

permutation inverse(const permutation& p) {
    std::vector<std::int32_t> images(static_cast<std::size_t>(p.degree()));
    for (int a = 0; a < p.degree(); ++a) {
        images[static_cast<std::size_t>(p[a])] = static_cast<std::int32_t>(a);
    }
    return permutation(std::move(images));
}

permutation power(const permutation& p, std::int64_t k) {
    permutation base = k < 0 ? inverse(p) : p;
    if (k < 0) k = -k;
    permutation acc = permutation::identity(p.degree());
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

permutation conjugate(const permutation& p, const permutation& lambda) {
    // lambda^-1 p lambda: sends lambda(a) to lambda(a^p).
    return compose(compose(inverse(lambda), p), lambda);
}

permutation parse_cycles(const std::string& text, int degree) {
    if (degree < 1) throw spec_error("parse_cycles: degree must be positive");
    std::vector<std::int32_t> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    bool saw_cycle = false;
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw spec_error("parse_cycles: expected '(' in \"" + text + "\"");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw spec_error("parse_cycles: unexpected character in \"" + text + "\"");
            }
            int value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                ++i;
            }
            if (value < 1 || value > degree) {
                throw spec_error("parse_cycles: point " + std::to_string(value) +
                                 " out of range 1.." + std::to_string(degree));
            }
            int point = value - 1;
            if (used[static_cast<std::size_t>(point)]) {
                throw spec_error("parse_cycles: point " + std::to_string(value) + " repeated");
            }
            used[static_cast<std::size_t>(point)] = true;
            cycle.push_back(point);
            skip_ws();
        }
        if (i >= text.size()) throw spec_error("parse_cycles: unbalanced '(' in \"" + text + "\"");
        ++i; // ')'
        saw_cycle = true;
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            images[static_cast<std::size_t>(cycle[j])] =
                static_cast<std::int32_t>(cycle[(j + 1) % cycle.size()]);
        }
        skip_ws();
    }
    if (!saw_cycle) throw spec_error("parse_cycles: no cycles in \"" + text + "\"");
    return permutation(std::move(images));
}

std::string format_cycles(const permutation& p) {
    std::ostringstream out;
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    bool any = false;
    for (int start = 0; start < p.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || p[start] == start) {
            seen[static_cast<std::size_t>(start)] = true;
            continue;
        }
        any = true;
        out << '(';
        int a = start;
        bool first = true;
        while (!seen[static_cast<std::size_t>(a)]) {
            seen[static_cast<std::size_t>(a)] = true;
            if (!first) out << ' ';
            out << (a + 1);
            first = false;
            a = p[a];
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

} // namespace twoclose
