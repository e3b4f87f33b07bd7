#include "twoclose/orbital.hpp"

#include <vector>

#include "twoclose/error.hpp"

namespace twoclose {

orbital_coloring orbitals(const perm_group& g) {
    const int n = g.degree();
    orbital_coloring coloring;
    coloring.degree = n;
    coloring.colors.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);

    auto color_at = [&](int a, int b) -> std::int32_t& {
        return coloring.colors[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                               static_cast<std::size_t>(b)];
    };

    std::vector<std::pair<int, int>> queue;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (color_at(a, b) >= 0) continue;
            const std::int32_t color = coloring.color_count++;
            coloring.representatives.emplace_back(a, b);
            queue.clear();
            queue.emplace_back(a, b);
            color_at(a, b) = color;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                auto [x, y] = queue[i];
                for (const auto& gen : g.generators()) {
                    int xi = gen[x];
                    int yi = gen[y];
                    if (color_at(xi, yi) < 0) {
                        color_at(xi, yi) = color;
                        queue.emplace_back(xi, yi);
                    }
                }
            }
        }
    }
    return coloring;
}

bool preserves_coloring(const orbital_coloring& coloring, const permutation& x) {
    if (x.degree() != coloring.degree) {
        throw degree_mismatch("preserves_coloring: degree mismatch");
    }
    const int n = coloring.degree;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (coloring.at(x[a], x[b]) != coloring.at(a, b)) return false;
        }
    }
    return true;
}

} // namespace twoclose
