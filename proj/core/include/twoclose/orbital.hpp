#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twoclose/perm_group.hpp"

namespace twoclose {

/// The orbit partition of G on ordered pairs, stored as an n x n color matrix.
///
/// Color ids are assigned in first-encounter order scanning pairs
/// lexicographically, so the coloring of a given group is canonical.
struct orbital_coloring {
    int degree = 0;
    std::int32_t color_count = 0;
    std::vector<std::int32_t> colors;                   // row-major, n*n
    std::vector<std::pair<int, int>> representatives;   // minimal pair per color

    std::int32_t at(int a, int b) const {
        return colors[static_cast<std::size_t>(a) * static_cast<std::size_t>(degree) +
                      static_cast<std::size_t>(b)];
    }
};

orbital_coloring orbitals(const perm_group& g);

/// Whether x maps every color class onto itself.
bool preserves_coloring(const orbital_coloring& coloring, const permutation& x);

} // namespace twoclose
