#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twoclose {

/// A permutation of {0,...,n-1}, stored as an image table.
///
/// The action is written on the right throughout: the image of a point `a`
/// under `p` is `p[a]`, and compose(p, q) applies p first, so that
/// a^(pq) = (a^p)^q.
class permutation {
public:
    explicit permutation(std::vector<std::int32_t> images);

    static permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    std::int32_t operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::vector<std::int32_t>& images() const { return images_; }

    bool is_identity() const;

    /// Order as an element of the symmetric group (lcm of cycle lengths).
    std::int64_t order() const;

    friend bool operator==(const permutation&, const permutation&) = default;
    // Lexicographic on image tables; the canonical order used everywhere.
    friend auto operator<=>(const permutation& a, const permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<std::int32_t> images_;
};

permutation compose(const permutation& p, const permutation& q);
permutation inverse(const permutation& p);
permutation power(const permutation& p, std::int64_t k);

/// Conjugate p by lambda: the permutation acting as lambda(a) -> lambda(a^p).
permutation conjugate(const permutation& p, const permutation& lambda);

/// Parse 1-based cycle notation, e.g. "(1 2 3)(4 5)" or "(1,2,3)".
/// Whitespace-insensitive; "()" is the identity. Points must lie in [1, degree].
permutation parse_cycles(const std::string& text, int degree);

/// Print in 1-based cycle notation; the identity prints as "()".
std::string format_cycles(const permutation& p);

} // namespace twoclose
