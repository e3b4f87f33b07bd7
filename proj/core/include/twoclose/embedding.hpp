#pragma once

#include <string>
#include <vector>

#include "twoclose/structure.hpp"
#include "twoclose/wreath.hpp"

namespace twoclose {

/// Everything needed to lift a faithful action of a normal subgroup N on a
/// block Delta to a faithful action of the whole group on Delta x (G/N):
/// the coset quotient K with its multiplication table, the map psi onto it,
/// a transversal with the identity representing the trivial coset, and the
/// isomorphism theta from N onto its Delta-image.
struct embedding_context {
    perm_group group;                        // G
    group_table table;                       // table of G (element 0 = identity)
    element_set n_members;                   // N as indices into the table
    std::vector<int> n_generator_indices;    // the generators N was given by
    perm_group delta;                        // faithful image of N on Delta
    std::vector<permutation> theta;          // per G-element index; valid on N
    int k_order = 0;                         // |K| = [G:N]
    std::vector<int> psi;                    // G-element index -> coset id
    std::vector<std::vector<int>> cosets;    // coset id -> sorted element indices
    std::vector<std::vector<int>> k_mul;     // coset multiplication table
    std::vector<int> transversal;            // coset id -> element index; [0] = 0

    int omega_degree() const { return delta.degree() * k_order; }
    /// Point encoding on Omega = Delta x K.
    int omega_point(int delta_point, int coset) const { return delta_point * k_order + coset; }
};

/// Build the context. `n_generators` must generate a normal subgroup of g,
/// and `delta` must list one generator image per entry of `n_generators`;
/// the induced map must be an isomorphism onto a faithful Delta-action.
/// `transversal_rotation` picks the k-th smallest element of each nontrivial
/// coset instead of the smallest (the trivial coset always gets the identity).
embedding_context make_context(const perm_group& g, const std::vector<permutation>& n_generators,
                               const perm_group& delta, int transversal_rotation = 0);

/// f_x(u) = t_u x t_{u psi(x)}^{-1}; always lands in N.
int f_map(const embedding_context& ctx, int x_index, int coset);

/// The permutation of Omega induced by x: (d, k) -> (d^{theta(f_x(k))}, k psi(x)).
permutation omega_perm(const embedding_context& ctx, int x_index);

/// The induced faithful action of the whole group on Omega.
perm_group universal_action(const embedding_context& ctx);

struct wreath_embedding_report {
    bool homomorphism = false;     // phi(xy) = phi(x) phi(y) for all pairs
    bool injective = false;        // all phi(x) distinct
    bool base_in_n = false;        // every base coordinate lies in N's image
    bool action_consistent = false;// wreath element's block action = omega_perm
    long pairs_checked = 0;
    std::string first_violation;   // empty when everything holds
    bool ok() const { return homomorphism && injective && base_in_n && action_consistent; }
};

/// Check phi(x) = (f_x, psi(x)) into the wreath product of the Delta-image
/// with the regular quotient, over all |G|^2 pairs.
wreath_embedding_report embed_into_wreath(const embedding_context& ctx);

struct restriction_report {
    perm_group n_image;            // N acting on Omega
    int block_count = 0;
    int block_size = 0;
    bool blocks_invariant = false;         // N fixes every Delta x {k} setwise
    bool conjugation_formula = false;      // block k action = theta(t_k n t_k^-1)
    bool blocks_match_delta = false;       // each block's group equals the Delta image
    bool ok() const { return blocks_invariant && conjugation_formula && blocks_match_delta; }
};

/// Restrict the induced action to N and verify its block structure: |G:N|
/// invariant copies of Delta, each carried over by a conjugated transversal.
restriction_report restrict_to_n(const embedding_context& ctx);

/// Lift a permutation of Delta to Omega by applying it inside every block:
/// (d, k) -> (d^x, k).
permutation tilde_lift(const embedding_context& ctx, const permutation& delta_perm);

} // namespace twoclose
