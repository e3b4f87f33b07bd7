#include "twoclose/embedding.hpp"

#include <algorithm>
#include <map>

#include "twoclose/error.hpp"

namespace twoclose {

embedding_context make_context(const perm_group& g, const std::vector<permutation>& n_generators,
                               const perm_group& delta, int transversal_rotation) {
    if (n_generators.empty()) throw spec_error("make_context: no generators for N");
    if (delta.generators().size() != n_generators.size()) {
        throw spec_error("make_context: delta must supply one generator image per N generator");
    }
    group_table table(g);
    std::vector<int> n_gen_indices;
    n_gen_indices.reserve(n_generators.size());
    for (const auto& gen : n_generators) {
        int idx = table.index_of(gen);
        if (idx < 0) throw spec_error("make_context: N generator is not an element of the group");
        n_gen_indices.push_back(idx);
    }

    element_set n_members = subgroup_generated_by(table, n_gen_indices);
    for (int e = 0; e < table.size(); ++e) {
        for (int x : n_members.members()) {
            if (!n_members.test(table.conjugate(x, e))) {
                throw spec_error("make_context: N is not normal");
            }
        }
    }

    // theta: BFS over N with the generator correspondence; checks that the
    // map is a well-defined isomorphism onto the delta group.
    std::vector<permutation> theta(static_cast<std::size_t>(table.size()),
                                   permutation::identity(delta.degree()));
    {
        std::vector<bool> known(static_cast<std::size_t>(table.size()), false);
        known[0] = true;
        std::vector<int> queue{0};
        for (std::size_t next = 0; next < queue.size(); ++next) {
            const int e = queue[next];
            for (std::size_t gi = 0; gi < n_gen_indices.size(); ++gi) {
                const int e2 = table.mul(e, n_gen_indices[gi]);
                permutation image = compose(theta[static_cast<std::size_t>(e)],
                                            delta.generators()[gi]);
                if (!known[static_cast<std::size_t>(e2)]) {
                    known[static_cast<std::size_t>(e2)] = true;
                    theta[static_cast<std::size_t>(e2)] = std::move(image);
                    queue.push_back(e2);
                } else if (theta[static_cast<std::size_t>(e2)] != image) {
                    throw spec_error("make_context: delta images do not define a homomorphism on N");
                }
            }
        }
        if (queue.size() != static_cast<std::size_t>(n_members.count())) {
            throw invariant_violation("make_context: N closure mismatch");
        }
        std::map<std::vector<std::int32_t>, int> distinct;
        for (int x : n_members.members()) {
            if (!distinct.emplace(theta[static_cast<std::size_t>(x)].images(), x).second) {
                throw spec_error("make_context: delta action of N is not faithful");
            }
        }
        if (distinct.size() != delta.order()) {
            throw invariant_violation("make_context: delta image does not fill the delta group");
        }
    }

    // Right cosets Ng, numbered by minimal element; coset 0 = N itself.
    std::vector<int> psi(static_cast<std::size_t>(table.size()), -1);
    std::vector<std::vector<int>> cosets;
    for (int e = 0; e < table.size(); ++e) {
        if (psi[static_cast<std::size_t>(e)] >= 0) continue;
        const int c = static_cast<int>(cosets.size());
        std::vector<int> coset;
        for (int x : n_members.members()) {
            const int member = table.mul(x, e);
            psi[static_cast<std::size_t>(member)] = c;
            coset.push_back(member);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    const int k_order = static_cast<int>(cosets.size());

    std::vector<int> transversal(static_cast<std::size_t>(k_order));
    transversal[0] = 0; // identity for the trivial coset, always
    for (int c = 1; c < k_order; ++c) {
        const auto& coset = cosets[static_cast<std::size_t>(c)];
        transversal[static_cast<std::size_t>(c)] =
            coset[static_cast<std::size_t>(transversal_rotation) % coset.size()];
    }

    std::vector<std::vector<int>> k_mul(static_cast<std::size_t>(k_order),
                                        std::vector<int>(static_cast<std::size_t>(k_order)));
    for (int u = 0; u < k_order; ++u) {
        for (int v = 0; v < k_order; ++v) {
            k_mul[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                psi[static_cast<std::size_t>(table.mul(transversal[static_cast<std::size_t>(u)],
                                                       transversal[static_cast<std::size_t>(v)]))];
        }
    }

    return embedding_context{g,
                             std::move(table),
                             std::move(n_members),
                             std::move(n_gen_indices),
                             delta,
                             std::move(theta),
                             k_order,
                             std::move(psi),
                             std::move(cosets),
                             std::move(k_mul),
                             std::move(transversal)};
}

int f_map(const embedding_context& ctx, int x_index, int coset) {
    const int target = ctx.k_mul[static_cast<std::size_t>(coset)]
                                [static_cast<std::size_t>(ctx.psi[static_cast<std::size_t>(x_index)])];
    const int t_u = ctx.transversal[static_cast<std::size_t>(coset)];
    const int t_v = ctx.transversal[static_cast<std::size_t>(target)];
    const int result = ctx.table.mul(ctx.table.mul(t_u, x_index), ctx.table.inv(t_v));
    if (!ctx.n_members.test(result)) {
        throw invariant_violation("f_map: value escaped N (broken transversal)");
    }
    return result;
}

permutation omega_perm(const embedding_context& ctx, int x_index) {
    const int k = ctx.k_order;
    const int psi_x = ctx.psi[static_cast<std::size_t>(x_index)];
    std::vector<std::int32_t> images(static_cast<std::size_t>(ctx.omega_degree()));
    for (int u = 0; u < k; ++u) {
        const permutation& block_map = ctx.theta[static_cast<std::size_t>(f_map(ctx, x_index, u))];
        const int target = ctx.k_mul[static_cast<std::size_t>(u)][static_cast<std::size_t>(psi_x)];
        for (int d = 0; d < ctx.delta.degree(); ++d) {
            images[static_cast<std::size_t>(ctx.omega_point(d, u))] =
                static_cast<std::int32_t>(ctx.omega_point(block_map[d], target));
        }
    }
    return permutation(std::move(images));
}

perm_group universal_action(const embedding_context& ctx) {
    std::vector<permutation> gens;
    gens.reserve(ctx.group.generators().size());
    for (const auto& g : ctx.group.generators()) {
        gens.push_back(omega_perm(ctx, ctx.table.index_of(g)));
    }
    perm_group action(ctx.omega_degree(), std::move(gens));
    if (action.order() != ctx.group.order()) {
        throw invariant_violation("universal_action: induced action is not faithful");
    }
    return action;
}

namespace {

// Right multiplication by coset v, as a permutation of the coset ids.
permutation k_right_mult(const embedding_context& ctx, int v) {
    std::vector<std::int32_t> images(static_cast<std::size_t>(ctx.k_order));
    for (int u = 0; u < ctx.k_order; ++u) {
        images[static_cast<std::size_t>(u)] = static_cast<std::int32_t>(
            ctx.k_mul[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    }
    return permutation(std::move(images));
}

wreath_product::element phi(const embedding_context& ctx, int x_index) {
    std::vector<permutation> base;
    base.reserve(static_cast<std::size_t>(ctx.k_order));
    for (int u = 0; u < ctx.k_order; ++u) {
        base.push_back(ctx.theta[static_cast<std::size_t>(f_map(ctx, x_index, u))]);
    }
    return wreath_product::element{std::move(base),
                                   k_right_mult(ctx, ctx.psi[static_cast<std::size_t>(x_index)])};
}

} // namespace

wreath_embedding_report embed_into_wreath(const embedding_context& ctx) {
    wreath_embedding_report report;

    // K as a regular permutation group on the coset ids.
    std::vector<permutation> k_perms;
    k_perms.reserve(static_cast<std::size_t>(ctx.k_order));
    for (int v = 0; v < ctx.k_order; ++v) {
        k_perms.push_back(k_right_mult(ctx, v));
    }
    const perm_group k_regular =
        perm_group::from_elements(ctx.k_order, std::move(k_perms));
    const wreath_product codomain = wreath_imprimitive(ctx.delta, k_regular);

    const int n = ctx.table.size();
    std::vector<wreath_product::element> images;
    images.reserve(static_cast<std::size_t>(n));
    report.base_in_n = true;
    report.action_consistent = true;
    for (int x = 0; x < n; ++x) {
        images.push_back(phi(ctx, x));
        if (!codomain.contains(images.back())) {
            report.base_in_n = false;
            if (report.first_violation.empty()) {
                report.first_violation = "phi(x) outside the wreath product for element " +
                                         format_cycles(ctx.table.element(x));
            }
        }
        // The wreath element must act on Delta x K exactly like x does, up to
        // the point encodings of the two products.
        const permutation lifted = codomain.imprimitive_perm(images.back());
        const permutation direct = omega_perm(ctx, x);
        if (lifted != direct) {
            report.action_consistent = false;
            if (report.first_violation.empty()) {
                report.first_violation = "wreath action differs from the induced action for " +
                                         format_cycles(ctx.table.element(x));
            }
        }
    }

    report.homomorphism = true;
    for (int x = 0; x < n && report.homomorphism; ++x) {
        for (int y = 0; y < n; ++y) {
            ++report.pairs_checked;
            const wreath_product::element product =
                codomain.multiply(images[static_cast<std::size_t>(x)],
                                  images[static_cast<std::size_t>(y)]);
            if (!(product == images[static_cast<std::size_t>(ctx.table.mul(x, y))])) {
                report.homomorphism = false;
                report.first_violation = "phi(xy) != phi(x)phi(y) at pair (" +
                                         format_cycles(ctx.table.element(x)) + ", " +
                                         format_cycles(ctx.table.element(y)) + ")";
                break;
            }
        }
    }

    report.injective = true;
    for (int x = 0; x < n && report.injective; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (images[static_cast<std::size_t>(x)] == images[static_cast<std::size_t>(y)]) {
                report.injective = false;
                if (report.first_violation.empty()) {
                    report.first_violation = "phi collapses two distinct elements";
                }
                break;
            }
        }
    }
    return report;
}

restriction_report restrict_to_n(const embedding_context& ctx) {
    std::vector<permutation> gens;
    gens.reserve(ctx.n_generator_indices.size());
    for (int gi : ctx.n_generator_indices) {
        gens.push_back(omega_perm(ctx, gi));
    }
    restriction_report report{perm_group(ctx.omega_degree(), std::move(gens)),
                              ctx.k_order, ctx.delta.degree(), true, true, true};

    const std::vector<int> n_elements = ctx.n_members.members();
    for (int k = 0; k < ctx.k_order; ++k) {
        const int t_k = ctx.transversal[static_cast<std::size_t>(k)];
        std::vector<permutation> block_perms;
        block_perms.reserve(n_elements.size());
        for (int x : n_elements) {
            const permutation on_omega = omega_perm(ctx, x);
            // Block invariance: the K coordinate never moves under N.
            std::vector<std::int32_t> restricted(static_cast<std::size_t>(ctx.delta.degree()));
            for (int d = 0; d < ctx.delta.degree(); ++d) {
                const int image = on_omega[ctx.omega_point(d, k)];
                if (image % ctx.k_order != k) {
                    report.blocks_invariant = false;
                }
                restricted[static_cast<std::size_t>(d)] =
                    static_cast<std::int32_t>(image / ctx.k_order);
            }
            permutation block_action(std::move(restricted));
            // theta_k(x) = theta(t_k x t_k^-1) must reproduce the block action.
            const int conj = ctx.table.mul(ctx.table.mul(t_k, x), ctx.table.inv(t_k));
            if (block_action != ctx.theta[static_cast<std::size_t>(conj)]) {
                report.conjugation_formula = false;
            }
            block_perms.push_back(std::move(block_action));
        }
        const perm_group block_group =
            perm_group::from_elements(ctx.delta.degree(), std::move(block_perms));
        if (!same_element_set(block_group, ctx.delta)) {
            report.blocks_match_delta = false;
        }
    }
    return report;
}

permutation tilde_lift(const embedding_context& ctx, const permutation& delta_perm) {
    if (delta_perm.degree() != ctx.delta.degree()) {
        throw degree_mismatch("tilde_lift: degree mismatch with the delta action");
    }
    std::vector<std::int32_t> images(static_cast<std::size_t>(ctx.omega_degree()));
    for (int d = 0; d < ctx.delta.degree(); ++d) {
        for (int k = 0; k < ctx.k_order; ++k) {
            images[static_cast<std::size_t>(ctx.omega_point(d, k))] =
                static_cast<std::int32_t>(ctx.omega_point(delta_perm[d], k));
        }
    }
    return permutation(std::move(images));
}

} // namespace twoclose
