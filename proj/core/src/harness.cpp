#include "twoclose/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "twoclose/builders.hpp"
#include "twoclose/embedding.hpp"
#include "twoclose/error.hpp"

namespace twoclose {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

closure_options options_for(closure_method method) {
    closure_options opts;
    opts.method = method;
    return opts;
}

witness_info witness_from(const perm_group& action, const std::string& description,
                          const perm_group& closure) {
    std::string cycles;
    for (const auto& gen : closure.generators()) {
        if (!action.contains(gen)) {
            cycles = format_cycles(gen);
            break;
        }
    }
    return witness_info{description, action, std::move(cycles), action.order(), closure.order()};
}

} // namespace

std::string to_string(verdict_status s) {
    switch (s) {
        case verdict_status::pass: return "pass";
        case verdict_status::witness_found: return "witness-found";
        case verdict_status::violated: return "violated";
        case verdict_status::skipped: return "skipped";
        case verdict_status::inconclusive: return "inconclusive";
    }
    return "?";
}

verdict check_lemma24(std::int64_t n, std::int64_t m, closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "lemma24(" + std::to_string(n) + "," + std::to_string(m) + ")";

    const perm_group h = lemma24_action({n, m});
    std::ostringstream detail;

    const bool type_ok = abelian_invariant_type(h) == cyclic_product_order_type(n, m);
    detail << "order " << h.order() << (type_ok ? ", element orders match C_n x C_m" : ", WRONG type");

    // The plain n-cycle on the first block.
    std::vector<std::int32_t> images(static_cast<std::size_t>(h.degree()));
    std::iota(images.begin(), images.end(), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = static_cast<std::int32_t>((i + 1) % n);
    }
    const permutation n_cycle(std::move(images));

    const bool member_pairs = wielandt_member(h, n_cycle);
    const bool member_coloring = preserves_coloring(orbitals(h), n_cycle);
    const bool outside = !h.contains(n_cycle);
    const perm_group closure = closure2(h, options_for(method));
    const bool in_closure = closure.contains(n_cycle);
    detail << "; " << format_cycles(n_cycle) << (member_pairs ? " passes" : " FAILS")
           << " the pair criterion, " << (member_coloring ? "preserves" : "BREAKS")
           << " the coloring, " << (outside ? "lies outside the group" : "IS IN the group")
           << "; closure order " << closure.order();

    v.status = (type_ok && member_pairs && member_coloring && outside && in_closure)
                   ? verdict_status::pass
                   : verdict_status::violated;
    if (v.status == verdict_status::pass) {
        v.witness = witness_info{h.name().value_or("lemma24"), h, format_cycles(n_cycle),
                                 h.order(), closure.order()};
    }
    v.detail = detail.str();
    v.elapsed_seconds = seconds_since(start);
    return v;
}

verdict check_tc2_bounded(const perm_group& g, const std::string& name, int max_degree,
                          closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "tc2(" + name + ",D=" + std::to_string(max_degree) + ")";

    const subgroup_lattice lattice(g);
    const std::vector<faithful_action> actions = faithful_actions(lattice, max_degree);
    for (const auto& fa : actions) {
        const perm_group closure = closure2(fa.action, options_for(method));
        if (closure.order() > fa.action.order()) {
            v.status = verdict_status::witness_found;
            v.witness = witness_from(fa.action, fa.description, closure);
            v.detail = "closure jumps from " + std::to_string(fa.action.order()) + " to " +
                       std::to_string(closure.order()) + " on " + fa.description;
            v.elapsed_seconds = seconds_since(start);
            return v;
        }
    }
    v.status = verdict_status::pass;
    v.detail = "all " + std::to_string(actions.size()) + " faithful actions of degree <= " +
               std::to_string(max_degree) + " are closed (bounded evidence, not a certificate)";
    v.elapsed_seconds = seconds_since(start);
    return v;
}

verdict check_theorem_a(const perm_group& g, const std::vector<permutation>& n_generators,
                        const perm_group& delta, const std::string& name, closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "theoremA(" + name + ")";

    const embedding_context ctx = make_context(g, n_generators, delta);
    const restriction_report restriction = restrict_to_n(ctx);
    const perm_group closure_omega = closure2(restriction.n_image, options_for(method));
    const perm_group closure_delta = closure2(ctx.delta, options_for(method));
    const bool closed_omega = same_element_set(closure_omega, restriction.n_image);
    const bool closed_delta = same_element_set(closure_delta, ctx.delta);

    std::ostringstream detail;
    detail << "|N| = " << restriction.n_image.order() << ", closure on the induced degree-"
           << restriction.n_image.degree() << " set has order " << closure_omega.order()
           << " (" << (closed_omega ? "closed" : "not closed") << "), closure on the block has order "
           << closure_delta.order() << " (" << (closed_delta ? "closed" : "not closed") << ")";
    v.detail = detail.str();
    v.status = (closed_omega && !closed_delta) ? verdict_status::violated : verdict_status::pass;
    v.elapsed_seconds = seconds_since(start);
    return v;
}

verdict check_theorem_b(const perm_group& g, const std::string& name, int max_degree,
                        closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "theoremB(" + name + ")";
    if (max_degree <= 0) max_degree = static_cast<int>(g.order());

    const subgroup_lattice lattice(g);
    int non_cyclic_index = -1;
    for (int idx : normal_abelian_subgroups(lattice)) {
        if (!lattice.subgroups()[static_cast<std::size_t>(idx)].cyclic) {
            non_cyclic_index = idx;
            break;
        }
    }
    if (non_cyclic_index < 0) {
        v.status = verdict_status::pass;
        v.detail = "every normal abelian subgroup is cyclic";
        v.elapsed_seconds = seconds_since(start);
        return v;
    }

    const auto& culprit = lattice.subgroups()[static_cast<std::size_t>(non_cyclic_index)];
    verdict sweep = check_tc2_bounded(g, name, max_degree, method);
    v.witness = sweep.witness;
    if (sweep.status == verdict_status::witness_found) {
        v.status = verdict_status::witness_found;
        v.detail = "non-cyclic normal abelian subgroup of order " + std::to_string(culprit.order) +
                   " predicts non-closedness; confirmed: " + sweep.detail;
    } else {
        v.status = verdict_status::inconclusive;
        v.detail = "non-cyclic normal abelian subgroup of order " + std::to_string(culprit.order) +
                   " predicts a witness, but none exists at degree <= " +
                   std::to_string(max_degree);
    }
    v.elapsed_seconds = seconds_since(start);
    return v;
}

verdict check_theorem_c(const perm_group& h, const perm_group& k, const std::string& name,
                        int max_degree, closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "theoremC(" + name + ",D=" + std::to_string(max_degree) + ")";

    if (std::gcd(h.order(), k.order()) != 1) {
        v.status = verdict_status::skipped;
        v.detail = "factor orders are not coprime";
        v.elapsed_seconds = seconds_since(start);
        return v;
    }
    if (!is_nilpotent(h) || !is_nilpotent(k)) {
        v.status = verdict_status::skipped;
        v.detail = "a factor is not nilpotent";
        v.elapsed_seconds = seconds_since(start);
        return v;
    }
    const verdict h_sweep = check_tc2_bounded(h, "H", max_degree, method);
    const verdict k_sweep = check_tc2_bounded(k, "K", max_degree, method);
    if (h_sweep.status != verdict_status::pass || k_sweep.status != verdict_status::pass) {
        v.status = verdict_status::skipped;
        v.detail = "a factor already fails the bounded sweep, hypothesis not met";
        v.elapsed_seconds = seconds_since(start);
        return v;
    }

    const perm_group product =
        direct_product_disjoint(regular_representation(h), regular_representation(k));
    const verdict product_sweep = check_tc2_bounded(product, name, max_degree, method);
    if (product_sweep.status == verdict_status::pass) {
        v.status = verdict_status::pass;
        v.detail = "factors and product all closed at degree <= " + std::to_string(max_degree) +
                   " (" + product_sweep.detail + ")";
    } else {
        v.status = verdict_status::violated;
        v.detail = "product has a witness although both factors passed: " + product_sweep.detail;
        v.witness = product_sweep.witness;
    }
    v.elapsed_seconds = seconds_since(start);
    return v;
}

namespace {

bool subset_is_cyclic(const group_table& table, const std::vector<int>& members) {
    for (int x : members) {
        if (table.order_of(x) == static_cast<std::int64_t>(members.size())) return true;
    }
    return false;
}

} // namespace

verdict check_classification(const perm_group& g, const std::string& name, int max_degree,
                             closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "classification(" + name + ",D=" + std::to_string(max_degree) + ")";

    if (!is_nilpotent(g)) {
        v.status = verdict_status::skipped;
        v.detail = "group is not nilpotent";
        v.elapsed_seconds = seconds_since(start);
        return v;
    }

    const group_table table(g);
    std::vector<int> two_part;
    std::vector<int> odd_part;
    int involutions = 0;
    for (int i = 0; i < table.size(); ++i) {
        const std::int64_t order = table.order_of(i);
        if ((order & (order - 1)) == 0) two_part.push_back(i); // power of two (or 1)
        if (order % 2 == 1) odd_part.push_back(i);
        if (order == 2) ++involutions;
    }
    const bool cyclic = subset_is_cyclic(table, [&] {
        std::vector<int> everything(static_cast<std::size_t>(table.size()));
        std::iota(everything.begin(), everything.end(), 0);
        return everything;
    }());
    const bool quaternion_two_part =
        two_part.size() >= 8 && involutions == 1 && !subset_is_cyclic(table, two_part);
    const bool structure_yes = cyclic || (quaternion_two_part && subset_is_cyclic(table, odd_part));

    const verdict sweep = check_tc2_bounded(g, name, max_degree, method);
    std::ostringstream detail;
    detail << "structure says " << (structure_yes ? "closed" : "not closed") << " ("
           << (cyclic ? "cyclic"
                      : quaternion_two_part ? "quaternion 2-part" : "neither cyclic nor quaternion-type")
           << "); sweep: " << sweep.detail;
    v.detail = detail.str();
    v.witness = sweep.witness;
    if (structure_yes) {
        v.status = sweep.status == verdict_status::pass ? verdict_status::pass
                                                        : verdict_status::violated;
    } else {
        v.status = sweep.status == verdict_status::witness_found ? verdict_status::witness_found
                                                                 : verdict_status::inconclusive;
    }
    v.elapsed_seconds = seconds_since(start);
    return v;
}

verdict check_centralizer_closed(const perm_group& g,
                                 const std::vector<permutation>& n_generators,
                                 const perm_group& action, const std::string& name,
                                 closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "centralizer(" + name + ")";

    const subgroup_lattice lattice(g);
    const group_table& table = lattice.table();
    std::vector<int> n_indices;
    for (const auto& gen : n_generators) {
        const int idx = table.index_of(gen);
        if (idx < 0) throw spec_error("check_centralizer_closed: N generator outside the group");
        n_indices.push_back(idx);
    }
    const group_hom hom = group_hom::make(table, action.generators());

    auto image_group = [&](const element_set& members) {
        std::vector<permutation> perms;
        perms.reserve(static_cast<std::size_t>(members.count()));
        for (int i : members.members()) perms.push_back(hom.image_of(i));
        return perm_group::from_elements(action.degree(), std::move(perms));
    };

    const element_set n_set = subgroup_generated_by(table, n_indices);
    struct case_info {
        std::string label;
        element_set members;
    };
    const std::vector<case_info> cases = {
        {"C_G(N)", centralizer_of(table, n_set)},
        {"Z(G)", center_of(table)},
        {"F(G)", fitting(lattice).members},
    };

    std::ostringstream detail;
    bool all_closed = true;
    for (const auto& c : cases) {
        const perm_group image = image_group(c.members);
        const perm_group closure = closure2(image, options_for(method));
        const bool closed = same_element_set(closure, image);
        all_closed = all_closed && closed;
        detail << c.label << ": order " << image.order() << ", closure " << closure.order()
               << (closed ? " (closed); " : " (NOT closed); ");
    }
    v.detail = detail.str();
    v.status = all_closed ? verdict_status::pass : verdict_status::violated;
    v.elapsed_seconds = seconds_since(start);
    return v;
}

verdict check_disjoint_product(const std::vector<perm_group>& factors, const std::string& name,
                               closure_method method) {
    const auto start = clock_type::now();
    verdict v;
    v.check = "disjoint(" + name + ")";

    const perm_group product = direct_product_disjoint(factors);
    const perm_group closure_of_product = closure2(product, options_for(method));
    std::vector<perm_group> factor_closures;
    factor_closures.reserve(factors.size());
    for (const auto& f : factors) {
        factor_closures.push_back(closure2(f, options_for(method)));
    }
    const perm_group product_of_closures = direct_product_disjoint(factor_closures);

    const bool equal = same_element_set(closure_of_product, product_of_closures);
    std::ostringstream detail;
    detail << "closure(product) order " << closure_of_product.order()
           << ", product(closures) order " << product_of_closures.order()
           << (equal ? " (equal element sets)" : " (DIFFERENT element sets)");
    v.detail = detail.str();
    v.status = equal ? verdict_status::pass : verdict_status::violated;
    v.elapsed_seconds = seconds_since(start);
    return v;
}

namespace {

std::vector<verdict> suite_lemma24() {
    return {check_lemma24(2, 2, closure_method::brute_force),
            check_lemma24(2, 4, closure_method::brute_force),
            check_lemma24(3, 3, closure_method::brute_force)};
}

std::vector<verdict> suite_tc2() {
    std::vector<verdict> out;
    const perm_group v4 = parse_group_spec("direct:cyclic:2+cyclic:2");
    out.push_back(check_tc2_bounded(v4, "C2xC2", 5));
    out.push_back(check_tc2_bounded(v4, "C2xC2", 6));
    out.push_back(check_tc2_bounded(parse_group_spec("direct:cyclic:2+cyclic:4"), "C2xC4", 8));
    out.push_back(check_tc2_bounded(parse_group_spec("quaternion:8"), "quaternion:8", 12));
    for (int n : {2, 3, 4, 5, 7, 8, 9}) {
        out.push_back(check_tc2_bounded(parse_group_spec("cyclic:" + std::to_string(n)),
                                        "cyclic:" + std::to_string(n), 12));
    }
    out.push_back(check_tc2_bounded(parse_group_spec("cyclic:6"), "cyclic:6", 10));
    return out;
}

std::vector<verdict> suite_theorem_a() {
    std::vector<verdict> out;
    {
        const perm_group q8 = parse_group_spec("quaternion:8");
        const permutation a = q8.generators()[0];
        out.push_back(check_theorem_a(q8, {compose(a, a)}, parse_group_spec("cyclic:2"),
                                      "Q8,Z,C2-regular"));
    }
    {
        const perm_group d8 = parse_group_spec("dihedral:8");
        const permutation a = d8.generators()[0];
        const permutation b = d8.generators()[1];
        out.push_back(check_theorem_a(d8, {b, compose(a, a)}, parse_group_spec("lemma24:2,2"),
                                      "D8,V4,lemma24(2,2)"));
    }
    {
        const perm_group c3 = parse_group_spec("cyclic:3");
        out.push_back(check_theorem_a(c3, {c3.generators()[0]}, c3, "C3,C3,natural"));
    }
    return out;
}

std::vector<verdict> suite_theorem_b() {
    std::vector<verdict> out;
    out.push_back(check_theorem_b(parse_group_spec("quaternion:8"), "quaternion:8"));
    for (int n = 2; n <= 12; ++n) {
        out.push_back(
            check_theorem_b(parse_group_spec("cyclic:" + std::to_string(n)),
                            "cyclic:" + std::to_string(n)));
    }
    out.push_back(check_theorem_b(parse_group_spec("dihedral:8"), "dihedral:8"));
    return out;
}

std::vector<verdict> suite_theorem_c() {
    return {
        check_theorem_c(parse_group_spec("quaternion:8"), parse_group_spec("cyclic:3"),
                        "Q8xC3", 12),
        check_theorem_c(parse_group_spec("cyclic:4"), parse_group_spec("cyclic:3"), "C4xC3", 12),
        check_theorem_c(parse_group_spec("cyclic:2"), parse_group_spec("cyclic:3"), "C2xC3", 10),
    };
}

std::vector<verdict> suite_classification() {
    return {
        check_classification(parse_group_spec("direct:cyclic:2+cyclic:4"), "C2xC4", 8),
        check_classification(parse_group_spec("quaternion:8"), "quaternion:8", 12),
        check_classification(parse_group_spec("cyclic:12"), "cyclic:12", 12),
    };
}

std::vector<verdict> suite_centralizer() {
    std::vector<verdict> out;
    const perm_group q8 = parse_group_spec("quaternion:8");
    const perm_group c6 = parse_group_spec("cyclic:6");
    out.push_back(check_centralizer_closed(q8, q8.generators(), q8, "Q8,N=Q8,regular"));
    out.push_back(check_centralizer_closed(c6, c6.generators(), c6, "C6,N=C6,regular"));
    const permutation a = q8.generators()[0];
    out.push_back(
        check_centralizer_closed(q8, {compose(a, a)}, q8, "Q8,N=Z,regular"));
    return out;
}

std::vector<verdict> suite_disjoint() {
    std::vector<verdict> out;
    const perm_group c3(3, {parse_cycles("(1 2 3)", 3)});
    const perm_group s3(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
    const perm_group c2(2, {parse_cycles("(1 2)", 2)});
    out.push_back(check_disjoint_product({c3, s3}, "C3+S3"));
    out.push_back(check_disjoint_product({c2, c2}, "C2+C2"));
    out.push_back(check_disjoint_product({perm_group::trivial(2), c3}, "1+C3"));
    return out;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"lemma24",       "tc2",         "theoremA", "theoremB", "theoremC",
            "classification", "centralizer", "disjoint", "all"};
}

std::vector<verdict> run_suite(const std::string& suite) {
    if (suite == "lemma24") return suite_lemma24();
    if (suite == "tc2") return suite_tc2();
    if (suite == "theoremA") return suite_theorem_a();
    if (suite == "theoremB") return suite_theorem_b();
    if (suite == "theoremC") return suite_theorem_c();
    if (suite == "classification") return suite_classification();
    if (suite == "centralizer") return suite_centralizer();
    if (suite == "disjoint") return suite_disjoint();
    if (suite == "all") {
        std::vector<verdict> out;
        for (const auto& name : suite_names()) {
            if (name == "all") continue;
            std::vector<verdict> part = run_suite(name);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    throw spec_error("unknown suite \"" + suite + "\"");
}

std::string verdicts_to_json(const std::vector<verdict>& verdicts, bool include_timing) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& v : verdicts) {
        nlohmann::json entry;
        entry["check"] = v.check;
        entry["status"] = to_string(v.status);
        entry["detail"] = v.detail;
        if (v.witness) {
            nlohmann::json w;
            w["action_description"] = v.witness->action_description;
            w["degree"] = v.witness->action.degree();
            nlohmann::json gens = nlohmann::json::array();
            for (const auto& gen : v.witness->action.generators()) {
                gens.push_back(format_cycles(gen));
            }
            w["action_generators"] = std::move(gens);
            w["permutation"] = v.witness->permutation_cycles;
            w["group_order"] = v.witness->group_order;
            w["closure_order"] = v.witness->closure_order;
            entry["witness"] = std::move(w);
        }
        if (include_timing) entry["elapsed_seconds"] = v.elapsed_seconds;
        doc.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

bool any_violated(const std::vector<verdict>& verdicts) {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const verdict& v) {
        return v.status == verdict_status::violated;
    });
}

} // namespace twoclose
