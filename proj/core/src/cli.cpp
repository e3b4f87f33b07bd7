#include "twoclose/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoclose/builders.hpp"
#include "twoclose/closure.hpp"
#include "twoclose/embedding.hpp"
#include "twoclose/error.hpp"
#include "twoclose/group_io.hpp"
#include "twoclose/harness.hpp"

namespace twoclose::cli {

namespace {

using nlohmann::json;

json group_json(const perm_group& g) {
    json doc;
    doc["degree"] = g.degree();
    json gens = json::array();
    for (const auto& gen : g.generators()) gens.push_back(gen.images());
    doc["generators"] = std::move(gens);
    if (g.name()) doc["name"] = *g.name();
    return doc;
}

std::vector<std::string> cycle_strings(const std::vector<permutation>& perms) {
    std::vector<std::string> out;
    out.reserve(perms.size());
    for (const auto& p : perms) out.push_back(format_cycles(p));
    return out;
}

int cmd_make(const std::string& spec, std::ostream& out) {
    out << group_to_json(parse_group_spec(spec));
    return 0;
}

int cmd_analyze(const std::string& spec, bool as_json, std::ostream& out) {
    const perm_group g = parse_group_spec(spec);
    const subgroup_lattice lattice(g);
    const group_table& table = lattice.table();

    const element_set center = center_of(table);
    const subgroup_info fit = fitting(lattice);
    const std::vector<int> normal_abelian = normal_abelian_subgroups(lattice);

    element_set everything(table.size());
    for (int i = 0; i < table.size(); ++i) everything.set(i);
    const bool nilpotent = set_is_nilpotent(table, everything);
    const bool abelian = set_is_abelian(table, everything);
    const bool cyclic = set_is_cyclic(table, everything);

    if (as_json) {
        json doc;
        doc["spec"] = spec;
        doc["degree"] = g.degree();
        doc["order"] = g.order();
        doc["nilpotent"] = nilpotent;
        doc["abelian"] = abelian;
        doc["cyclic"] = cyclic;
        doc["center_order"] = center.count();
        doc["fitting_order"] = fit.order;
        doc["subgroup_count"] = lattice.subgroups().size();
        doc["subgroup_class_count"] = lattice.conjugacy_classes().size();
        json nab = json::array();
        for (int idx : normal_abelian) {
            const auto& sub = lattice.subgroups()[static_cast<std::size_t>(idx)];
            nab.push_back({{"order", sub.order}, {"cyclic", sub.cyclic}});
        }
        doc["normal_abelian_subgroups"] = std::move(nab);
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "group " << spec << ": degree " << g.degree() << ", order " << g.order() << "\n";
    out << "  nilpotent: " << (nilpotent ? "yes" : "no") << ", abelian: "
        << (abelian ? "yes" : "no") << ", cyclic: " << (cyclic ? "yes" : "no") << "\n";
    out << "  center order " << center.count() << ", Fitting subgroup order " << fit.order << "\n";
    out << "  subgroups: " << lattice.subgroups().size() << " in "
        << lattice.conjugacy_classes().size() << " conjugacy classes\n";
    out << "  normal abelian subgroups (order, cyclic?):";
    for (int idx : normal_abelian) {
        const auto& sub = lattice.subgroups()[static_cast<std::size_t>(idx)];
        out << " (" << sub.order << "," << (sub.cyclic ? "y" : "n") << ")";
    }
    out << "\n";
    return 0;
}

int cmd_orbitals(const std::string& spec, bool as_json, std::ostream& out) {
    const perm_group g = parse_group_spec(spec);
    const orbital_coloring coloring = orbitals(g);
    if (as_json) {
        out << coloring_to_json(coloring);
        return 0;
    }
    out << "orbital coloring of " << spec << ": " << coloring.color_count << " colors on degree "
        << coloring.degree << "\n";
    for (int a = 0; a < coloring.degree; ++a) {
        out << "  ";
        for (int b = 0; b < coloring.degree; ++b) {
            out << coloring.at(a, b) << (b + 1 == coloring.degree ? "" : " ");
        }
        out << "\n";
    }
    return 0;
}

int cmd_closure(const std::string& spec, closure_method method, bool as_json, std::ostream& out) {
    const perm_group g = parse_group_spec(spec);
    closure_options options;
    options.method = method;
    const perm_group closure = closure2(g, options);

    std::vector<permutation> new_generators;
    for (const auto& gen : closure.generators()) {
        if (!g.contains(gen)) new_generators.push_back(gen);
    }
    if (as_json) {
        json doc;
        doc["spec"] = spec;
        doc["method"] = to_string(method);
        doc["degree"] = g.degree();
        doc["group_order"] = g.order();
        doc["closure_order"] = closure.order();
        doc["is_2closed"] = closure.order() == g.order();
        doc["closure_generators"] = cycle_strings(closure.generators());
        doc["witness_generators"] = cycle_strings(new_generators);
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "closure of " << spec << " (degree " << g.degree() << "): order " << g.order()
        << " -> " << closure.order() << (closure.order() == g.order() ? " (2-closed)" : "")
        << "\n";
    out << "  closure generators:";
    for (const auto& s : cycle_strings(closure.generators())) out << " " << s;
    out << "\n";
    if (!new_generators.empty()) {
        out << "  outside the group:";
        for (const auto& s : cycle_strings(new_generators)) out << " " << s;
        out << "\n";
    }
    return 0;
}

int cmd_tc2(const std::string& spec, int max_degree, closure_method method, bool as_json,
            std::ostream& out) {
    const perm_group g = parse_group_spec(spec);
    const verdict v = check_tc2_bounded(g, spec, max_degree, method);
    if (as_json) {
        out << verdicts_to_json({v});
    } else {
        out << v.check << ": " << to_string(v.status) << " -- " << v.detail << "\n";
        if (v.witness) {
            out << "  witness action: " << v.witness->action_description << "\n";
            out << "  witness permutation: " << v.witness->permutation_cycles << "\n";
        }
    }
    return v.status == verdict_status::witness_found ? 3 : 0;
}

int cmd_embed(const std::string& group_spec, const std::string& normal_gens,
              const std::string& delta_spec, int rotation, bool as_json,
              const std::string& output_path, std::ostream& out) {
    const perm_group g = parse_group_spec(group_spec);
    std::vector<permutation> n_gens;
    std::size_t pos = 0;
    while (pos <= normal_gens.size()) {
        std::size_t semi = normal_gens.find(';', pos);
        const std::string part =
            normal_gens.substr(pos, semi == std::string::npos ? semi : semi - pos);
        if (!part.empty()) n_gens.push_back(parse_cycles(part, g.degree()));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (n_gens.empty()) throw spec_error("embed: --normal must list at least one generator");

    const perm_group delta = parse_group_spec(delta_spec);
    const embedding_context ctx = make_context(g, n_gens, delta, rotation);
    const perm_group omega = universal_action(ctx).with_name("embedding of " + group_spec);
    const wreath_embedding_report wreath_report = embed_into_wreath(ctx);
    const restriction_report restriction = restrict_to_n(ctx);

    json doc;
    doc["omega_action"] = group_json(omega);
    json report;
    report["quotient_order"] = ctx.k_order;
    report["omega_degree"] = ctx.omega_degree();
    report["faithful"] = omega.order() == g.order();
    report["homomorphism"] = wreath_report.homomorphism;
    report["injective"] = wreath_report.injective;
    report["base_in_n"] = wreath_report.base_in_n;
    report["action_consistent"] = wreath_report.action_consistent;
    report["pairs_checked"] = wreath_report.pairs_checked;
    if (!wreath_report.first_violation.empty()) {
        report["first_violation"] = wreath_report.first_violation;
    }
    report["block_count"] = restriction.block_count;
    report["block_size"] = restriction.block_size;
    report["blocks_invariant"] = restriction.blocks_invariant;
    report["conjugation_formula"] = restriction.conjugation_formula;
    report["blocks_match_delta"] = restriction.blocks_match_delta;
    doc["report"] = std::move(report);

    if (!output_path.empty()) {
        std::ofstream file(output_path);
        if (!file) throw spec_error("cannot open for writing: " + output_path);
        file << doc.dump(2) << "\n";
    }
    if (as_json) {
        out << doc.dump(2) << "\n";
    } else {
        out << "embedding of " << group_spec << " over N = <" << normal_gens << "> with block "
            << delta_spec << "\n";
        out << "  quotient order " << ctx.k_order << ", induced degree " << ctx.omega_degree()
            << ", faithful: " << (omega.order() == g.order() ? "yes" : "no") << "\n";
        out << "  wreath checks: homomorphism " << (wreath_report.homomorphism ? "ok" : "FAIL")
            << ", injective " << (wreath_report.injective ? "ok" : "FAIL") << ", base in N "
            << (wreath_report.base_in_n ? "ok" : "FAIL") << " (" << wreath_report.pairs_checked
            << " pairs)\n";
        out << "  restriction: " << restriction.block_count << " blocks of size "
            << restriction.block_size << ", invariant "
            << (restriction.blocks_invariant ? "ok" : "FAIL") << ", conjugation formula "
            << (restriction.conjugation_formula ? "ok" : "FAIL") << ", blocks match delta "
            << (restriction.blocks_match_delta ? "ok" : "FAIL") << "\n";
    }
    return (wreath_report.ok() && restriction.ok() && omega.order() == g.order()) ? 0 : 1;
}

int cmd_verify(const std::string& suite, bool as_json, bool timing, std::ostream& out) {
    const std::vector<verdict> verdicts = run_suite(suite);
    if (as_json) {
        out << verdicts_to_json(verdicts, timing);
    } else {
        for (const auto& v : verdicts) {
            out << "[" << to_string(v.status) << "] " << v.check << ": " << v.detail;
            if (timing) out << " (" << v.elapsed_seconds << "s)";
            out << "\n";
        }
    }
    return any_violated(verdicts) ? 1 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-closures of finite permutation groups"};
    app.require_subcommand(1);

    std::string spec;
    std::string output_path;
    std::string method_text = "auto";
    bool as_json = false;
    bool timing = false;
    int max_degree = 12;

    auto* make_cmd = app.add_subcommand("make", "build a group and write its JSON");
    make_cmd->add_option("spec", spec, "group spec")->required();
    make_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* analyze_cmd = app.add_subcommand("analyze", "order, nilpotency, center, subgroups");
    analyze_cmd->add_option("spec", spec, "group spec")->required();
    analyze_cmd->add_flag("--json", as_json, "JSON output");
    analyze_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* orbitals_cmd = app.add_subcommand("orbitals", "orbit coloring of ordered pairs");
    orbitals_cmd->add_option("spec", spec, "group spec")->required();
    orbitals_cmd->add_flag("--json", as_json, "JSON output");
    orbitals_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* closure_cmd = app.add_subcommand("closure", "compute the 2-closure");
    closure_cmd->add_option("spec", spec, "group spec")->required();
    closure_cmd->add_option("--method", method_text, "auto|brute|backtrack");
    closure_cmd->add_flag("--json", as_json, "JSON output");
    closure_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* tc2_cmd = app.add_subcommand("tc2", "bounded total-2-closedness sweep");
    tc2_cmd->add_option("spec", spec, "group spec")->required();
    tc2_cmd->add_option("--max-degree", max_degree, "degree bound")->required();
    tc2_cmd->add_option("--method", method_text, "auto|brute|backtrack");
    tc2_cmd->add_flag("--json", as_json, "JSON output");
    tc2_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    std::string normal_gens;
    std::string delta_spec;
    int rotation = 0;
    auto* embed_cmd = app.add_subcommand("embed", "lift a normal subgroup action");
    embed_cmd->add_option("--group", spec, "ambient group spec")->required();
    embed_cmd->add_option("--normal", normal_gens, "';'-separated cycle generators of N")
        ->required();
    embed_cmd->add_option("--delta", delta_spec, "block action spec (or file:PATH)")->required();
    embed_cmd->add_option("--rotation", rotation, "transversal rotation (default 0)");
    embed_cmd->add_flag("--json", as_json, "JSON output");
    embed_cmd->add_option("-o,--output", output_path, "output file");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a named check suite");
    verify_cmd->add_option("--suite", suite, "lemma24|tc2|theoremA|theoremB|theoremC|"
                                             "classification|centralizer|disjoint|all")
        ->required();
    verify_cmd->add_flag("--json", as_json, "JSON output");
    verify_cmd->add_flag("--timing", timing, "include timings (breaks byte-reproducibility)");
    verify_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        // Everything except embed treats --output as "stdout goes here";
        // embed's --output names the induced-action JSON file instead.
        std::ofstream file_out;
        std::ostream* target = &out;
        if (!output_path.empty() && !embed_cmd->parsed()) {
            file_out.open(output_path);
            if (!file_out) throw spec_error("cannot open for writing: " + output_path);
            target = &file_out;
        }
        if (make_cmd->parsed()) return cmd_make(spec, *target);
        if (analyze_cmd->parsed()) return cmd_analyze(spec, as_json, *target);
        if (orbitals_cmd->parsed()) return cmd_orbitals(spec, as_json, *target);
        if (closure_cmd->parsed()) {
            return cmd_closure(spec, parse_closure_method(method_text), as_json, *target);
        }
        if (tc2_cmd->parsed()) {
            return cmd_tc2(spec, max_degree, parse_closure_method(method_text), as_json,
                           *target);
        }
        if (embed_cmd->parsed()) {
            return cmd_embed(spec, normal_gens, delta_spec, rotation, as_json, output_path, out);
        }
        if (verify_cmd->parsed()) return cmd_verify(suite, as_json, timing, *target);
        err << "error: no subcommand\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace twoclose::cli
