#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoclose/closure.hpp"
#include "twoclose/structure.hpp"

namespace twoclose {

enum class verdict_status { pass, witness_found, violated, skipped, inconclusive };

std::string to_string(verdict_status s);

struct witness_info {
    std::string action_description;
    perm_group action;
    std::string permutation_cycles; // a closure element outside the group
    std::uint64_t group_order = 0;
    std::uint64_t closure_order = 0;
};

/// Outcome of one named check. "witness-found" is the expected success mode
/// for non-closedness claims; "violated" flags an instance contradicting a
/// statement that holds unconditionally, so it must never occur; a bounded
/// search that comes back empty where a witness is predicted reports
/// "inconclusive" instead.
struct verdict {
    std::string check;
    verdict_status status = verdict_status::skipped;
    std::string detail;
    std::optional<witness_info> witness;
    double elapsed_seconds = 0.0;
};

/// The C_n x C_m action on 2n+m points: group as advertised, the plain
/// n-cycle inside the 2-closure (by both membership routes) but not in the
/// group.
verdict check_lemma24(std::int64_t n, std::int64_t m,
                      closure_method method = closure_method::automatic);

/// Sweep every faithful action up to max_degree: a strict closure anywhere is
/// a witness, and an empty sweep is bounded evidence only.
verdict check_tc2_bounded(const perm_group& g, const std::string& name, int max_degree,
                          closure_method method = closure_method::backtrack);

/// Closure descent: if N is closed on the induced action it is closed on the
/// block action too.
verdict check_theorem_a(const perm_group& g, const std::vector<permutation>& n_generators,
                        const perm_group& delta, const std::string& name,
                        closure_method method = closure_method::automatic);

/// Every normal abelian subgroup cyclic; a non-cyclic one predicts a witness
/// action, which the bounded sweep must then produce.
verdict check_theorem_b(const perm_group& g, const std::string& name, int max_degree = 0,
                        closure_method method = closure_method::backtrack);

/// Coprime nilpotent factors, both surviving the bounded sweep: so must the
/// direct product.
verdict check_theorem_c(const perm_group& h, const perm_group& k, const std::string& name,
                        int max_degree, closure_method method = closure_method::backtrack);

/// Nilpotent classification: cyclic or quaternion-times-odd-cyclic structure
/// must agree with the bounded sweep in the refutable direction.
verdict check_classification(const perm_group& g, const std::string& name, int max_degree,
                             closure_method method = closure_method::backtrack);

/// In the given faithful action (generators mirroring g's), the images of
/// C_G(N), Z(G) and F(G) are all 2-closed.
verdict check_centralizer_closed(const perm_group& g,
                                 const std::vector<permutation>& n_generators,
                                 const perm_group& action, const std::string& name,
                                 closure_method method = closure_method::automatic);

/// Closure of a disjoint union is the product of the factor closures.
verdict check_disjoint_product(const std::vector<perm_group>& factors, const std::string& name,
                               closure_method method = closure_method::automatic);

/// Named suites: lemma24, tc2, theoremA, theoremB, theoremC, classification,
/// centralizer, disjoint, all.
std::vector<std::string> suite_names();
std::vector<verdict> run_suite(const std::string& suite);

/// JSON array of verdicts; timing is included only on request so that equal
/// inputs give byte-identical output.
std::string verdicts_to_json(const std::vector<verdict>& verdicts, bool include_timing = false);

bool any_violated(const std::vector<verdict>& verdicts);

} // namespace twoclose
