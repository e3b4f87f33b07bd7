#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "twoclose/cli.hpp"

using nlohmann::json;

namespace {

struct cli_result {
    int code = 0;
    std::string out;
    std::string err;
};

cli_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = twoclose::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("closure subcommand") {
    const cli_result r = run_cli({"closure", "lemma24:2,2", "--method", "brute", "--json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["group_order"] == 4);
    CHECK(doc["closure_order"] == 8);
    CHECK(doc["is_2closed"] == false);
    const auto witnesses = doc["witness_generators"].get<std::vector<std::string>>();
    CHECK(std::find(witnesses.begin(), witnesses.end(), "(1 2)") != witnesses.end());
}

TEST_CASE("identical invocations are byte-identical") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"closure", "lemma24:2,2", "--json"},
          {"tc2", "direct:cyclic:2+cyclic:2", "--max-degree", "6", "--json"},
          {"analyze", "quaternion:8", "--json"},
          {"make", "dihedral:8"}}) {
        CAPTURE(args[0]);
        CHECK(run_cli(args).out == run_cli(args).out);
    }
}

TEST_CASE("closure methods agree") {
    const cli_result brute = run_cli({"closure", "lemma24:2,4", "--method", "brute", "--json"});
    const cli_result backtrack =
        run_cli({"closure", "lemma24:2,4", "--method", "backtrack", "--json"});
    CHECK(json::parse(brute.out)["closure_order"] == json::parse(backtrack.out)["closure_order"]);
    CHECK(json::parse(brute.out)["closure_generators"] ==
          json::parse(backtrack.out)["closure_generators"]);
}

TEST_CASE("tc2 exit codes") {
    const cli_result pass = run_cli({"tc2", "quaternion:8", "--max-degree", "12"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("pass") != std::string::npos);
    CHECK(pass.out.find("bounded") != std::string::npos);

    const cli_result witness = run_cli({"tc2", "lemma24:2,4", "--max-degree", "8"});
    CHECK(witness.code == 3);
    CHECK(witness.out.find("witness-found") != std::string::npos);
    CHECK(witness.out.find("witness permutation") != std::string::npos);
}

TEST_CASE("usage and spec errors exit 2 with a parsable prefix") {
    CHECK(run_cli({"closure"}).code == 2);
    CHECK(run_cli({"closure", "nonsense"}).code == 2);
    CHECK(run_cli({"nonsense", "cyclic:3"}).code == 2);
    CHECK(run_cli({"tc2", "cyclic:3"}).code == 2); // missing --max-degree
    const cli_result r = run_cli({"closure", "cyclic:nope"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(r.err.find('\n') == r.err.size() - 1); // single line
}

TEST_CASE("make then closure round trip") {
    const std::string path = "cli_roundtrip.json";
    const cli_result made = run_cli({"make", "lemma24:2,2", "-o", path});
    CHECK(made.code == 0);
    const cli_result from_file = run_cli({"closure", "file:" + path, "--json"});
    const cli_result direct = run_cli({"closure", "lemma24:2,2", "--json"});
    const json a = json::parse(from_file.out);
    const json b = json::parse(direct.out);
    CHECK(a["closure_order"] == b["closure_order"]);
    CHECK(a["closure_generators"] == b["closure_generators"]);
    CHECK(a["witness_generators"] == b["witness_generators"]);
    std::remove(path.c_str());
}

TEST_CASE("orbitals JSON export") {
    const cli_result r = run_cli({"orbitals", "cyclic:3", "--json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["degree"] == 3);
    CHECK(doc["colors"].size() == 3);
    CHECK(doc["colors"][0][0] == 0);
    // Byte-identical across runs.
    CHECK(run_cli({"orbitals", "cyclic:3", "--json"}).out == r.out);
}

TEST_CASE("analyze JSON") {
    const cli_result r = run_cli({"analyze", "dihedral:8", "--json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["order"] == 8);
    CHECK(doc["nilpotent"] == true);
    CHECK(doc["cyclic"] == false);
    CHECK(doc["center_order"] == 2);
    CHECK(doc["subgroup_count"] == 10);
    bool found_noncyclic = false;
    for (const auto& entry : doc["normal_abelian_subgroups"]) {
        if (entry["cyclic"] == false) found_noncyclic = true;
    }
    CHECK(found_noncyclic);
}

TEST_CASE("embed subcommand") {
    // D8 in its regular representation: b = (1 2)(3 4)(5 6)(7 8) and
    // a^2 = (1 5)(2 6)(3 7)(4 8) generate the normal Klein subgroup.
    const cli_result r = run_cli({"embed", "--group", "dihedral:8", "--normal",
                                  "(1 2)(3 4)(5 6)(7 8);(1 5)(2 6)(3 7)(4 8)", "--delta",
                                  "lemma24:2,2", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["report"]["homomorphism"] == true);
    CHECK(doc["report"]["injective"] == true);
    CHECK(doc["report"]["base_in_n"] == true);
    CHECK(doc["report"]["faithful"] == true);
    CHECK(doc["report"]["block_count"] == 2);
    CHECK(doc["report"]["omega_degree"] == 12);
    CHECK(doc["omega_action"]["degree"] == 12);

    // A non-normal subgroup is rejected cleanly.
    const cli_result bad = run_cli({"embed", "--group", "dihedral:8", "--normal",
                                    "(1 2)(3 4)(5 6)(7 8)", "--delta", "cyclic:2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.rfind("error: ", 0) == 0);
}

TEST_CASE("verify subcommand") {
    const cli_result r = run_cli({"verify", "--suite", "disjoint", "--json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 3);
    for (const auto& v : doc) {
        CHECK(v["status"] == "pass");
        CHECK_FALSE(v.contains("elapsed_seconds"));
    }
    // Identical runs give identical bytes.
    CHECK(run_cli({"verify", "--suite", "disjoint", "--json"}).out == r.out);

    CHECK(run_cli({"verify", "--suite", "nonesuch"}).code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli({"--help"}).code == 0);
}
