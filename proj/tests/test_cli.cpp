#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

#include "quadrics/json_io.hpp"
#include "quadrics/poset.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QUADRICS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("golden outputs") {
    auto chains = run_cli("chains --mu 3,1");
    CHECK(chains.exit_code == 0);
    CHECK(chains.out == "11\n");

    auto dset = run_cli("dset --n 4");
    CHECK(dset.exit_code == 0);
    CHECK(dset.out == "3241\n3412\n4132\n");

    auto conj = run_cli("conjecture --n 3");
    CHECK(conj.exit_code == 0);
    CHECK(conj.out == "PASS: 2*x1^2 + 2*x1*x2\n");

    auto dmu = run_cli("dset --mu 4,2");
    CHECK(dmu.exit_code == 0);
    CHECK(dmu.out == "5463|21\n5634|21\n6354|21\n");

    auto schub = run_cli("schubert --w 321");
    CHECK(schub.exit_code == 0);
    CHECK(schub.out == "x1^2*x2\n");

    auto wset = run_cli("wset --pi '432|1'");
    CHECK(wset.exit_code == 0);
    CHECK(wset.out == "3421\n4231\n");

    auto restrict_out = run_cli("restrict --mu 3,1");
    CHECK(restrict_out.exit_code == 0);
    CHECK(restrict_out.out == "2*x1^3*x2^2 + 2*x1^3*x2*x3\n");

    auto half = run_cli("restrict --mu 3,1 --exponent-mode half-n");
    CHECK(half.exit_code == 0);
    CHECK(half.out == "4*x1^3*x2^2 + 4*x1^3*x2*x3\n");
}

TEST_CASE("enumerate lists nodes lexicographically with ranks") {
    auto res = run_cli("enumerate --mu 2,1");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "12|3 0 0\n"
          "13|2 1 0\n"
          "21|3 1 1\n"
          "23|1 2 0\n"
          "31|2 2 1\n"
          "32|1 3 1\n");

    auto js = run_cli("enumerate --mu 2,1 --format json");
    auto parsed = quadrics::json::parse(js.out);
    REQUIRE(parsed.size() == 6);
    CHECK(parsed[0]["word"] == "12|3");
    CHECK(parsed[5]["dcount"] == 1);
}

TEST_CASE("verify passes on small families") {
    auto one = run_cli("verify --mu 3,1");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("ok 3,1 nodes=16") == 0);
    CHECK(one.out.find("PASS\n") != std::string::npos);

    auto cumulative = run_cli("verify --n 4");
    CHECK(cumulative.exit_code == 0);
    CHECK(cumulative.out.rfind("PASS\n") == cumulative.out.size() - 5);
    int lines = 0;
    for (char c : cumulative.out) lines += c == '\n';
    CHECK(lines == 1 + 2 + 4 + 8 + 1);
}

TEST_CASE("poset json round trips and dot renders doubled strokes") {
    for (const char* mu_flag : {"2,1", "3,1"}) {
        auto res = run_cli(std::string("poset --mu ") + mu_flag + " --format json");
        REQUIRE(res.exit_code == 0);
        auto dump = quadrics::poset_dump_from_json(quadrics::json::parse(res.out));
        auto mu = mu_flag == std::string("2,1") ? quadrics::Composition({2, 1})
                                                : quadrics::Composition({3, 1});
        auto direct = quadrics::dump(quadrics::WeakOrderPoset::build(mu));
        CHECK(dump.mu == direct.mu);
        CHECK(dump.nodes == direct.nodes);
        CHECK(dump.edges == direct.edges);
    }

    auto dot = run_cli("poset --mu 2,1 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("\"12|3\" -> \"21|3\" [label=\"s1\", color=\"black:invis:black\"];") !=
          std::string::npos);
    CHECK(dot.out.find("\"31|2\" -> \"32|1\" [label=\"s1\"];") != std::string::npos);
}

TEST_CASE("usage and resource errors use distinct exit codes") {
    CHECK(run_cli("dset --n 4 --mu 3,1").exit_code == 2);
    CHECK(run_cli("dset").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("chains --mu 0,3").exit_code == 2);
    CHECK(run_cli("chains --mu ,").exit_code == 2);
    CHECK(run_cli("wset --pi '99|9'").exit_code == 2);
    CHECK(run_cli("wset --pi '21|3' --mu 3,1").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);

    CHECK(run_cli("poset --mu 11").exit_code == 3);
    CHECK(run_cli("enumerate --mu 6,6").exit_code == 3);
    CHECK(run_cli("conjecture --n 9").exit_code == 3);
    CHECK(run_cli("dset --n 11").exit_code == 3);
    CHECK(run_cli("restrict --mu 11").exit_code == 3);

    auto raised = run_cli("dset --n 11 --limit 11");
    CHECK(raised.exit_code == 0);
    int lines = 0;
    for (char c : raised.out) lines += c == '\n';
    CHECK(lines == 3840);
    CHECK(run_cli("conjecture --n 9 --limit 9").exit_code == 0);
}

TEST_CASE("output is deterministic across runs") {
    for (const char* args : {"dset --n 6", "poset --mu 1,2,1 --format json",
                             "wset --pi '314|6|27|5'", "enumerate --mu 4"}) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}
