#include <doctest.h>

#include <json.hpp>

#include "cli_runner.hpp"
#include "hec/decompositions.hpp"
#include "hec/serialize.hpp"

using nlohmann::json;

TEST_CASE("generate emits family graphs") {
    const cli::Result r = cli::run("generate --family wheel --n 5");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("n") == 5);
    CHECK(j.at("edges").size() == 8);
    CHECK(j.at("family").at("kind") == "wheel");
}

TEST_CASE("generate then export round trips") {
    const auto path = cli::scratch_file("k5l2.json");
    REQUIRE(cli::run("generate --family complete --n 5 --lambda 2 --out " + path.string())
                .exit_code == 0);
    const json first = json::parse(cli::slurp(path));
    const hec::Multigraph g = hec::graph_from_json(first);
    CHECK(hec::graph_to_json(g) == first);
}

TEST_CASE("generate to verify pipeline") {
    const auto graph = cli::scratch_file("w5.json");
    const auto coloring = cli::scratch_file("w5_coloring.json");
    REQUIRE(cli::run("generate --family wheel --n 5 --out " + graph.string()).exit_code == 0);
    REQUIRE(cli::run("color --in " + graph.string() + " --theorem wheel --out " +
                     coloring.string())
                .exit_code == 0);
    const json cj = json::parse(cli::slurp(coloring));
    CHECK(cj.at("theorem") == "wheel");
    const cli::Result verdict =
        cli::run("verify --in " + graph.string() + " --coloring " + coloring.string());
    CHECK(verdict.exit_code == 0);
    CHECK(json::parse(verdict.out).at("ok") == true);
}

TEST_CASE("verify rejects a bad coloring with exit 1") {
    const auto graph = cli::scratch_file("c3.json");
    const auto coloring = cli::scratch_file("c3_all1.json");
    REQUIRE(cli::run("generate --family cycle --n 3 --out " + graph.string()).exit_code == 0);
    std::ofstream(coloring) << R"({"m": 2, "colors": [1, 1, 1]})";
    const cli::Result verdict =
        cli::run("verify --in " + graph.string() + " --coloring " + coloring.string());
    CHECK(verdict.exit_code == 1);
    const json report = json::parse(verdict.out);
    CHECK(report.at("ok") == false);
    CHECK(report.at("first_violation").at("vertex") == 1);
}

TEST_CASE("chi subcommand") {
    const cli::Result r = cli::run("chi --family complete --n 7");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("chi_tilde") == 3);
    CHECK(j.at("refuted") == json::array({2}));
}

TEST_CASE("decompose subcommand") {
    const cli::Result r = cli::run("decompose --n 9");
    REQUIRE(r.exit_code == 0);
    const hec::HamiltonianDecomposition d = hec::decomposition_from_json(json::parse(r.out));
    CHECK(d.cycles.size() == 4);
    CHECK(hec::verify_decomposition(d));
    CHECK(cli::run("decompose --n 8").exit_code == 2);
}

TEST_CASE("check-prop subcommand") {
    const cli::Result odd = cli::run("check-prop --n 5");
    CHECK(odd.exit_code == 0);
    CHECK(json::parse(odd.out).at("all_odd") == true);
    CHECK(json::parse(odd.out).at("colorings") == 32);

    const cli::Result even = cli::run("check-prop --n 4");
    CHECK(even.exit_code == 1);
    CHECK(json::parse(even.out).at("all_odd") == false);

    CHECK(cli::run("check-prop --n 20").exit_code == 2);
}

TEST_CASE("export-dot is stable across runs") {
    const auto graph = cli::scratch_file("w5_dot.json");
    const auto coloring = cli::scratch_file("w5_dot_coloring.json");
    REQUIRE(cli::run("generate --family wheel --n 5 --out " + graph.string()).exit_code == 0);
    REQUIRE(cli::run("color --in " + graph.string() + " --theorem wheel --out " +
                     coloring.string())
                .exit_code == 0);
    const cli::Result first =
        cli::run("export-dot --in " + graph.string() + " --coloring " + coloring.string());
    const cli::Result second =
        cli::run("export-dot --in " + graph.string() + " --coloring " + coloring.string());
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("graph hec {") == 0);
}

TEST_CASE("invalid parameters exit 2 with a JSON diagnostic") {
    const cli::Result r = cli::run("generate --family wheel --n 3");
    CHECK(r.exit_code == 2);
    const json err = json::parse(r.err);
    CHECK(err.at("error") == "invalid-parameter");

    CHECK(cli::run("generate --family dodecahedron --n 5").exit_code == 2);
    CHECK(cli::run("color --family cycle --n 4 --theorem wheel").exit_code == 2);
    CHECK(cli::run("chi").exit_code == 2);
    CHECK(cli::run("nonsense").exit_code == 2);
}

TEST_CASE("budget overruns exit 3") {
    const cli::Result r = cli::run("chi --family complete --n 9 --budget 5");
    CHECK(r.exit_code == 3);
    CHECK(json::parse(r.err).at("error") == "budget-exceeded");
}

TEST_CASE("color validates the graph against its family metadata") {
    const auto graph = cli::scratch_file("tampered.json");
    json j = hec::graph_to_json(hec::wheel(5));
    j["edges"][0]["u"] = 2;
    j["edges"][0]["v"] = 4;
    std::ofstream(graph) << j.dump();
    const cli::Result r = cli::run("color --in " + graph.string() + " --theorem wheel");
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.err).at("error") == "invalid-parameter");
}
