#include <doctest.h>

#include <stdexcept>

#include <set>

#include "hec/decompositions.hpp"
#include "hec/multigraph.hpp"

using namespace hec;

TEST_CASE("triangle decomposition") {
    const HamiltonianDecomposition d = walecki_decompose(3);
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.cycles[0].size() == 3);
    CHECK(std::set<VertexId>(d.cycles[0].begin(), d.cycles[0].end()) ==
          std::set<VertexId>{1, 2, 3});
    CHECK(verify_decomposition(d));
}

TEST_CASE("two cycles cover K5") {
    const HamiltonianDecomposition d = walecki_decompose(5);
    REQUIRE(d.cycles.size() == 2);
    std::set<std::pair<VertexId, VertexId>> covered;
    for (const auto& cyc : d.cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            covered.insert(std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]));
    CHECK(covered.size() == 10);
    CHECK(verify_decomposition(d));
}

TEST_CASE("rotation decompositions are valid for all odd orders up to 101") {
    for (int n = 3; n <= 101; n += 2) {
        const HamiltonianDecomposition d = walecki_decompose(n);
        CHECK(static_cast<int>(d.cycles.size()) == (n - 1) / 2);
        size_t total_edges = 0;
        for (const auto& cyc : d.cycles) total_edges += cyc.size();
        CHECK(total_edges == static_cast<size_t>(n) * (n - 1) / 2);
        std::string why;
        CHECK_MESSAGE(verify_decomposition(d, &why), why);
    }
}

TEST_CASE("tampered decompositions are rejected") {
    HamiltonianDecomposition repeated = walecki_decompose(7);
    repeated.cycles[1] = repeated.cycles[0];
    std::string why;
    CHECK_FALSE(verify_decomposition(repeated, &why));
    CHECK_FALSE(why.empty());

    HamiltonianDecomposition revisits = walecki_decompose(7);
    revisits.cycles[0][2] = revisits.cycles[0][1];
    CHECK_FALSE(verify_decomposition(revisits, &why));

    HamiltonianDecomposition short_cycle = walecki_decompose(7);
    short_cycle.cycles[0].pop_back();
    CHECK_FALSE(verify_decomposition(short_cycle, &why));

    HamiltonianDecomposition missing = walecki_decompose(7);
    missing.cycles.pop_back();
    CHECK_FALSE(verify_decomposition(missing, &why));

    HamiltonianDecomposition stray = walecki_decompose(7);
    stray.cycles[0][0] = 9;
    CHECK_FALSE(verify_decomposition(stray, &why));
}

TEST_CASE("even or tiny orders are rejected") {
    CHECK_THROWS_AS(walecki_decompose(4), std::invalid_argument);
    CHECK_THROWS_AS(walecki_decompose(1), std::invalid_argument);
    CHECK_THROWS_AS(walecki_decompose(-3), std::invalid_argument);
}
