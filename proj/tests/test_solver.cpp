#include <doctest.h>

#include <stdexcept>

#include "hec/homogeneity.hpp"
#include "hec/multigraph.hpp"
#include "hec/solver.hpp"
#include "oracle.hpp"

using namespace hec;

TEST_CASE("the 5-wheel is 2-feasible but 3-infeasible") {
    const Multigraph w5 = wheel(5);
    const FeasibilityResult two = feasible(w5, 2);
    CHECK(two.feasible);
    REQUIRE(two.witness.has_value());
    CHECK(verify(w5, *two.witness).ok);

    const FeasibilityResult three = feasible(w5, 3);
    CHECK_FALSE(three.feasible);
    CHECK_FALSE(three.witness.has_value());
}

TEST_CASE("odd cycles are 2-infeasible") {
    CHECK_FALSE(feasible(cycle(3), 2).feasible);
    CHECK_FALSE(feasible(cycle(7), 2).feasible);
    CHECK(feasible(cycle(6), 2).feasible);
}

TEST_CASE("chi values for small families") {
    CHECK(chi_tilde(complete(7)).value == 3);
    CHECK(chi_tilde(complete(9)).value == 2);
    CHECK(chi_tilde(complete(3, 3)).value == 3);
    CHECK(chi_tilde(complete(3, 2)).value == 2);
    CHECK(chi_tilde(cycle(5)).value == 3);
    CHECK(chi_tilde(cycle(6)).value == 2);
    CHECK(chi_tilde(star(5)).value == 2);
    CHECK(chi_tilde(path(5)).value == 2);
    CHECK(chi_tilde(wheel(5)).value == 2);
    CHECK(chi_tilde(complete_bipartite(3, 4)).value == 2);

    const ChiTildeResult k7 = chi_tilde(complete(7));
    CHECK(k7.infeasible_below == std::vector<int>{2});
    CHECK(verify(complete(7), k7.witness).ok);
}

TEST_CASE("witnesses always verify") {
    for (const Multigraph& g :
         {complete(6), complete(4, 3), wheel(7), star(6), random_tree(8, 4),
          complete_bipartite(3, 3, 2)}) {
        const ChiTildeResult r = chi_tilde(g);
        CHECK(verify(g, r.witness).ok);
        for (int m : r.infeasible_below) CHECK(m < r.value);
    }
}

TEST_CASE("search agrees with plain enumeration on small graphs") {
    const std::vector<Multigraph> graphs{
        complete(4),          cycle(4),          cycle(5),       cycle(7),
        path(6),              star(5),           wheel(5),       complete_bipartite(2, 3),
        complete_bipartite(2, 4), complete(3, 2), random_tree(7, 3), complete_bipartite(1, 1, 4)};
    for (const Multigraph& g : graphs) {
        REQUIRE(g.edge_count() <= 8);
        for (int m : {2, 3}) {
            const FeasibilityResult r = feasible(g, m);
            CHECK_MESSAGE(r.feasible == oracle::naive_feasible(g, m),
                          "m=" << m << " |E|=" << g.edge_count());
            if (r.feasible) CHECK(verify(g, *r.witness).ok);
        }
    }
}

TEST_CASE("identical inputs give identical witnesses") {
    const Multigraph g = complete(6);
    const ChiTildeResult a = chi_tilde(g);
    const ChiTildeResult b = chi_tilde(g);
    CHECK(a.value == b.value);
    CHECK(a.witness.colors == b.witness.colors);
    CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("chi never exceeds the proper-coloring bound") {
    for (const Multigraph& g :
         {complete(5), complete(6), wheel(6), star(7), cycle(9), complete(3, 3)}) {
        CHECK(chi_tilde(g).value <= greedy_proper_coloring(g).m);
    }
}

TEST_CASE("node budget aborts the search") {
    CHECK_THROWS_AS(feasible(complete(9), 2, SolverOptions{5}), BudgetExceeded);
    CHECK_THROWS_AS(chi_tilde(complete(9), SolverOptions{5}), BudgetExceeded);
}

TEST_CASE("exhaustive two-coloring sweeps") {
    for (int n : {3, 5, 7}) {
        const Multigraph g = cycle(n);
        CHECK(all_two_colorings_satisfy(g, [&](const EdgeColoring& c) {
            return count_monochromatic_vertices(g, c) % 2 == 1;
        }));
    }
    const Multigraph c4 = cycle(4);
    CHECK_FALSE(all_two_colorings_satisfy(c4, [&](const EdgeColoring& c) {
        return count_monochromatic_vertices(c4, c) % 2 == 1;
    }));
    CHECK_THROWS_AS(
        all_two_colorings_satisfy(cycle(17), [](const EdgeColoring&) { return true; }),
        std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(feasible(complete(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(chi_tilde(Multigraph(3, {})), std::invalid_argument);
    CHECK(chi_tilde(path(2)).value == 2);
}
