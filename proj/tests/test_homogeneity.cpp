#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "hec/homogeneity.hpp"
#include "hec/multigraph.hpp"
#include "oracle.hpp"

using namespace hec;

namespace {

// The 2-coloring of the 5-wheel from the worked example: spokes 1,2,1,2
// around the rim, rim edges 2,1,2 and closing edge 1. Edge ids follow the
// wheel generator: four spokes, then rim, then the closing edge.
const std::vector<int> kWheel5Colors{1, 2, 1, 2, 2, 1, 2, 1};

EdgeColoring random_coloring(int edges, int m, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(1, m);
    std::vector<int> colors(static_cast<size_t>(edges));
    for (auto& c : colors) c = pick(rng);
    return EdgeColoring(m, colors);
}

}  // namespace

TEST_CASE("the 5-wheel example coloring is homogeneous") {
    const Multigraph w5 = wheel(5);
    const HomogeneityReport report = verify(w5, EdgeColoring(2, kWheel5Colors));
    CHECK(report.ok);
    CHECK_FALSE(report.first_violation.has_value());
    CHECK(report.spectra.size() == 5);
    CHECK(report.spectra[0].counts == std::map<int, int>{{1, 2}, {2, 2}});
}

TEST_CASE("monochromatic triangle fails at every vertex") {
    const Multigraph c3 = cycle(3);
    const HomogeneityReport report = verify(c3, EdgeColoring(2, {1, 1, 1}));
    CHECK_FALSE(report.ok);
    REQUIRE(report.first_violation.has_value());
    const Violation& v = *report.first_violation;
    CHECK(v.vertex == 1);
    CHECK(v.color == 1);
    CHECK(v.count == 2);
    CHECK(v.allowed == std::vector<int>{1});
    for (const VertexSpectrum& s : report.spectra) {
        CHECK(s.q == 1);
        CHECK(s.r == 0);
        CHECK(s.counts == std::map<int, int>{{1, 2}});
    }
}

TEST_CASE("label-parity coloring of K4") {
    // Color 1 where the label sum is odd, evaluated by hand on the six
    // edges (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
    const std::vector<int> colors{1, 2, 1, 1, 2, 1};
    const HomogeneityReport report = verify(complete(4), EdgeColoring(2, colors));
    CHECK(report.ok);
    for (const VertexSpectrum& s : report.spectra)
        CHECK(s.counts == std::map<int, int>{{1, 2}, {2, 1}});
}

TEST_CASE("vertex spectra") {
    const Multigraph s5 = star(5);
    const VertexSpectrum hub = spectrum(s5, EdgeColoring(2, {1, 2, 1, 2, 1}), 1);
    CHECK(hub.degree == 5);
    CHECK(hub.q == 2);
    CHECK(hub.r == 1);
    CHECK(hub.counts == std::map<int, int>{{1, 3}, {2, 2}});

    // Distance-band coloring of K5, evaluated by hand on the ten edges.
    const std::vector<int> k5_colors{1, 2, 2, 1, 1, 2, 2, 1, 2, 1};
    const Multigraph k5 = complete(5);
    for (VertexId x = 1; x <= 5; ++x) {
        const VertexSpectrum s = spectrum(k5, EdgeColoring(2, k5_colors), x);
        CHECK(s.counts == std::map<int, int>{{1, 2}, {2, 2}});
    }

    const Multigraph lonely(4, {{1, 2}, {2, 3}, {3, 1}});
    const VertexSpectrum isolated = spectrum(lonely, EdgeColoring(2, {1, 2, 1}), 4);
    CHECK(isolated.degree == 0);
    CHECK(isolated.q == 0);
    CHECK(isolated.r == 0);
    CHECK(isolated.counts.empty());
}

TEST_CASE("degree zero vertices pass vacuously") {
    const Multigraph lonely(4, {{1, 2}, {2, 3}, {3, 1}});
    CHECK(verify(lonely, EdgeColoring(3, {1, 2, 3})).ok);
}

TEST_CASE("proper colorings") {
    CHECK(is_proper(path(3), EdgeColoring(2, {1, 2})));
    CHECK_FALSE(is_proper(cycle(3), EdgeColoring(2, {1, 2, 1})));

    // Perfect-matching coloring of K4 is proper with 3 colors and passes.
    const EdgeColoring k4_proper(3, {1, 2, 3, 3, 2, 1});
    CHECK(is_proper(complete(4), k4_proper));
    CHECK(verify(complete(4), k4_proper).ok);
}

TEST_CASE("proper colorings with at least max degree colors are homogeneous") {
    std::mt19937 rng(99);
    for (const Multigraph& g :
         {complete(6), wheel(8), star(7), complete_bipartite(3, 4), random_tree(10, 5),
          complete(4, 2)}) {
        // First-fit proper coloring, built here rather than taken from the
        // library so the check stays independent.
        std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
        int used = 2;
        for (const Edge& e : g.edges()) {
            std::set<int> taken;
            for (VertexId x : {e.u, e.v})
                for (int id : g.incident_edge_ids(x))
                    if (colors[static_cast<size_t>(id)] != 0)
                        taken.insert(colors[static_cast<size_t>(id)]);
            int k = 1;
            while (taken.count(k)) ++k;
            colors[static_cast<size_t>(e.id)] = k;
            used = std::max(used, k);
        }
        const EdgeColoring proper(used, colors);
        REQUIRE(is_proper(g, proper));
        REQUIRE(used >= g.max_degree());
        CHECK(verify(g, proper).ok);
        (void)rng;
    }
}

TEST_CASE("balanced-count check agrees with the partition definition") {
    std::mt19937 rng(4242);
    for (const Multigraph& g :
         {complete(5), complete(4, 3), wheel(6), star(6), cycle(7), complete_bipartite(2, 3, 2),
          random_tree(8, 2)}) {
        for (int m = 2; m <= 4; ++m) {
            for (int trial = 0; trial < 60; ++trial) {
                const EdgeColoring c = random_coloring(g.edge_count(), m, rng);
                CHECK(verify(g, c).ok == oracle::definition_homogeneous(g, c));
            }
        }
    }
}

TEST_CASE("homogeneity is invariant under color permutations") {
    std::mt19937 rng(777);
    for (const Multigraph& g : {complete(5), wheel(6), complete(3, 2), cycle(8)}) {
        for (int m = 2; m <= 3; ++m) {
            for (int trial = 0; trial < 40; ++trial) {
                const EdgeColoring c = random_coloring(g.edge_count(), m, rng);
                std::vector<int> perm(static_cast<size_t>(m));
                for (int k = 0; k < m; ++k) perm[static_cast<size_t>(k)] = k + 1;
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<int> relabeled(c.colors.size());
                for (size_t i = 0; i < c.colors.size(); ++i)
                    relabeled[i] = perm[static_cast<size_t>(c.colors[i] - 1)];
                CHECK(verify(g, c).ok == verify(g, EdgeColoring(m, relabeled)).ok);
            }
        }
    }
}

TEST_CASE("monochromatic vertex counts on cycles") {
    CHECK(count_monochromatic_vertices(cycle(3), EdgeColoring(2, {1, 1, 1})) == 3);
    // Rim colors 1,1,2,2,1: monochromatic at the 1|1, 5|1 and 3|4 corners.
    CHECK(count_monochromatic_vertices(cycle(5), EdgeColoring(2, {1, 1, 2, 2, 1})) == 3);
    CHECK(count_monochromatic_vertices(cycle(4), EdgeColoring(2, {1, 2, 1, 2})) == 0);

    CHECK_THROWS_AS(count_monochromatic_vertices(path(4), EdgeColoring(2, {1, 2, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_monochromatic_vertices(cycle(3), EdgeColoring(3, {1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("odd cycles always have an odd monochromatic count") {
    for (int n : {3, 5, 7, 9}) {
        const Multigraph g = cycle(n);
        std::vector<int> colors(static_cast<size_t>(n));
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) colors[static_cast<size_t>(i)] = (mask >> i & 1) ? 2 : 1;
            CHECK(count_monochromatic_vertices(g, EdgeColoring(2, colors)) % 2 == 1);
        }
    }
}

TEST_CASE("alternating colorings of even cycles") {
    for (int n : {4, 6, 10}) {
        std::vector<int> colors(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) colors[static_cast<size_t>(i)] = i % 2 == 0 ? 1 : 2;
        const EdgeColoring c(2, colors);
        CHECK(count_monochromatic_vertices(cycle(n), c) == 0);
        CHECK(verify(cycle(n), c).ok);
    }
}

TEST_CASE("coloring validation") {
    CHECK_THROWS_AS(EdgeColoring(1, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoring(2, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoring(2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(verify(cycle(3), EdgeColoring(2, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(verify(cycle(3), EdgeColoring(2, {1, 2, 1, 2})), std::invalid_argument);
}
