#include "hec/decompositions.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

namespace hec {

HamiltonianDecomposition walecki_decompose(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("decomposition needs odd n >= 3");
    const int half = (n - 1) / 2;
    const int mod = n - 1;

    // Zig-zag ordering of 0..n-2: 0, 1, n-2, 2, n-3, ..., half.
    std::vector<int> zigzag;
    zigzag.reserve(static_cast<size_t>(mod));
    zigzag.push_back(0);
    for (int j = 1; j < half; ++j) {
        zigzag.push_back(j);
        zigzag.push_back(mod - j);
    }
    zigzag.push_back(half);

    HamiltonianDecomposition d;
    d.n = n;
    d.cycles.reserve(static_cast<size_t>(half));
    for (int k = 0; k < half; ++k) {
        std::vector<VertexId> cyc;
        cyc.reserve(static_cast<size_t>(n));
        cyc.push_back(n);
        for (int z : zigzag) cyc.push_back(1 + (z + k) % mod);
        d.cycles.push_back(std::move(cyc));
    }
    return d;
}

namespace {

bool fail(std::string* reason, const std::string& message) {
    if (reason) *reason = message;
    return false;
}

}  // namespace

bool verify_decomposition(const HamiltonianDecomposition& d, std::string* reason) {
    const int n = d.n;
    if (n < 3 || n % 2 == 0) return fail(reason, "n must be odd and at least 3");
    if (static_cast<int>(d.cycles.size()) != (n - 1) / 2)
        return fail(reason, "expected " + std::to_string((n - 1) / 2) + " cycles, got " +
                                std::to_string(d.cycles.size()));

    std::set<std::pair<VertexId, VertexId>> used;
    for (size_t ci = 0; ci < d.cycles.size(); ++ci) {
        const auto& cyc = d.cycles[ci];
        if (static_cast<int>(cyc.size()) != n)
            return fail(reason, "cycle " + std::to_string(ci) + " has length " +
                                    std::to_string(cyc.size()));
        std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
        for (VertexId x : cyc) {
            if (x < 1 || x > n)
                return fail(reason, "cycle " + std::to_string(ci) + " contains vertex " +
                                        std::to_string(x));
            if (visited[static_cast<size_t>(x)]++)
                return fail(reason, "cycle " + std::to_string(ci) + " visits vertex " +
                                        std::to_string(x) + " twice");
        }
        for (int i = 0; i < n; ++i) {
            VertexId u = cyc[static_cast<size_t>(i)];
            VertexId v = cyc[static_cast<size_t>((i + 1) % n)];
            auto edge = std::minmax(u, v);
            if (!used.insert(edge).second)
                return fail(reason, "edge {" + std::to_string(edge.first) + "," +
                                        std::to_string(edge.second) + "} appears twice");
        }
    }
    const size_t total = static_cast<size_t>(n) * (n - 1) / 2;
    if (used.size() != total)
        return fail(reason, "covered " + std::to_string(used.size()) + " of " +
                                std::to_string(total) + " edges");
    return true;
}

}  // namespace hec
