#pragma once

#include <set>
#include <vector>

#include "bclique/balanced_clique.hpp"
#include "bclique/enumeration.hpp"
#include "bclique/generator.hpp"
#include "bclique/signed_graph.hpp"

namespace testsupport {

using namespace bclique;

// Two positive triangles {0,1,2} and {3,4,5} fully joined by negative edges:
// the whole graph is one balanced clique with sides of size three.
inline SignedGraph two_triangles() {
    std::vector<SignedEdge> edges;
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
        edges.push_back({u, v, EdgeSign::positive});
    for (int u = 0; u <= 2; ++u)
        for (int v = 3; v <= 5; ++v) edges.push_back({u, v, EdgeSign::negative});
    return SignedGraph::from_edges(6, edges);
}

// two_triangles with one cross edge removed
inline SignedGraph two_triangles_missing(int u, int v) {
    std::vector<SignedEdge> edges;
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
        edges.push_back({a, b, EdgeSign::positive});
    for (int a = 0; a <= 2; ++a)
        for (int b = 3; b <= 5; ++b)
            if (!(a == u && b == v)) edges.push_back({a, b, EdgeSign::negative});
    return SignedGraph::from_edges(6, edges);
}

inline SignedGraph corpus_graph(int i) {
    return random_signed_graph(4 + i % 9, 0.4, 0.5, 1000 + static_cast<std::uint64_t>(i));
}

// denser mix so cliques with larger sides actually occur
inline SignedGraph dense_graph(int i) {
    return random_signed_graph(6 + i % 7, 0.85, 0.5, 7000 + static_cast<std::uint64_t>(i));
}

inline SignedGraph planted_graph(int i) {
    int n = 8 + i % 5;
    auto base = random_base_graph(n, static_cast<std::int64_t>(n * (n - 1) / 2 * 4 / 5),
                                  9000 + static_cast<std::uint64_t>(i));
    return synthesize_signed(n, base, 9000 + static_cast<std::uint64_t>(i));
}

inline std::set<BalancedClique> run_enum_set(const SignedGraph& g, int k, bool star,
                                             EnumOptions opt = {}) {
    std::set<BalancedClique> out;
    CliqueSink sink = [&](const BalancedClique& c) { out.insert(c); };
    if (star)
        mbc_enum_star(g, k, sink, opt);
    else
        mbc_enum(g, k, sink, opt);
    return out;
}

}  // namespace testsupport
