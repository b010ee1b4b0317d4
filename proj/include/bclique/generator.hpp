#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bclique/signed_graph.hpp"

namespace bclique {

// mt19937_64 with hand-rolled bounded draws so streams are identical across
// standard libraries (std::uniform_int_distribution is not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling, no modulo bias
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return x % bound;
    }
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 eng_;
};

// Randomly splits the vertices into two groups at a 4:1 ratio (the larger
// group takes ceil(4n/5) vertices), then signs every base edge: positive
// inside a group, negative across. Deterministic for a fixed seed, and every
// clique of the base graph becomes a balanced clique of the output.
inline SignedGraph synthesize_signed(int n, const std::vector<std::pair<int, int>>& base_edges,
                                     std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    rng.shuffle(perm);
    std::size_t large = n == 0 ? 0 : (static_cast<std::size_t>(n) * 4 + 4) / 5;
    std::vector<bool> in_large(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < large && i < perm.size(); ++i) in_large[static_cast<std::size_t>(perm[i])] = true;

    std::vector<SignedEdge> edges;
    edges.reserve(base_edges.size());
    for (auto [u, v] : base_edges) {
        EdgeSign s = in_large[static_cast<std::size_t>(u)] == in_large[static_cast<std::size_t>(v)]
                         ? EdgeSign::positive
                         : EdgeSign::negative;
        edges.push_back({u, v, s});
    }
    return SignedGraph::from_edges(n, edges);
}

// Uniform simple graph with exactly m edges (G(n, m)).
inline std::vector<std::pair<int, int>> random_base_graph(int n, std::int64_t m, std::uint64_t seed) {
    std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m > max_edges) throw std::invalid_argument("more edges requested than the simple graph can hold");
    Rng rng(seed);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<std::int64_t>(edges.size()) < m) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (seen.insert(key).second) edges.emplace_back(u, v);
    }
    return edges;
}

// Erdos-Renyi style signed graph: each pair is an edge with edge_prob, and an
// edge is negative with neg_prob. The differential-test corpus uses this.
inline SignedGraph random_signed_graph(int n, double edge_prob, double neg_prob, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.unit() >= edge_prob) continue;
            edges.push_back({u, v, rng.unit() < neg_prob ? EdgeSign::negative : EdgeSign::positive});
        }
    return SignedGraph::from_edges(n, edges);
}

}  // namespace bclique
