#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bclique/balanced_clique.hpp"
#include "bclique/signed_graph.hpp"

namespace bclique {

// Brute-force reference for small graphs. Assigns every vertex to
// {out, left, right} recursively, pruning on the first violated pair, then
// keeps the assignments that no single vertex can extend. Shares no logic
// with the production enumeration, so it can anchor differential tests.
//
// The smallest in-clique vertex is forced onto the left side, which makes the
// output canonical by construction.
inline std::set<BalancedClique> brute_enum(const SignedGraph& g, int k, int vertex_cap = 20) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.vertex_count() > vertex_cap)
        throw std::invalid_argument("graph too large for the brute-force reference");

    const int n = g.vertex_count();
    std::set<BalancedClique> out;
    std::vector<int> left, right;

    auto compatible = [&](int v, const std::vector<int>& same, const std::vector<int>& cross) {
        for (int u : same)
            if (!g.has_pos_edge(v, u)) return false;
        for (int u : cross)
            if (!g.has_neg_edge(v, u)) return false;
        return true;
    };

    auto consider = [&]() {
        if (left.empty() && right.empty()) return;
        BalancedClique c{left, right};
        c.canonicalize();
        if (c.min_side() < k) return;
        if (is_maximal_balanced_clique(g, c)) out.insert(c);
    };

    std::function<void(int)> walk = [&](int v) {
        if (v == n) {
            consider();
            return;
        }
        walk(v + 1);  // v stays out
        if (compatible(v, left, right)) {
            left.push_back(v);
            walk(v + 1);
            left.pop_back();
        }
        // forcing the first chosen vertex left halves the search and fixes
        // the side orientation
        if (!(left.empty() && right.empty()) && compatible(v, right, left)) {
            right.push_back(v);
            walk(v + 1);
            right.pop_back();
        }
    };
    walk(0);
    return out;
}

// Largest balanced clique with both sides >= k; ties resolved by canonical
// lexicographic order so the answer is unique.
inline std::optional<BalancedClique> brute_max(const SignedGraph& g, int k, int vertex_cap = 20) {
    std::optional<BalancedClique> best;
    for (const BalancedClique& c : brute_enum(g, k, vertex_cap)) {
        if (!best || c.size() > best->size()) best = c;
    }
    return best;
}

}  // namespace bclique
