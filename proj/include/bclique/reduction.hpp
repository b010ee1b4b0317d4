#pragma once

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bclique/search_state.hpp"
#include "bclique/signed_graph.hpp"

namespace bclique {

namespace detail {

inline std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

// Mutable adjacency-set view of a graph used by the peeling passes.
struct MutableSignedAdj {
    std::vector<std::unordered_set<int>> pos, neg;

    explicit MutableSignedAdj(const SignedGraph& g)
        : pos(static_cast<std::size_t>(g.vertex_count())),
          neg(static_cast<std::size_t>(g.vertex_count())) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto ps = g.pos_neighbors(v);
            auto ns = g.neg_neighbors(v);
            pos[static_cast<std::size_t>(v)] = {ps.begin(), ps.end()};
            neg[static_cast<std::size_t>(v)] = {ns.begin(), ns.end()};
        }
    }

    std::unordered_set<int>& side(EdgeSign s, int v) {
        return s == EdgeSign::positive ? pos[static_cast<std::size_t>(v)] : neg[static_cast<std::size_t>(v)];
    }
    void erase_edge(EdgeSign s, int u, int v) {
        side(s, u).erase(v);
        side(s, v).erase(u);
    }

    SignedGraph freeze(const SignedGraph& original) const {
        std::vector<std::vector<int>> p(pos.size()), n(neg.size());
        for (std::size_t v = 0; v < pos.size(); ++v) {
            p[v] = {pos[v].begin(), pos[v].end()};
            n[v] = {neg[v].begin(), neg[v].end()};
            std::sort(p[v].begin(), p[v].end());
            std::sort(n[v].begin(), n[v].end());
        }
        return SignedGraph::from_adjacency(std::move(p), std::move(n), original.labels());
    }
};

}  // namespace detail

// Iteratively removes every vertex with positive degree < k-1 or negative
// degree < k until none is left, then drops all edges of removed vertices.
// The result keeps every maximal balanced clique whose sides have >= k
// vertices. Runs in O(n + m).
inline SignedGraph vertex_reduction(const SignedGraph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> dp(static_cast<std::size_t>(n)), dn(static_cast<std::size_t>(n));
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    std::deque<int> work;
    for (int v = 0; v < n; ++v) {
        dp[static_cast<std::size_t>(v)] = g.pos_degree(v);
        dn[static_cast<std::size_t>(v)] = g.neg_degree(v);
        if (dp[static_cast<std::size_t>(v)] < k - 1 || dn[static_cast<std::size_t>(v)] < k) {
            gone[static_cast<std::size_t>(v)] = true;
            work.push_back(v);
        }
    }
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        auto drop = [&](int u, std::vector<int>& deg) {
            if (gone[static_cast<std::size_t>(u)]) return;
            if (--deg[static_cast<std::size_t>(u)] < (&deg == &dp ? k - 1 : k)) {
                gone[static_cast<std::size_t>(u)] = true;
                work.push_back(u);
            }
        };
        for (int u : g.pos_neighbors(v)) drop(u, dp);
        for (int u : g.neg_neighbors(v)) drop(u, dn);
    }
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(n)), neg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        for (int u : g.pos_neighbors(v))
            if (!gone[static_cast<std::size_t>(u)]) pos[static_cast<std::size_t>(v)].push_back(u);
        for (int u : g.neg_neighbors(v))
            if (!gone[static_cast<std::size_t>(u)]) neg[static_cast<std::size_t>(v)].push_back(u);
    }
    return SignedGraph::from_adjacency(std::move(pos), std::move(neg), g.labels());
}

// Common-neighbor counts per edge, split by the sign pattern of the two
// connecting edges. For a positive edge (u,v): delta_pp counts w adjacent to
// both by positive edges, delta_mm by negative edges. For a negative edge,
// delta_pm counts w with (u,w) positive and (v,w) negative relative to the
// stored endpoint order u < v; swapping endpoints swaps delta_pm/delta_mp.
struct EdgeCommonNeighborCounts {
    struct PosCounts {
        int delta_pp = 0;
        int delta_mm = 0;
    };
    struct NegCounts {
        int delta_pm = 0;  // positive at the smaller endpoint
        int delta_mp = 0;
    };
    std::unordered_map<std::uint64_t, PosCounts> positive;
    std::unordered_map<std::uint64_t, NegCounts> negative;

    int delta_pp(int u, int v) const { return positive.at(detail::pair_key(u, v)).delta_pp; }
    int delta_mm(int u, int v) const { return positive.at(detail::pair_key(u, v)).delta_mm; }
    int delta_pm(int u, int v) const {
        const NegCounts& c = negative.at(detail::pair_key(u, v));
        return u < v ? c.delta_pm : c.delta_mp;
    }
    int delta_mp(int u, int v) const {
        const NegCounts& c = negative.at(detail::pair_key(u, v));
        return u < v ? c.delta_mp : c.delta_pm;
    }
};

namespace detail {

inline int set_intersection_size(const std::unordered_set<int>& a, const std::unordered_set<int>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& big = a.size() <= b.size() ? b : a;
    int c = 0;
    for (int x : small) c += big.count(x);
    return c;
}

inline EdgeCommonNeighborCounts compute_counts(const MutableSignedAdj& adj) {
    EdgeCommonNeighborCounts counts;
    const int n = static_cast<int>(adj.pos.size());
    for (int u = 0; u < n; ++u) {
        for (int v : adj.pos[static_cast<std::size_t>(u)]) {
            if (v < u) continue;
            auto& c = counts.positive[pair_key(u, v)];
            c.delta_pp = set_intersection_size(adj.pos[static_cast<std::size_t>(u)], adj.pos[static_cast<std::size_t>(v)]);
            c.delta_mm = set_intersection_size(adj.neg[static_cast<std::size_t>(u)], adj.neg[static_cast<std::size_t>(v)]);
        }
        for (int v : adj.neg[static_cast<std::size_t>(u)]) {
            if (v < u) continue;
            auto& c = counts.negative[pair_key(u, v)];
            c.delta_pm = set_intersection_size(adj.pos[static_cast<std::size_t>(u)], adj.neg[static_cast<std::size_t>(v)]);
            c.delta_mp = set_intersection_size(adj.neg[static_cast<std::size_t>(u)], adj.pos[static_cast<std::size_t>(v)]);
        }
    }
    return counts;
}

}  // namespace detail

inline EdgeCommonNeighborCounts edge_common_neighbor_counts(const SignedGraph& g) {
    detail::MutableSignedAdj adj(g);
    return detail::compute_counts(adj);
}

namespace detail {

// Shared fixpoint engine for the two edge-peeling variants. keep_pos/keep_neg
// decide, from the current counts, whether an edge survives. Deleting an edge
// decrements the counts of every edge it formed an admissible triangle with;
// only (+,+,+) and (+,-,-) triangles ever contribute to the counts.
template <class KeepPos, class KeepNeg>
SignedGraph edge_peel(const SignedGraph& g, KeepPos keep_pos, KeepNeg keep_neg) {
    MutableSignedAdj adj(g);
    EdgeCommonNeighborCounts counts = compute_counts(adj);

    std::deque<std::pair<std::uint64_t, EdgeSign>> work;
    std::unordered_set<std::uint64_t> queued_pos, queued_neg;
    auto enqueue = [&](int u, int v, EdgeSign s) {
        std::uint64_t key = pair_key(u, v);
        auto& queued = s == EdgeSign::positive ? queued_pos : queued_neg;
        if (queued.insert(key).second) work.emplace_back(key, s);
    };
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.pos_neighbors(u))
            if (v > u) enqueue(u, v, EdgeSign::positive);
        for (int v : g.neg_neighbors(u))
            if (v > u) enqueue(u, v, EdgeSign::negative);
    }

    auto dec_pos = [&](int a, int b, bool pp) {
        auto it = counts.positive.find(pair_key(a, b));
        if (it == counts.positive.end()) return;
        if (pp)
            --it->second.delta_pp;
        else
            --it->second.delta_mm;
        enqueue(a, b, EdgeSign::positive);
    };
    // the lost common neighbor reached `pos_end` of the negative edge
    // (pos_end, neg_end) through a positive edge
    auto dec_neg = [&](int pos_end, int neg_end) {
        std::uint64_t key = pair_key(pos_end, neg_end);
        auto it = counts.negative.find(key);
        if (it == counts.negative.end()) return;
        if (pos_end < neg_end)
            --it->second.delta_pm;
        else
            --it->second.delta_mp;
        enqueue(pos_end, neg_end, EdgeSign::negative);
    };

    while (!work.empty()) {
        auto [key, sign] = work.front();
        work.pop_front();
        (sign == EdgeSign::positive ? queued_pos : queued_neg).erase(key);
        int u = static_cast<int>(key >> 32), v = static_cast<int>(key & 0xffffffffu);

        if (sign == EdgeSign::positive) {
            auto it = counts.positive.find(key);
            if (it == counts.positive.end()) continue;  // already deleted
            if (keep_pos(it->second)) continue;
            counts.positive.erase(it);
            adj.erase_edge(EdgeSign::positive, u, v);
            // (+,+,+) triangles u-v-w: the other two positive edges each lose
            // a delta_pp contribution
            for (int w : adj.pos[static_cast<std::size_t>(u)])
                if (adj.pos[static_cast<std::size_t>(v)].count(w)) {
                    dec_pos(u, w, true);
                    dec_pos(v, w, true);
                }
            // (+,-,-) triangles with (u,v) as the positive edge: each negative
            // edge loses the contribution where its positive leg lands on our
            // endpoint
            for (int w : adj.neg[static_cast<std::size_t>(u)])
                if (adj.neg[static_cast<std::size_t>(v)].count(w)) {
                    dec_neg(u, w);
                    dec_neg(v, w);
                }
        } else {
            auto it = counts.negative.find(key);
            if (it == counts.negative.end()) continue;
            if (keep_neg(it->second)) continue;
            counts.negative.erase(it);
            adj.erase_edge(EdgeSign::negative, u, v);
            // (+,-,-) triangles where (u,v) is a negative leg: w is joined to
            // one endpoint positively and to the other negatively
            for (int w : adj.pos[static_cast<std::size_t>(u)])
                if (adj.neg[static_cast<std::size_t>(v)].count(w)) {
                    dec_pos(u, w, false);   // positive edge (u,w) loses a delta_mm
                    dec_neg(w, v);  // negative edge (w,v), positive leg at w
                }
            for (int w : adj.neg[static_cast<std::size_t>(u)])
                if (adj.pos[static_cast<std::size_t>(v)].count(w)) {
                    dec_pos(v, w, false);
                    dec_neg(w, u);
                }
        }
    }
    return adj.freeze(g);
}

}  // namespace detail

// Deletes positive edges with delta_pp < k-2 or delta_mm < k and negative
// edges with delta_pm < k-1 or delta_mp < k-1 until every surviving edge
// meets the thresholds. Counts are maintained incrementally through a
// worklist, giving O(m^1.5) overall.
inline SignedGraph edge_reduction(const SignedGraph& g, int k) {
    return detail::edge_peel(
        g,
        [k](const EdgeCommonNeighborCounts::PosCounts& c) {
            return c.delta_pp >= k - 2 && c.delta_mm >= k;
        },
        [k](const EdgeCommonNeighborCounts::NegCounts& c) {
            return c.delta_pm >= k - 1 && c.delta_mp >= k - 1;
        });
}

// Region-bounded variant: an edge survives only if the clique sides it could
// support reach both the kappa_lo and kappa_hi lower bounds.
inline SignedGraph edge_reduction_plus(const SignedGraph& g, int kappa_lo, int kappa_hi) {
    return detail::edge_peel(
        g,
        [=](const EdgeCommonNeighborCounts::PosCounts& c) {
            int lo = std::min(c.delta_pp + 2, c.delta_mm);
            int hi = std::max(c.delta_pp + 2, c.delta_mm);
            return lo >= kappa_lo && hi >= kappa_hi;
        },
        [=](const EdgeCommonNeighborCounts::NegCounts& c) {
            int lo = std::min(c.delta_pm + 1, c.delta_mp + 1);
            int hi = std::max(c.delta_pm + 1, c.delta_mp + 1);
            return lo >= kappa_lo && hi >= kappa_hi;
        });
}

// Alternates vertex and edge reduction until neither makes progress. Each
// pass enables the other, so the joint fixpoint is what enumeration wants.
inline SignedGraph reduce_for_enum(const SignedGraph& g, int k) {
    SignedGraph cur = vertex_reduction(g, k);
    for (;;) {
        SignedGraph next = edge_reduction(cur, k);
        next = vertex_reduction(next, k);
        if (next.pos_edge_count() == cur.pos_edge_count() &&
            next.neg_edge_count() == cur.neg_edge_count())
            return next;
        cur = std::move(next);
    }
}

// Candidate peeling inside one search frame. Works on the subgraph induced by
// p_left ∪ p_right and removes candidates whose degree bounds cannot reach
// the region thresholds or beat epsilon, cascading degree decrements until
// stable. Returns the removed vertices; state.p_left/p_right are updated in
// place.
inline std::vector<int> vertex_reduction_plus(SearchState& state, const SignedGraph& g,
                                              int epsilon, int kappa_lo, int kappa_hi) {
    const int cl = static_cast<int>(state.c_left.size());
    const int cr = static_cast<int>(state.c_right.size());
    std::unordered_map<int, int> dp, dn, side;  // side: 0 = left, 1 = right
    dp.reserve(state.p_left.size() + state.p_right.size());
    for (int v : state.p_left) side[v] = 0;
    for (int v : state.p_right) side[v] = 1;
    auto in_union = [&](int u) { return side.count(u) != 0; };
    for (auto& [v, s] : side) {
        int p = 0, m = 0;
        for (int u : g.pos_neighbors(v)) p += in_union(u);
        for (int u : g.neg_neighbors(v)) m += in_union(u);
        dp[v] = p;
        dn[v] = m;
    }

    auto violates = [&](int v) {
        int same = side[v] == 0 ? cl : cr;
        int cross = side[v] == 0 ? cr : cl;
        int a = dp[v] + 1 + same;
        int b = dn[v] + cross;
        if (std::min(a, b) < kappa_lo) return true;
        if (std::max(a, b) < kappa_hi) return true;
        return dp[v] + dn[v] + 1 + cl + cr <= epsilon;
    };

    std::deque<int> work;
    std::unordered_set<int> gone;
    for (auto& [v, s] : side)
        if (violates(v)) {
            gone.insert(v);
            work.push_back(v);
        }
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        auto cascade = [&](int u, std::unordered_map<int, int>& deg) {
            if (!in_union(u) || gone.count(u)) return;
            --deg[u];
            if (violates(u)) {
                gone.insert(u);
                work.push_back(u);
            }
        };
        for (int u : g.pos_neighbors(v)) cascade(u, dp);
        for (int u : g.neg_neighbors(v)) cascade(u, dn);
    }

    auto filter = [&](std::vector<int>& p) {
        std::erase_if(p, [&](int v) { return gone.count(v) != 0; });
    };
    filter(state.p_left);
    filter(state.p_right);
    std::vector<int> removed(gone.begin(), gone.end());
    std::sort(removed.begin(), removed.end());
    return removed;
}

}  // namespace bclique
