#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bclique {

enum class EdgeSign : std::uint8_t { positive, negative };

struct SignedEdge {
    int u;
    int v;
    EdgeSign sign;
};

struct GraphStats {
    int n = 0;
    std::int64_t m_pos = 0;
    std::int64_t m_neg = 0;
    int max_pos_degree = 0;
    int max_neg_degree = 0;
};

struct EdgeConflictError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected signed graph stored as two CSR adjacency structures, one per
// edge sign. Neighbor lists are sorted ascending and hold no duplicates.
// Instances are immutable after construction and safe to share across threads.
class SignedGraph {
  public:
    SignedGraph() { rebuild_offsets({}, {}); }

    // Builds a graph from an undirected edge list. Edges may appear in either
    // orientation and more than once; duplicates with a consistent sign are
    // collapsed, a pair carrying both signs raises EdgeConflictError, and
    // self-loops are rejected.
    static SignedGraph from_edges(int n, const std::vector<SignedEdge>& edges,
                                  std::vector<std::string> labels = {}) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        std::vector<std::vector<std::pair<int, EdgeSign>>> adj(static_cast<std::size_t>(n));
        for (const SignedEdge& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw std::out_of_range("edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("self-loop rejected");
            adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.sign);
            adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.sign);
        }
        SignedGraph g;
        g.n_ = n;
        g.labels_ = std::move(labels);
        std::vector<std::vector<int>> pos(static_cast<std::size_t>(n)), neg(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& nb = adj[static_cast<std::size_t>(v)];
            std::sort(nb.begin(), nb.end(), [](const auto& a, const auto& b) {
                return a.first < b.first || (a.first == b.first && a.second < b.second);
            });
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (i > 0 && nb[i].first == nb[i - 1].first) {
                    if (nb[i].second != nb[i - 1].second)
                        throw EdgeConflictError("edge (" + std::to_string(v) + "," +
                                                std::to_string(nb[i].first) +
                                                ") appears with both signs");
                    continue;
                }
                if (nb[i].second == EdgeSign::positive)
                    pos[static_cast<std::size_t>(v)].push_back(nb[i].first);
                else
                    neg[static_cast<std::size_t>(v)].push_back(nb[i].first);
            }
        }
        g.rebuild_offsets(pos, neg);
        return g;
    }

    // Builds directly from per-vertex sorted adjacency (already symmetric and
    // deduplicated). Used by the reduction passes.
    static SignedGraph from_adjacency(std::vector<std::vector<int>> pos,
                                      std::vector<std::vector<int>> neg,
                                      std::vector<std::string> labels = {}) {
        if (pos.size() != neg.size()) throw std::invalid_argument("adjacency size mismatch");
        SignedGraph g;
        g.n_ = static_cast<int>(pos.size());
        g.labels_ = std::move(labels);
        g.rebuild_offsets(pos, neg);
        return g;
    }

    int vertex_count() const { return n_; }
    std::int64_t pos_edge_count() const { return m_pos_; }
    std::int64_t neg_edge_count() const { return m_neg_; }
    std::int64_t edge_count() const { return m_pos_ + m_neg_; }

    std::span<const int> pos_neighbors(int v) const {
        return {pos_adj_.data() + pos_off_[static_cast<std::size_t>(v)],
                pos_adj_.data() + pos_off_[static_cast<std::size_t>(v) + 1]};
    }
    std::span<const int> neg_neighbors(int v) const {
        return {neg_adj_.data() + neg_off_[static_cast<std::size_t>(v)],
                neg_adj_.data() + neg_off_[static_cast<std::size_t>(v) + 1]};
    }
    std::span<const int> neighbors(int v, EdgeSign s) const {
        return s == EdgeSign::positive ? pos_neighbors(v) : neg_neighbors(v);
    }

    int pos_degree(int v) const { return static_cast<int>(pos_neighbors(v).size()); }
    int neg_degree(int v) const { return static_cast<int>(neg_neighbors(v).size()); }
    int degree(int v) const { return pos_degree(v) + neg_degree(v); }

    bool has_pos_edge(int u, int v) const { return contains(pos_neighbors(u), v); }
    bool has_neg_edge(int u, int v) const { return contains(neg_neighbors(u), v); }
    bool has_edge(int u, int v) const { return has_pos_edge(u, v) || has_neg_edge(u, v); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const {
        if (v >= 0 && static_cast<std::size_t>(v) < labels_.size()) return labels_[static_cast<std::size_t>(v)];
        return std::to_string(v);
    }

    GraphStats stats() const {
        GraphStats s;
        s.n = n_;
        s.m_pos = m_pos_;
        s.m_neg = m_neg_;
        for (int v = 0; v < n_; ++v) {
            s.max_pos_degree = std::max(s.max_pos_degree, pos_degree(v));
            s.max_neg_degree = std::max(s.max_neg_degree, neg_degree(v));
        }
        return s;
    }

    std::vector<SignedEdge> edges() const {
        std::vector<SignedEdge> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u) {
            for (int v : pos_neighbors(u))
                if (v > u) out.push_back({u, v, EdgeSign::positive});
            for (int v : neg_neighbors(u))
                if (v > u) out.push_back({u, v, EdgeSign::negative});
        }
        return out;
    }

    bool operator==(const SignedGraph& o) const {
        return n_ == o.n_ && pos_off_ == o.pos_off_ && pos_adj_ == o.pos_adj_ &&
               neg_off_ == o.neg_off_ && neg_adj_ == o.neg_adj_;
    }

  private:
    static bool contains(std::span<const int> sorted, int x) {
        return std::binary_search(sorted.begin(), sorted.end(), x);
    }

    void rebuild_offsets(const std::vector<std::vector<int>>& pos,
                         const std::vector<std::vector<int>>& neg) {
        pos_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
        neg_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
        pos_adj_.clear();
        neg_adj_.clear();
        for (int v = 0; v < n_; ++v) {
            pos_adj_.insert(pos_adj_.end(), pos[static_cast<std::size_t>(v)].begin(), pos[static_cast<std::size_t>(v)].end());
            neg_adj_.insert(neg_adj_.end(), neg[static_cast<std::size_t>(v)].begin(), neg[static_cast<std::size_t>(v)].end());
            pos_off_[static_cast<std::size_t>(v) + 1] = static_cast<std::int64_t>(pos_adj_.size());
            neg_off_[static_cast<std::size_t>(v) + 1] = static_cast<std::int64_t>(neg_adj_.size());
        }
        m_pos_ = static_cast<std::int64_t>(pos_adj_.size()) / 2;
        m_neg_ = static_cast<std::int64_t>(neg_adj_.size()) / 2;
    }

    int n_ = 0;
    std::int64_t m_pos_ = 0;
    std::int64_t m_neg_ = 0;
    std::vector<std::int64_t> pos_off_, neg_off_;
    std::vector<int> pos_adj_, neg_adj_;
    std::vector<std::string> labels_;
};

enum class SignScope : std::uint8_t { all_edges, positive_only };

struct DegeneracyResult {
    std::vector<int> order;     // min-degree peeling order
    std::vector<int> position;  // position[v] = index of v in order
    int sigma = 0;
    SignScope sign_scope = SignScope::all_edges;
};

// Min-degree peeling over the selected edge scope. Ties are broken by the
// smallest vertex id so the order is reproducible.
inline DegeneracyResult degeneracy(const SignedGraph& g, SignScope scope) {
    const int n = g.vertex_count();
    DegeneracyResult res;
    res.sign_scope = scope;
    res.order.reserve(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] =
            scope == SignScope::all_edges ? g.degree(v) : g.pos_degree(v);

    std::set<std::pair<int, int>> queue;  // (degree, vertex)
    for (int v = 0; v < n; ++v) queue.emplace(deg[static_cast<std::size_t>(v)], v);
    std::vector<bool> removed(static_cast<std::size_t>(n), false);

    auto relax = [&](int u) {
        if (removed[static_cast<std::size_t>(u)]) return;
        queue.erase({deg[static_cast<std::size_t>(u)], u});
        queue.emplace(--deg[static_cast<std::size_t>(u)], u);
    };

    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = true;
        res.sigma = std::max(res.sigma, d);
        res.order.push_back(v);
        for (int u : g.pos_neighbors(v)) relax(u);
        if (scope == SignScope::all_edges)
            for (int u : g.neg_neighbors(v)) relax(u);
    }
    res.position.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) res.position[static_cast<std::size_t>(res.order[static_cast<std::size_t>(i)])] = i;
    return res;
}

inline GraphStats graph_stats(const SignedGraph& g) { return g.stats(); }

}  // namespace bclique
