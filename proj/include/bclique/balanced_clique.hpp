#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "bclique/signed_graph.hpp"

namespace bclique {

// A two-sided vertex set: both sides are positive cliques and every cross
// pair is a negative edge. Sides are kept sorted; canonical orientation puts
// the smallest vertex id of the union on the left so {left,right} pairs
// compare as unordered set pairs.
struct BalancedClique {
    std::vector<int> left;
    std::vector<int> right;

    int size() const { return static_cast<int>(left.size() + right.size()); }
    int min_side() const { return static_cast<int>(std::min(left.size(), right.size())); }
    int max_side() const { return static_cast<int>(std::max(left.size(), right.size())); }

    void canonicalize() {
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        if (left.empty() || (!right.empty() && right.front() < left.front()))
            std::swap(left, right);
        if (left.empty() && !right.empty()) std::swap(left, right);
    }

    bool operator==(const BalancedClique& o) const { return left == o.left && right == o.right; }
    bool operator<(const BalancedClique& o) const {
        return left != o.left ? left < o.left : right < o.right;
    }
};

inline BalancedClique make_canonical(std::vector<int> left, std::vector<int> right) {
    BalancedClique c{std::move(left), std::move(right)};
    c.canonicalize();
    return c;
}

inline std::ostream& operator<<(std::ostream& os, const BalancedClique& c) {
    os << "L:{";
    for (std::size_t i = 0; i < c.left.size(); ++i) os << (i ? "," : "") << c.left[i];
    os << "} R:{";
    for (std::size_t i = 0; i < c.right.size(); ++i) os << (i ? "," : "") << c.right[i];
    return os << "}";
}

// True iff every within-side pair is a positive edge of g and every cross
// pair a negative edge. Throws std::out_of_range for unknown vertex ids.
inline bool check_balanced_clique(const SignedGraph& g, const BalancedClique& c) {
    auto check_ids = [&](const std::vector<int>& side) {
        for (int v : side)
            if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    };
    check_ids(c.left);
    check_ids(c.right);
    auto side_complete = [&](const std::vector<int>& side) {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j)
                if (!g.has_pos_edge(side[i], side[j])) return false;
        return true;
    };
    if (!side_complete(c.left) || !side_complete(c.right)) return false;
    for (int u : c.left)
        for (int v : c.right)
            if (!g.has_neg_edge(u, v)) return false;
    return true;
}

// True iff no single vertex of g can be added to either side while keeping
// the balanced-clique conditions.
inline bool is_maximal_balanced_clique(const SignedGraph& g, const BalancedClique& c) {
    auto member = [&](int v) {
        return std::binary_search(c.left.begin(), c.left.end(), v) ||
               std::binary_search(c.right.begin(), c.right.end(), v);
    };
    auto extends = [&](int v, const std::vector<int>& same, const std::vector<int>& cross) {
        for (int u : same)
            if (!g.has_pos_edge(v, u)) return false;
        for (int u : cross)
            if (!g.has_neg_edge(v, u)) return false;
        return true;
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (member(v)) continue;
        if (extends(v, c.left, c.right) || extends(v, c.right, c.left)) return false;
    }
    return true;
}

using CliqueSink = std::function<void(const BalancedClique&)>;

}  // namespace bclique
