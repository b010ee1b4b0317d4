#pragma once

#include <stdexcept>
#include <vector>

#include "bclique/search_state.hpp"
#include "bclique/signed_graph.hpp"

namespace bclique {

// Reference backend for the search engines: a plain tag array over the
// immutable graph, answering every local query by scanning adjacency lists.
// The partitioned store must match this backend query-for-query, which is
// what the differential tests check.
class NaiveStore {
  public:
    explicit NaiveStore(const SignedGraph& g)
        : g_(&g), tags_(static_cast<std::size_t>(g.vertex_count()), Tag::none) {}

    const SignedGraph& graph() const { return *g_; }
    Tag tag(int v) const { return tags_[static_cast<std::size_t>(v)]; }

    void seed(const SearchState& state) {
        for (int v : active_) tags_[static_cast<std::size_t>(v)] = Tag::none;
        active_.clear();
        log_.clear();
        auto assign = [&](const std::vector<int>& set, Tag t) {
            for (int v : set) {
                tags_[static_cast<std::size_t>(v)] = t;
                active_.push_back(v);
            }
        };
        assign(state.c_left, Tag::c_left);
        assign(state.c_right, Tag::c_right);
        assign(state.p_left, Tag::p_left);
        assign(state.p_right, Tag::p_right);
        assign(state.q_left, Tag::q_left);
        assign(state.q_right, Tag::q_right);
    }

    std::size_t mark() const { return log_.size(); }

    void rollback(std::size_t mark) {
        if (mark > log_.size()) throw std::logic_error("rollback mark beyond log");
        while (log_.size() > mark) {
            auto [v, old] = log_.back();
            log_.pop_back();
            tags_[static_cast<std::size_t>(v)] = old;
        }
    }

    void move(int v, Tag from, Tag to) {
        if (tag(v) != from) throw std::logic_error("vertex is not in the expected set");
        log_.emplace_back(v, from);
        tags_[static_cast<std::size_t>(v)] = to;
    }

    int count_pos_with_tag(int v, Tag t) const { return count(g_->pos_neighbors(v), t); }
    int count_neg_with_tag(int v, Tag t) const { return count(g_->neg_neighbors(v), t); }

    void collect_pos_with_tag(int v, Tag t, std::vector<int>& out) const {
        collect(g_->pos_neighbors(v), t, out);
    }
    void collect_neg_with_tag(int v, Tag t, std::vector<int>& out) const {
        collect(g_->neg_neighbors(v), t, out);
    }

    // d_l(v): usable candidates around v given its side — positive neighbors
    // in P on the same side plus negative neighbors in P on the other side.
    int local_degree_of(int v) const {
        Tag t = tag(v);
        if (is_left(t)) return count_pos_with_tag(v, Tag::p_left) + count_neg_with_tag(v, Tag::p_right);
        if (is_right(t)) return count_pos_with_tag(v, Tag::p_right) + count_neg_with_tag(v, Tag::p_left);
        throw std::logic_error("local degree queried for an untagged vertex");
    }

  private:
    int count(std::span<const int> nbrs, Tag t) const {
        int c = 0;
        for (int u : nbrs) c += tag(u) == t;
        return c;
    }
    void collect(std::span<const int> nbrs, Tag t, std::vector<int>& out) const {
        out.clear();
        for (int u : nbrs)
            if (tag(u) == t) out.push_back(u);
    }

    const SignedGraph* g_;
    std::vector<Tag> tags_;
    std::vector<std::pair<int, Tag>> log_;
    std::vector<int> active_;
};

}  // namespace bclique
