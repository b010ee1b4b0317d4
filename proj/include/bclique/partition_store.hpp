#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bclique/search_state.hpp"
#include "bclique/signed_graph.hpp"

namespace bclique {

struct SegmentCounts {
    int c_pos = 0, p_pos = 0, q_pos = 0;
    int c_neg = 0, p_neg = 0, q_neg = 0;
    bool operator==(const SegmentCounts&) const = default;
};

// Segmented adjacency store: every vertex's positive and negative neighbor
// list is kept as a permutation arranged in contiguous segments
// [clique | candidate | excluded | rest], ordered by the neighbors' current
// tags. A per-slot position index makes each segment move a couple of swaps,
// so retagging a vertex costs O(deg) and every local count is a constant-time
// read. Per-(sign, tag) counters additionally split each segment by side, so
// d_l and the excluded-set domination checks come straight from counters.
//
// All mutations go through an undo log of raw swaps and counter deltas;
// rolling back to a mark restores the arrays bit-for-bit, which is how a
// frame's moves are unwound when the search returns to its parent.
class PartitionedAdjacency {
  public:
    explicit PartitionedAdjacency(const SignedGraph& g) : g_(&g) {
        const int n = g.vertex_count();
        tags_.assign(static_cast<std::size_t>(n), Tag::none);
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < kTagSlots; ++t) cnt_[s][t].assign(static_cast<std::size_t>(n), 0);
        for (int s = 0; s < 2; ++s) {
            SignArrays& a = arr_[s];
            EdgeSign sign = s == 0 ? EdgeSign::positive : EdgeSign::negative;
            a.off.assign(static_cast<std::size_t>(n) + 1, 0);
            for (int v = 0; v < n; ++v)
                a.off[static_cast<std::size_t>(v) + 1] =
                    a.off[static_cast<std::size_t>(v)] + static_cast<std::int64_t>(g.neighbors(v, sign).size());
            std::int64_t slots = a.off[static_cast<std::size_t>(n)];
            a.cur.resize(static_cast<std::size_t>(slots));
            a.cur_slot.resize(static_cast<std::size_t>(slots));
            a.pos_of.resize(static_cast<std::size_t>(slots));
            a.mirror.resize(static_cast<std::size_t>(slots));
            for (int v = 0; v < n; ++v) {
                auto nbrs = g.neighbors(v, sign);
                std::int64_t base = a.off[static_cast<std::size_t>(v)];
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    std::int64_t p = base + static_cast<std::int64_t>(i);
                    a.cur[static_cast<std::size_t>(p)] = nbrs[i];
                    a.cur_slot[static_cast<std::size_t>(p)] = p;
                    a.pos_of[static_cast<std::size_t>(p)] = p;
                }
            }
            // mirror[j] = slot of the reverse direction of edge slot j
            for (int v = 0; v < n; ++v) {
                auto nbrs = g.neighbors(v, sign);
                std::int64_t base = a.off[static_cast<std::size_t>(v)];
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    int u = nbrs[i];
                    auto unbrs = g.neighbors(u, sign);
                    auto it = std::lower_bound(unbrs.begin(), unbrs.end(), v);
                    a.mirror[static_cast<std::size_t>(base + static_cast<std::int64_t>(i))] =
                        a.off[static_cast<std::size_t>(u)] + (it - unbrs.begin());
                }
            }
        }
    }

    static PartitionedAdjacency build(const SignedGraph& g, const SearchState& seed_state) {
        PartitionedAdjacency store(g);
        store.seed(seed_state);
        return store;
    }

    const SignedGraph& graph() const { return *g_; }
    Tag tag(int v) const { return tags_[static_cast<std::size_t>(v)]; }

    void seed(const SearchState& state) {
        std::vector<int> prev = active_;
        for (int v : prev) move(v, tag(v), Tag::none);
        active_.clear();
        auto assign = [&](const std::vector<int>& set, Tag t) {
            for (int v : set) {
                move(v, Tag::none, t);
                active_.push_back(v);
            }
        };
        assign(state.c_left, Tag::c_left);
        assign(state.c_right, Tag::c_right);
        assign(state.p_left, Tag::p_left);
        assign(state.p_right, Tag::p_right);
        assign(state.q_left, Tag::q_left);
        assign(state.q_right, Tag::q_right);
        log_.clear();
    }

    std::size_t mark() const { return log_.size(); }

    void rollback(std::size_t mark) {
        if (mark > log_.size()) throw std::logic_error("rollback mark beyond log");
        while (log_.size() > mark) {
            const LogEntry e = log_.back();
            log_.pop_back();
            switch (e.kind) {
                case LogEntry::swap_entries: raw_swap(arr_[e.sign], e.b, e.c); break;
                case LogEntry::counter: cnt_[e.sign][e.a][static_cast<std::size_t>(e.b)] -= static_cast<int>(e.c); break;
                case LogEntry::tag_set: tags_[static_cast<std::size_t>(e.a)] = static_cast<Tag>(e.b); break;
            }
        }
    }

    // Retags v and relocates it inside every neighbor's segmented list.
    void move(int v, Tag from, Tag to) {
        if (tag(v) != from) throw std::logic_error("vertex is not in the expected set");
        if (from == to) return;
        log_.push_back({LogEntry::tag_set, 0, v, static_cast<std::int64_t>(from), 0});
        tags_[static_cast<std::size_t>(v)] = to;
        for (int s = 0; s < 2; ++s) {
            SignArrays& a = arr_[s];
            EdgeSign sign = s == 0 ? EdgeSign::positive : EdgeSign::negative;
            auto nbrs = g_->neighbors(v, sign);
            std::int64_t base = a.off[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                relocate(s, nbrs[i], a.mirror[static_cast<std::size_t>(base + static_cast<std::int64_t>(i))], from, to);
        }
    }

    // Named move operations ------------------------------------------------

    void move_candidate_to_clique(int v, bool left_side) {
        Tag from = left_side ? Tag::p_left : Tag::p_right;
        Tag to = left_side ? Tag::c_left : Tag::c_right;
        move(v, from, to);
    }

    void move_clique_to_excluded(int v, bool left_side) {
        Tag from = left_side ? Tag::c_left : Tag::c_right;
        Tag to = left_side ? Tag::q_left : Tag::q_right;
        move(v, from, to);
    }

    using FrameMark = std::size_t;
    FrameMark frame_mark() const { return mark(); }
    void restore_frame(FrameMark m) { rollback(m); }

    SegmentCounts segment_counts(int v) const {
        SegmentCounts s;
        s.c_pos = class_count(0, v, SegClass::clique);
        s.p_pos = class_count(0, v, SegClass::candidate);
        s.q_pos = class_count(0, v, SegClass::excluded);
        s.c_neg = class_count(1, v, SegClass::clique);
        s.p_neg = class_count(1, v, SegClass::candidate);
        s.q_neg = class_count(1, v, SegClass::excluded);
        return s;
    }

    // Current contents of one segment of v's list for a sign, in internal
    // (swap-determined) order.
    std::span<const int> segment(int v, EdgeSign sign, SegClass cls) const {
        int s = sign == EdgeSign::positive ? 0 : 1;
        const SignArrays& a = arr_[s];
        std::int64_t base = a.off[static_cast<std::size_t>(v)];
        std::int64_t lo = base, hi = base;
        std::int64_t c = class_count(s, v, SegClass::clique);
        std::int64_t p = class_count(s, v, SegClass::candidate);
        std::int64_t q = class_count(s, v, SegClass::excluded);
        std::int64_t total = a.off[static_cast<std::size_t>(v) + 1] - base;
        switch (cls) {
            case SegClass::clique: lo = base; hi = base + c; break;
            case SegClass::candidate: lo = base + c; hi = base + c + p; break;
            case SegClass::excluded: lo = base + c + p; hi = base + c + p + q; break;
            case SegClass::none: lo = base + c + p + q; hi = base + total; break;
        }
        return {a.cur.data() + lo, a.cur.data() + hi};
    }

    // Engine query interface ----------------------------------------------

    int count_pos_with_tag(int v, Tag t) const { return cnt_[0][tag_slot(t)][static_cast<std::size_t>(v)]; }
    int count_neg_with_tag(int v, Tag t) const { return cnt_[1][tag_slot(t)][static_cast<std::size_t>(v)]; }

    void collect_pos_with_tag(int v, Tag t, std::vector<int>& out) const {
        collect(0, v, t, out);
    }
    void collect_neg_with_tag(int v, Tag t, std::vector<int>& out) const {
        collect(1, v, t, out);
    }

    int local_degree_of(int v) const {
        Tag t = tag(v);
        if (is_left(t)) return count_pos_with_tag(v, Tag::p_left) + count_neg_with_tag(v, Tag::p_right);
        if (is_right(t)) return count_pos_with_tag(v, Tag::p_right) + count_neg_with_tag(v, Tag::p_left);
        throw std::logic_error("local degree queried for an untagged vertex");
    }

  private:
    static constexpr int kTagSlots = 6;  // c_left..q_right

    struct SignArrays {
        std::vector<std::int64_t> off;
        std::vector<int> cur;
        std::vector<std::int64_t> cur_slot;
        std::vector<std::int64_t> pos_of;
        std::vector<std::int64_t> mirror;
    };

    struct LogEntry {
        enum Kind : std::uint8_t { swap_entries, counter, tag_set } kind;
        std::uint8_t sign;
        int a;            // counter: tag slot; tag_set: vertex; swap: unused high part of pos a
        std::int64_t b;   // swap: position; counter: vertex; tag_set: old tag
        std::int64_t c;   // swap: position; counter: delta
    };

    static int tag_slot(Tag t) { return static_cast<int>(t) - 1; }

    int class_count(int s, int v, SegClass cls) const {
        switch (cls) {
            case SegClass::clique:
                return cnt_[s][tag_slot(Tag::c_left)][static_cast<std::size_t>(v)] +
                       cnt_[s][tag_slot(Tag::c_right)][static_cast<std::size_t>(v)];
            case SegClass::candidate:
                return cnt_[s][tag_slot(Tag::p_left)][static_cast<std::size_t>(v)] +
                       cnt_[s][tag_slot(Tag::p_right)][static_cast<std::size_t>(v)];
            case SegClass::excluded:
                return cnt_[s][tag_slot(Tag::q_left)][static_cast<std::size_t>(v)] +
                       cnt_[s][tag_slot(Tag::q_right)][static_cast<std::size_t>(v)];
            default: {
                std::int64_t total = arr_[s].off[static_cast<std::size_t>(v) + 1] - arr_[s].off[static_cast<std::size_t>(v)];
                return static_cast<int>(total) - class_count(s, v, SegClass::clique) -
                       class_count(s, v, SegClass::candidate) - class_count(s, v, SegClass::excluded);
            }
        }
    }

    void raw_swap(SignArrays& a, std::int64_t p1, std::int64_t p2) {
        if (p1 == p2) return;
        std::swap(a.cur[static_cast<std::size_t>(p1)], a.cur[static_cast<std::size_t>(p2)]);
        std::swap(a.cur_slot[static_cast<std::size_t>(p1)], a.cur_slot[static_cast<std::size_t>(p2)]);
        a.pos_of[static_cast<std::size_t>(a.cur_slot[static_cast<std::size_t>(p1)])] = p1;
        a.pos_of[static_cast<std::size_t>(a.cur_slot[static_cast<std::size_t>(p2)])] = p2;
    }

    void logged_swap(int s, std::int64_t p1, std::int64_t p2) {
        if (p1 == p2) return;
        raw_swap(arr_[s], p1, p2);
        log_.push_back({LogEntry::swap_entries, static_cast<std::uint8_t>(s), 0, p1, p2});
    }

    void bump_counter(int s, Tag t, int v, int delta) {
        if (t == Tag::none) return;
        cnt_[s][tag_slot(t)][static_cast<std::size_t>(v)] += delta;
        log_.push_back({LogEntry::counter, static_cast<std::uint8_t>(s), tag_slot(t),
                        static_cast<std::int64_t>(v), static_cast<std::int64_t>(delta)});
    }

    // Moves the entry for `slot` (the occurrence of the retagged vertex in
    // u's sign-s list) from segment class to segment class via boundary
    // swaps. Promotions land at the end of the target segment, demotions at
    // its front, matching the swap-with-boundary discipline.
    void relocate(int s, int u, std::int64_t slot, Tag from, Tag to) {
        SignArrays& a = arr_[s];
        int cfrom = static_cast<int>(seg_class(from));
        int cto = static_cast<int>(seg_class(to));
        if (cfrom != cto) {
            std::int64_t base = a.off[static_cast<std::size_t>(u)];
            std::int64_t bound[5];
            bound[0] = base;
            bound[1] = bound[0] + class_count(s, u, SegClass::clique);
            bound[2] = bound[1] + class_count(s, u, SegClass::candidate);
            bound[3] = bound[2] + class_count(s, u, SegClass::excluded);
            bound[4] = a.off[static_cast<std::size_t>(u) + 1];
            std::int64_t p = a.pos_of[static_cast<std::size_t>(slot)];
            while (cfrom > cto) {  // promote toward the front
                logged_swap(s, p, bound[cfrom]);
                p = bound[cfrom];
                --cfrom;
            }
            while (cfrom < cto) {  // demote toward the back
                logged_swap(s, p, bound[cfrom + 1] - 1);
                p = bound[cfrom + 1] - 1;
                ++cfrom;
            }
        }
        bump_counter(s, from, u, -1);
        bump_counter(s, to, u, +1);
    }

    void collect(int s, int v, Tag t, std::vector<int>& out) const {
        out.clear();
        SegClass cls = seg_class(t);
        auto seg = segment(v, s == 0 ? EdgeSign::positive : EdgeSign::negative, cls);
        for (int u : seg)
            if (tag(u) == t) out.push_back(u);
        std::sort(out.begin(), out.end());
    }

    const SignedGraph* g_;
    SignArrays arr_[2];
    std::vector<int> cnt_[2][kTagSlots];
    std::vector<Tag> tags_;
    std::vector<int> active_;
    std::vector<LogEntry> log_;
};

}  // namespace bclique
