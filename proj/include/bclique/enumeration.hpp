#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>

#include "bclique/balanced_clique.hpp"
#include "bclique/naive_store.hpp"
#include "bclique/partition_store.hpp"
#include "bclique/search_state.hpp"
#include "bclique/signed_graph.hpp"

namespace bclique {

enum class StoreKind : std::uint8_t { naive, partitioned };
enum class RootOrder : std::uint8_t { degeneracy, by_id };

using Clock = std::chrono::steady_clock;

// Per-frame instrumentation hook: receives the frame state and the backend's
// (vertex, local degree) pairs for every candidate/excluded vertex.
using FrameProbe = std::function<void(const SearchState&, const std::vector<std::pair<int, int>>&)>;

struct EnumOptions {
    bool pivot = true;          // star only: branch on the pivot's non-neighbors
    bool et_rules = true;       // star only: early-termination rules
    bool degree_order = true;   // star only: process candidates by ascending d_l
    RootOrder root_order = RootOrder::degeneracy;
    StoreKind store = StoreKind::naive;
    int threads = 1;
    double time_budget_secs = 0.0;  // 0 = unlimited
    FrameProbe frame_probe;         // test instrumentation, empty in production
};

struct EnumResult {
    std::uint64_t emitted = 0;
    std::uint64_t frames = 0;
    bool timed_out = false;
};

// ---------------------------------------------------------------------------
// Standalone operations on an explicit SearchState (the engines answer the
// same questions through their store backend).

namespace detail {

inline int sorted_intersection_size(std::span<const int> a, std::span<const int> b) {
    int c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

inline bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace detail

// d_l(v): positive neighbors of v among same-side candidates plus negative
// neighbors among other-side candidates. v must sit in one of the four
// candidate/excluded sets.
inline int local_degree(int v, const SearchState& s, const SignedGraph& g) {
    bool left = detail::sorted_contains(s.p_left, v) || detail::sorted_contains(s.q_left, v);
    bool right = detail::sorted_contains(s.p_right, v) || detail::sorted_contains(s.q_right, v);
    if (!left && !right)
        throw std::invalid_argument("local_degree: vertex not in any candidate/excluded set");
    const std::vector<int>& same = left ? s.p_left : s.p_right;
    const std::vector<int>& cross = left ? s.p_right : s.p_left;
    return detail::sorted_intersection_size(g.pos_neighbors(v), {same.data(), same.size()}) +
           detail::sorted_intersection_size(g.neg_neighbors(v), {cross.data(), cross.size()});
}

// Vertex of P ∪ Q with maximum d_l, smallest id on ties.
inline int choose_pivot(const SearchState& s, const SignedGraph& g) {
    int best = -1, best_dl = -1;
    auto scan = [&](const std::vector<int>& set) {
        for (int v : set) {
            int dl = local_degree(v, s, g);
            if (dl > best_dl || (dl == best_dl && v < best)) {
                best = v;
                best_dl = dl;
            }
        }
    };
    scan(s.p_left);
    scan(s.p_right);
    scan(s.q_left);
    scan(s.q_right);
    if (best < 0) throw std::invalid_argument("choose_pivot: all candidate/excluded sets empty");
    return best;
}

enum class EtDecision : std::uint8_t { Continue, PruneBranch, EmitUnion };

// Rule 1: a side can no longer reach k. Rule 2: some excluded vertex covers
// both candidate sets, so everything here was already reported. Rule 3: the
// candidate sets already form a balanced clique; the union with the current
// clique is maximal and can be emitted directly. Rule 3 is only valid once
// Rule 2 has been checked.
inline EtDecision early_termination(const SearchState& s, const SignedGraph& g, int k) {
    auto covers = [&](int v, const std::vector<int>& pos_set, const std::vector<int>& neg_set) {
        return detail::sorted_intersection_size(g.pos_neighbors(v), {pos_set.data(), pos_set.size()}) ==
                   static_cast<int>(pos_set.size()) &&
               detail::sorted_intersection_size(g.neg_neighbors(v), {neg_set.data(), neg_set.size()}) ==
                   static_cast<int>(neg_set.size());
    };
    if (static_cast<int>(s.c_left.size() + s.p_left.size()) < k ||
        static_cast<int>(s.c_right.size() + s.p_right.size()) < k)
        return EtDecision::PruneBranch;
    for (int q : s.q_left)
        if (covers(q, s.p_left, s.p_right)) return EtDecision::PruneBranch;
    for (int q : s.q_right)
        if (covers(q, s.p_right, s.p_left)) return EtDecision::PruneBranch;
    for (int p : s.p_left)
        if (detail::sorted_intersection_size(g.pos_neighbors(p), {s.p_left.data(), s.p_left.size()}) !=
                static_cast<int>(s.p_left.size()) - 1 ||
            detail::sorted_intersection_size(g.neg_neighbors(p), {s.p_right.data(), s.p_right.size()}) !=
                static_cast<int>(s.p_right.size()))
            return EtDecision::Continue;
    for (int p : s.p_right)
        if (detail::sorted_intersection_size(g.pos_neighbors(p), {s.p_right.data(), s.p_right.size()}) !=
                static_cast<int>(s.p_right.size()) - 1 ||
            detail::sorted_intersection_size(g.neg_neighbors(p), {s.p_left.data(), s.p_left.size()}) !=
                static_cast<int>(s.p_left.size()))
            return EtDecision::Continue;
    return EtDecision::EmitUnion;
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> root_order_of(const SignedGraph& g, RootOrder order, std::vector<int>& position) {
    const int n = g.vertex_count();
    std::vector<int> ord;
    if (order == RootOrder::degeneracy) {
        DegeneracyResult d = degeneracy(g, SignScope::all_edges);
        ord = std::move(d.order);
        position = std::move(d.position);
    } else {
        ord.resize(static_cast<std::size_t>(n));
        position.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) ord[static_cast<std::size_t>(v)] = position[static_cast<std::size_t>(v)] = v;
    }
    return ord;
}

inline SearchState seed_root(const SignedGraph& g, int v, const std::vector<int>& position) {
    SearchState s;
    s.c_left = {v};
    int pv = position[static_cast<std::size_t>(v)];
    for (int u : g.pos_neighbors(v))
        (position[static_cast<std::size_t>(u)] > pv ? s.p_left : s.q_left).push_back(u);
    for (int u : g.neg_neighbors(v))
        (position[static_cast<std::size_t>(u)] > pv ? s.p_right : s.q_right).push_back(u);
    s.depth_parity = true;
    return s;
}

// Child frame of branching on v: v joins its side of the clique and every
// set is filtered to v's sign-compatible neighbors.
template <class Store>
void build_child_sets(const Store& store, const SearchState& f, int v, bool left_side, bool flag,
                      SearchState& child) {
    child.c_left = f.c_left;
    child.c_right = f.c_right;
    (left_side ? child.c_left : child.c_right).push_back(v);
    if (left_side) {
        store.collect_pos_with_tag(v, Tag::p_left, child.p_left);
        store.collect_neg_with_tag(v, Tag::p_right, child.p_right);
        store.collect_pos_with_tag(v, Tag::q_left, child.q_left);
        store.collect_neg_with_tag(v, Tag::q_right, child.q_right);
    } else {
        store.collect_neg_with_tag(v, Tag::p_left, child.p_left);
        store.collect_pos_with_tag(v, Tag::p_right, child.p_right);
        store.collect_neg_with_tag(v, Tag::q_left, child.q_left);
        store.collect_pos_with_tag(v, Tag::q_right, child.q_right);
    }
    child.depth_parity = flag;
}

// Drops every vertex of the parent frame that does not survive into the
// child, so the store's tags mirror the child frame exactly. moved_l/moved_r
// are the siblings already shifted into the excluded sets this frame.
template <class Store>
void narrow_store_to_child(Store& store, const SearchState& f, const SearchState& child,
                           int branched, const std::vector<int>& moved_l,
                           const std::vector<int>& moved_r) {
    auto drop = [&](const std::vector<int>& parent, const std::vector<int>& kept, Tag t) {
        for (int u : parent) {
            if (u == branched || store.tag(u) != t) continue;
            if (!sorted_contains(kept, u)) store.move(u, t, Tag::none);
        }
    };
    drop(f.p_left, child.p_left, Tag::p_left);
    drop(f.p_right, child.p_right, Tag::p_right);
    drop(f.q_left, child.q_left, Tag::q_left);
    drop(f.q_right, child.q_right, Tag::q_right);
    drop(moved_l, child.q_left, Tag::q_left);
    drop(moved_r, child.q_right, Tag::q_right);
}

template <class Store>
int pivot_by_local_degree(const Store& store, const SearchState& f) {
    int best = -1, best_dl = -1;
    for (const auto* set : {&f.p_left, &f.p_right, &f.q_left, &f.q_right})
        for (int v : *set) {
            int dl = store.local_degree_of(v);
            if (dl > best_dl || (dl == best_dl && v < best)) {
                best = v;
                best_dl = dl;
            }
        }
    return best;
}

template <class Store>
void order_by_local_degree(const Store& store, std::vector<int>& side) {
    std::vector<std::pair<int, int>> keyed;
    keyed.reserve(side.size());
    for (int v : side) keyed.emplace_back(store.local_degree_of(v), v);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < side.size(); ++i) side[i] = keyed[i].second;
}

// Branching set after pivoting: candidates the pivot cannot absorb, i.e.
// those not adjacent to it with the sign its side requires. A candidate
// pivot stays in its own branching set.
template <class Store>
void pivot_branch_sets(const Store& store, const SignedGraph& g, const SearchState& f, int pivot,
                       std::vector<int>& branch_l, std::vector<int>& branch_r) {
    bool pivot_left = is_left(store.tag(pivot));
    for (int u : f.p_left)
        if (u == pivot || !(pivot_left ? g.has_pos_edge(pivot, u) : g.has_neg_edge(pivot, u)))
            branch_l.push_back(u);
    for (int u : f.p_right)
        if (u == pivot || !(pivot_left ? g.has_neg_edge(pivot, u) : g.has_pos_edge(pivot, u)))
            branch_r.push_back(u);
}

template <class Store>
class EnumEngine {
  public:
    EnumEngine(const SignedGraph& g, int k, bool star, const EnumOptions& opt,
               const CliqueSink* sink, std::optional<Clock::time_point> deadline)
        : g_(g), store_(g), k_(k), star_(star), opt_(opt), sink_(sink), deadline_(deadline) {}

    EnumResult run(std::span<const int> roots, const std::vector<int>& position) {
        for (int v : roots) {
            SearchState root = seed_root(g_, v, position);
            store_.seed(root);
            if (!frame(root)) break;
        }
        return {emitted_, frames_, timed_out_};
    }

    std::uint64_t frames() const { return frames_; }

  private:
    bool expired() {
        if (!deadline_) return false;
        if ((frames_ & 1023) != 0) return false;
        return Clock::now() >= *deadline_;
    }

    void emit(const std::vector<int>& left, const std::vector<int>& right) {
        ++emitted_;
        if (!sink_ || !*sink_) return;
        (*sink_)(make_canonical(left, right));
    }

    void probe(const SearchState& f) {
        std::vector<std::pair<int, int>> dls;
        for (const auto* set : {&f.p_left, &f.p_right, &f.q_left, &f.q_right})
            for (int v : *set) dls.emplace_back(v, store_.local_degree_of(v));
        opt_.frame_probe(f, dls);
    }

    // Rule 2 / Rule 3 through the store counters.
    EtDecision early_termination_fast(const SearchState& f) {
        const int pl = static_cast<int>(f.p_left.size());
        const int pr = static_cast<int>(f.p_right.size());
        if (static_cast<int>(f.c_left.size()) + pl < k_ ||
            static_cast<int>(f.c_right.size()) + pr < k_)
            return EtDecision::PruneBranch;
        for (int q : f.q_left)
            if (store_.count_pos_with_tag(q, Tag::p_left) == pl &&
                store_.count_neg_with_tag(q, Tag::p_right) == pr)
                return EtDecision::PruneBranch;
        for (int q : f.q_right)
            if (store_.count_pos_with_tag(q, Tag::p_right) == pr &&
                store_.count_neg_with_tag(q, Tag::p_left) == pl)
                return EtDecision::PruneBranch;
        for (int p : f.p_left)
            if (store_.count_pos_with_tag(p, Tag::p_left) != pl - 1 ||
                store_.count_neg_with_tag(p, Tag::p_right) != pr)
                return EtDecision::Continue;
        for (int p : f.p_right)
            if (store_.count_pos_with_tag(p, Tag::p_right) != pr - 1 ||
                store_.count_neg_with_tag(p, Tag::p_left) != pl)
                return EtDecision::Continue;
        return EtDecision::EmitUnion;
    }

    bool branch_on(const SearchState& f, int v, bool left_side, bool flag,
                   std::vector<int>& moved_l, std::vector<int>& moved_r) {
        Tag p_tag = left_side ? Tag::p_left : Tag::p_right;
        Tag c_tag = left_side ? Tag::c_left : Tag::c_right;
        Tag q_tag = left_side ? Tag::q_left : Tag::q_right;
        auto cp = store_.mark();
        SearchState child;
        build_child_sets(store_, f, v, left_side, flag, child);
        store_.move(v, p_tag, c_tag);
        narrow_store_to_child(store_, f, child, v, moved_l, moved_r);
        bool ok = frame(child);
        store_.rollback(cp);
        store_.move(v, p_tag, q_tag);
        (left_side ? moved_l : moved_r).push_back(v);
        return ok;
    }

    bool frame(const SearchState& f) {
        ++frames_;
        if (expired()) {
            timed_out_ = true;
            return false;
        }
        if (opt_.frame_probe) probe(f);

        if (f.p_left.empty() && f.p_right.empty() && f.q_left.empty() && f.q_right.empty()) {
            if (static_cast<int>(f.c_left.size()) >= k_ && static_cast<int>(f.c_right.size()) >= k_)
                emit(f.c_left, f.c_right);
            return true;
        }

        if (star_ && opt_.et_rules) {
            switch (early_termination_fast(f)) {
                case EtDecision::PruneBranch: return true;
                case EtDecision::EmitUnion: {
                    std::vector<int> l = f.c_left, r = f.c_right;
                    l.insert(l.end(), f.p_left.begin(), f.p_left.end());
                    r.insert(r.end(), f.p_right.begin(), f.p_right.end());
                    emit(l, r);
                    return true;
                }
                case EtDecision::Continue: break;
            }
        }
        if (f.p_left.empty() && f.p_right.empty()) return true;

        std::vector<int> branch_l, branch_r;
        if (star_ && opt_.pivot) {
            int p = pivot_by_local_degree(store_, f);
            pivot_branch_sets(store_, g_, f, p, branch_l, branch_r);
        } else {
            branch_l = f.p_left;
            branch_r = f.p_right;
        }
        if (star_ && opt_.degree_order) {
            order_by_local_degree(store_, branch_l);
            order_by_local_degree(store_, branch_r);
        }

        bool flag = !f.depth_parity;
        std::vector<int> moved_l, moved_r;
        if (flag) {
            for (int v : branch_l)
                if (!branch_on(f, v, true, flag, moved_l, moved_r)) return false;
            for (int v : branch_r)
                if (!branch_on(f, v, false, flag, moved_l, moved_r)) return false;
        } else {
            for (int v : branch_r)
                if (!branch_on(f, v, false, flag, moved_l, moved_r)) return false;
            for (int v : branch_l)
                if (!branch_on(f, v, true, flag, moved_l, moved_r)) return false;
        }
        return true;
    }

    const SignedGraph& g_;
    Store store_;
    int k_;
    bool star_;
    const EnumOptions& opt_;
    const CliqueSink* sink_;
    std::optional<Clock::time_point> deadline_;
    std::uint64_t frames_ = 0, emitted_ = 0;
    bool timed_out_ = false;
};

template <class Store>
EnumResult run_enum(const SignedGraph& g, int k, bool star, const EnumOptions& opt,
                    const CliqueSink& sink) {
    std::vector<int> position;
    std::vector<int> order = root_order_of(g, opt.root_order, position);
    std::optional<Clock::time_point> deadline;
    if (opt.time_budget_secs > 0)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(opt.time_budget_secs));

    int threads = std::max(1, opt.threads);
    if (threads == 1 || g.vertex_count() == 0) {
        EnumEngine<Store> engine(g, k, star, opt, &sink, deadline);
        return engine.run(order, position);
    }

    // Static block partition over root vertices: each worker owns a private
    // store and buffers its cliques; buffers are replayed in worker order so
    // output is reproducible for a fixed thread count.
    threads = std::min<int>(threads, std::max(1, g.vertex_count()));
    std::vector<std::vector<BalancedClique>> buffers(static_cast<std::size_t>(threads));
    std::vector<EnumResult> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    std::size_t chunk = (order.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            std::size_t lo = static_cast<std::size_t>(w) * chunk;
            std::size_t hi = std::min(order.size(), lo + chunk);
            if (lo >= hi) return;
            CliqueSink local = [&, w](const BalancedClique& c) { buffers[static_cast<std::size_t>(w)].push_back(c); };
            EnumEngine<Store> engine(g, k, star, opt, &local, deadline);
            partial[static_cast<std::size_t>(w)] =
                engine.run(std::span<const int>(order.data() + lo, hi - lo), position);
        });
    }
    for (auto& t : pool) t.join();
    EnumResult total;
    for (int w = 0; w < threads; ++w) {
        total.emitted += partial[static_cast<std::size_t>(w)].emitted;
        total.frames += partial[static_cast<std::size_t>(w)].frames;
        total.timed_out = total.timed_out || partial[static_cast<std::size_t>(w)].timed_out;
        if (sink)
            for (const BalancedClique& c : buffers[static_cast<std::size_t>(w)]) sink(c);
    }
    return total;
}

}  // namespace detail

// Six-set branch and bound over the degeneracy order; emits every maximal
// balanced clique with both sides >= k exactly once (canonicalized).
inline EnumResult mbc_enum(const SignedGraph& g, int k, const CliqueSink& sink,
                           const EnumOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return opt.store == StoreKind::naive
               ? detail::run_enum<NaiveStore>(g, k, false, opt, sink)
               : detail::run_enum<PartitionedAdjacency>(g, k, false, opt, sink);
}

// Same output set as mbc_enum with pivot-based branch pruning, candidate
// ordering by local degree, and the three early-termination rules.
inline EnumResult mbc_enum_star(const SignedGraph& g, int k, const CliqueSink& sink,
                                const EnumOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return opt.store == StoreKind::naive
               ? detail::run_enum<NaiveStore>(g, k, true, opt, sink)
               : detail::run_enum<PartitionedAdjacency>(g, k, true, opt, sink);
}

}  // namespace bclique
