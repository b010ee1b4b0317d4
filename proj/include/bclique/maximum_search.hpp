#pragma once

#include <atomic>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "bclique/enumeration.hpp"
#include "bclique/reduction.hpp"

namespace bclique {

// One partition of the maximum search: lower bounds on min{|C_L|,|C_R|} and
// max{|C_L|,|C_R|}. kappa_lo never decreases and kappa_hi never increases
// over a schedule.
struct SearchRegion {
    int kappa_lo = 0;
    int kappa_hi = 0;
    int index = 0;
};

// Best clique found so far. epsilon() reports 2k while nothing qualifies yet;
// prune_bound() is what branch cuts compare against (2k-1 before the first
// find, so a minimum-size optimum is not cut away).
struct BestResult {
    std::optional<BalancedClique> clique;
    int k = 1;

    int epsilon() const { return clique ? clique->size() : 2 * k; }
    int prune_bound() const { return clique ? clique->size() : 2 * k - 1; }
    void offer(BalancedClique c) {
        if (!clique || c.size() > clique->size()) clique = std::move(c);
    }
};

inline std::optional<SearchRegion> first_region(int k, int sigma_positive) {
    if (sigma_positive + 1 < k) return std::nullopt;  // no side can reach k
    return SearchRegion{k, sigma_positive + 1, 0};
}

// Bounds for the region after `prev`, given the best size found so far.
// kappa_lo rises to epsilon - prev.kappa_hi (a larger clique must have at
// least that many vertices on its small side); kappa_hi falls by Dec, which
// halves after a slow region and steps by two otherwise. Returns nothing when
// the would-be region is already covered (kappa_hi not strictly below the
// previous one), which is also the provable end of the schedule.
inline std::optional<SearchRegion> next_region(const SearchRegion& prev, int epsilon, int k,
                                               double last_region_secs,
                                               double slow_threshold_secs) {
    int lo = std::max(epsilon - prev.kappa_hi, k);
    int dec = last_region_secs > slow_threshold_secs ? (prev.kappa_hi + 1) / 2
                                                     : prev.kappa_hi - 2;
    int hi = std::max(dec, lo);
    if (hi >= prev.kappa_hi) return std::nullopt;
    return SearchRegion{lo, hi, prev.index + 1};
}

// Greedy proper coloring of the positive subgraph induced by `members`,
// assigning smallest free colors in ascending vertex order. The color count
// bounds the largest positive clique inside the set.
inline int greedy_color_count(const std::vector<int>& members, const SignedGraph& g) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    std::unordered_map<int, int> color;
    color.reserve(sorted.size());
    int gamma = 0;
    std::vector<char> used;
    for (int v : sorted) {
        used.assign(static_cast<std::size_t>(gamma) + 2, 0);
        for (int u : g.pos_neighbors(v)) {
            auto it = color.find(u);
            if (it != color.end() && it->second < static_cast<int>(used.size())) used[static_cast<std::size_t>(it->second)] = 1;
        }
        int c = 1;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[v] = c;
        gamma = std::max(gamma, c);
    }
    return gamma;
}

// True when the coloring upper bounds show the frame cannot meet the region
// bounds or beat epsilon.
inline bool coloring_prune(const SearchState& s, const SignedGraph& g, int epsilon, int kappa_lo,
                           int kappa_hi) {
    int a = greedy_color_count(s.p_left, g) + static_cast<int>(s.c_left.size());
    int b = greedy_color_count(s.p_right, g) + static_cast<int>(s.c_right.size());
    return std::min(a, b) < kappa_lo || std::max(a, b) < kappa_hi || a + b <= epsilon;
}

enum class PivotLocation : std::uint8_t { in_candidates, in_excluded };
enum class DominationAction : std::uint8_t { PruneBranch, RestrictToPivot, NoAction };

// The four constant-time domination cases over the post-pivot branching sets.
// An excluded pivot dominating every surviving candidate kills the branch; a
// candidate pivot dominating the others confines branching to the pivot.
//
// Swapping a dominated survivor for the pivot keeps the total size but moves
// a vertex across sides when they differ, and the region side bounds can then
// reject the swapped clique even though the original met them. The filter
// therefore only fires when every survivor sits on the pivot's side.
inline DominationAction domination_filter(int pivot, PivotLocation loc, bool pivot_on_left,
                                          const std::vector<int>& new_p_left,
                                          const std::vector<int>& new_p_right,
                                          const SignedGraph& g) {
    const std::vector<int>& same = pivot_on_left ? new_p_left : new_p_right;
    const std::vector<int>& cross = pivot_on_left ? new_p_right : new_p_left;
    if (!cross.empty()) return DominationAction::NoAction;
    std::vector<int> rest;
    for (int u : same)
        if (u != pivot) rest.push_back(u);
    bool disconnected_pair = rest.size() == 2 && !g.has_edge(rest[0], rest[1]);
    if (loc == PivotLocation::in_excluded) {
        if (rest.size() == 1) return DominationAction::PruneBranch;       // case 1
        if (disconnected_pair) return DominationAction::PruneBranch;      // case 2
    } else {
        if (rest.size() + 1 != same.size()) return DominationAction::NoAction;
        if (rest.size() == 1) return DominationAction::RestrictToPivot;   // case 3
        if (disconnected_pair) return DominationAction::RestrictToPivot;  // case 4
    }
    return DominationAction::NoAction;
}

struct RegionTraceRow {
    int index = 0;
    int kappa_lo = 0;
    int kappa_hi = 0;
    std::int64_t pos_edges = 0;
    std::int64_t neg_edges = 0;
    int epsilon = 0;  // best size known once the region finished
};

struct SearchOptions {
    double slow_threshold_secs = 20.0;
    bool domination = true;        // star only
    bool coloring = true;          // star only
    bool candidate_reduction = true;  // star only: per-frame candidate peeling
    bool edge_reduction = true;    // star only: per-region edge peeling
    StoreKind store = StoreKind::naive;
    int threads = 1;
    double time_budget_secs = 0.0;
};

struct SearchResult {
    std::optional<BalancedClique> best;
    std::uint64_t frames = 0;
    bool timed_out = false;
    std::vector<RegionTraceRow> regions;
};

namespace detail {

struct SearchMode {
    bool region_cuts = false;
    bool star = false;
};

// Best-so-far shared across workers. The atomic size is what pruning reads;
// stale (smaller) values only weaken a cut, never break soundness.
struct SharedBest {
    explicit SharedBest(int k_) : k(k_) {}
    int k;
    std::mutex mu;
    std::optional<BalancedClique> best;
    std::atomic<int> best_size{0};

    int prune_bound() const {
        int s = best_size.load(std::memory_order_relaxed);
        return s > 0 ? s : 2 * k - 1;
    }
    int epsilon() const {
        int s = best_size.load(std::memory_order_relaxed);
        return s > 0 ? s : 2 * k;
    }
    void offer(BalancedClique c) {
        std::lock_guard<std::mutex> lock(mu);
        if (!best || c.size() > best->size()) {
            best = std::move(c);
            best_size.store(best->size(), std::memory_order_relaxed);
        }
    }
};

template <class Store>
class SearchEngine {
  public:
    SearchEngine(const SignedGraph& g, int k, SearchMode mode, const SearchOptions& opt,
                 SharedBest& shared, int kappa_lo, int kappa_hi,
                 std::optional<Clock::time_point> deadline)
        : g_(g), store_(g), k_(k), mode_(mode), opt_(opt), shared_(shared),
          kappa_lo_(kappa_lo), kappa_hi_(kappa_hi), deadline_(deadline) {}

    std::pair<std::uint64_t, bool> run(std::span<const int> roots, const std::vector<int>& position) {
        for (int v : roots) {
            SearchState root = seed_root(g_, v, position);
            store_.seed(root);
            if (!frame(root)) break;
        }
        return {frames_, timed_out_};
    }

  private:
    bool expired() {
        if (!deadline_) return false;
        if ((frames_ & 1023) != 0) return false;
        return Clock::now() >= *deadline_;
    }

    bool frame(SearchState& f) {
        ++frames_;
        if (expired()) {
            timed_out_ = true;
            return false;
        }

        if (mode_.star && opt_.candidate_reduction) reduce_candidates_fixpoint(f);

        int lbar = static_cast<int>(f.c_left.size() + f.p_left.size());
        int rbar = static_cast<int>(f.c_right.size() + f.p_right.size());
        if (lbar + rbar <= shared_.prune_bound()) return true;
        if (mode_.region_cuts &&
            (std::min(lbar, rbar) < kappa_lo_ || std::max(lbar, rbar) < kappa_hi_))
            return true;

        if (f.p_left.empty() && f.p_right.empty() && f.q_left.empty() && f.q_right.empty()) {
            if (static_cast<int>(f.c_left.size()) >= k_ && static_cast<int>(f.c_right.size()) >= k_) {
                BalancedClique found = make_canonical(f.c_left, f.c_right);
                // every recorded clique must satisfy its region's bounds, or
                // the schedule arithmetic is broken
                if (mode_.region_cuts &&
                    (found.min_side() < kappa_lo_ || found.max_side() < kappa_hi_))
                    throw std::logic_error("recorded clique violates its search region bounds");
                shared_.offer(std::move(found));
            }
            return true;
        }
        if (f.p_left.empty() && f.p_right.empty()) return true;

        if (mode_.star && opt_.coloring && coloring_prune_fast(f)) return true;

        std::vector<int> branch_l, branch_r;
        if (mode_.star) {
            int p = pivot_by_local_degree(store_, f);
            pivot_branch_sets(store_, g_, f, p, branch_l, branch_r);
            if (opt_.domination) {
                PivotLocation loc = is_candidate(store_.tag(p)) ? PivotLocation::in_candidates
                                                                : PivotLocation::in_excluded;
                switch (domination_filter(p, loc, is_left(store_.tag(p)), branch_l, branch_r, g_)) {
                    case DominationAction::PruneBranch: return true;
                    case DominationAction::RestrictToPivot:
                        branch_l.clear();
                        branch_r.clear();
                        (is_left(store_.tag(p)) ? branch_l : branch_r).push_back(p);
                        break;
                    case DominationAction::NoAction: break;
                }
            }
            order_by_local_degree(store_, branch_l);
            order_by_local_degree(store_, branch_r);
        } else {
            branch_l = f.p_left;
            branch_r = f.p_right;
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

    // Store-backed twin of vertex_reduction_plus: same fixpoint, tags and
    // frame vectors updated together.
    void reduce_candidates_fixpoint(SearchState& f) {
        const int cl = static_cast<int>(f.c_left.size());
        const int cr = static_cast<int>(f.c_right.size());
        const int bound = shared_.prune_bound();
        std::unordered_map<int, int> dp, dn;
        std::unordered_map<int, bool> left_of;
        std::unordered_set<int> gone;
        for (int v : f.p_left) left_of[v] = true;
        for (int v : f.p_right) left_of[v] = false;
        for (const auto& entry : left_of) {
            int v = entry.first;
            dp[v] = store_.count_pos_with_tag(v, Tag::p_left) + store_.count_pos_with_tag(v, Tag::p_right);
            dn[v] = store_.count_neg_with_tag(v, Tag::p_left) + store_.count_neg_with_tag(v, Tag::p_right);
        }
        auto violates = [&](int v) {
            bool l = left_of[v];
            int a = dp[v] + 1 + (l ? cl : cr);
            int b = dn[v] + (l ? cr : cl);
            if (std::min(a, b) < kappa_lo_ || std::max(a, b) < kappa_hi_) return true;
            return dp[v] + dn[v] + 1 + cl + cr <= bound;
        };
        std::vector<int> work;
        for (int v : f.p_left)
            if (violates(v)) { gone.insert(v); work.push_back(v); }
        for (int v : f.p_right)
            if (violates(v)) { gone.insert(v); work.push_back(v); }
        std::vector<int> buf;
        for (std::size_t i = 0; i < work.size(); ++i) {
            int v = work[i];
            for (Tag t : {Tag::p_left, Tag::p_right}) {
                store_.collect_pos_with_tag(v, t, buf);
                for (int u : buf)
                    if (left_of.count(u) && !gone.count(u)) {
                        --dp[u];
                        if (violates(u)) { gone.insert(u); work.push_back(u); }
                    }
                store_.collect_neg_with_tag(v, t, buf);
                for (int u : buf)
                    if (left_of.count(u) && !gone.count(u)) {
                        --dn[u];
                        if (violates(u)) { gone.insert(u); work.push_back(u); }
                    }
            }
        }
        if (gone.empty()) return;
        std::vector<int> removed(gone.begin(), gone.end());
        std::sort(removed.begin(), removed.end());
        for (int v : removed) store_.move(v, left_of[v] ? Tag::p_left : Tag::p_right, Tag::none);
        std::erase_if(f.p_left, [&](int v) { return gone.count(v) != 0; });
        std::erase_if(f.p_right, [&](int v) { return gone.count(v) != 0; });
    }

    int greedy_color_fast(const std::vector<int>& members, Tag side_tag) {
        std::unordered_map<int, int> color;
        color.reserve(members.size());
        int gamma = 0;
        std::vector<char> used;
        std::vector<int> buf;
        for (int v : members) {  // frame candidate sets are kept ascending
            used.assign(static_cast<std::size_t>(gamma) + 2, 0);
            store_.collect_pos_with_tag(v, side_tag, buf);
            for (int u : buf) {
                auto it = color.find(u);
                if (it != color.end()) used[static_cast<std::size_t>(it->second)] = 1;
            }
            int c = 1;
            while (used[static_cast<std::size_t>(c)]) ++c;
            color[v] = c;
            gamma = std::max(gamma, c);
        }
        return gamma;
    }

    bool coloring_prune_fast(const SearchState& f) {
        int a = greedy_color_fast(f.p_left, Tag::p_left) + static_cast<int>(f.c_left.size());
        int b = greedy_color_fast(f.p_right, Tag::p_right) + static_cast<int>(f.c_right.size());
        return std::min(a, b) < kappa_lo_ || std::max(a, b) < kappa_hi_ ||
               a + b <= shared_.prune_bound();
    }

    const SignedGraph& g_;
    Store store_;
    int k_;
    SearchMode mode_;
    const SearchOptions& opt_;
    SharedBest& shared_;
    int kappa_lo_, kappa_hi_;
    std::optional<Clock::time_point> deadline_;
    std::uint64_t frames_ = 0;
    bool timed_out_ = false;
};

template <class Store>
std::pair<std::uint64_t, bool> run_search_pass(const SignedGraph& g, int k, SearchMode mode,
                                               const SearchOptions& opt, SharedBest& shared,
                                               int kappa_lo, int kappa_hi,
                                               std::optional<Clock::time_point> deadline) {
    std::vector<int> position;
    std::vector<int> order = root_order_of(g, RootOrder::degeneracy, position);
    int threads = std::max(1, opt.threads);
    if (threads == 1 || g.vertex_count() == 0) {
        SearchEngine<Store> engine(g, k, mode, opt, shared, kappa_lo, kappa_hi, deadline);
        return engine.run(order, position);
    }
    threads = std::min<int>(threads, std::max(1, g.vertex_count()));
    std::vector<std::pair<std::uint64_t, bool>> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    std::size_t chunk = (order.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            std::size_t lo = static_cast<std::size_t>(w) * chunk;
            std::size_t hi = std::min(order.size(), lo + chunk);
            if (lo >= hi) return;
            SearchEngine<Store> engine(g, k, mode, opt, shared, kappa_lo, kappa_hi, deadline);
            partial[static_cast<std::size_t>(w)] =
                engine.run(std::span<const int>(order.data() + lo, hi - lo), position);
        });
    }
    for (auto& t : pool) t.join();
    std::pair<std::uint64_t, bool> total{0, false};
    for (auto& p : partial) {
        total.first += p.first;
        total.second = total.second || p.second;
    }
    return total;
}

template <class Store>
SearchResult run_mbcs(const SignedGraph& g, int k, bool regions, bool star,
                      const SearchOptions& opt) {
    SearchResult res;
    SharedBest shared(k);
    std::optional<Clock::time_point> deadline;
    if (opt.time_budget_secs > 0)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(opt.time_budget_secs));

    if (!regions) {
        auto [frames, timed_out] =
            run_search_pass<Store>(g, k, SearchMode{false, star}, opt, shared, 0, 0, deadline);
        res.frames = frames;
        res.timed_out = timed_out;
        res.best = std::move(shared.best);
        return res;
    }

    int sigma = degeneracy(g, SignScope::positive_only).sigma;
    std::optional<SearchRegion> region = first_region(k, sigma);
    while (region) {
        auto t0 = Clock::now();
        SignedGraph reduced;
        const SignedGraph* region_graph = &g;
        if (star && opt.edge_reduction) {
            reduced = edge_reduction_plus(g, region->kappa_lo, region->kappa_hi);
            region_graph = &reduced;
        }
        auto [frames, timed_out] =
            run_search_pass<Store>(*region_graph, k, SearchMode{true, star}, opt, shared,
                                   region->kappa_lo, region->kappa_hi, deadline);
        res.frames += frames;
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        res.regions.push_back({region->index, region->kappa_lo, region->kappa_hi,
                               region_graph->pos_edge_count(), region_graph->neg_edge_count(),
                               shared.epsilon()});
        if (timed_out) {
            res.timed_out = true;
            break;
        }
        region = next_region(*region, shared.epsilon(), k, secs, opt.slow_threshold_secs);
    }
    res.best = std::move(shared.best);
    return res;
}

}  // namespace detail

// Exhaustive six-set search with only the best-size cut; reference point for
// the region-partitioned variants.
inline SearchResult mbcs_baseline(const SignedGraph& g, int k, const SearchOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return opt.store == StoreKind::naive ? detail::run_mbcs<NaiveStore>(g, k, false, false, opt)
                                         : detail::run_mbcs<PartitionedAdjacency>(g, k, false, false, opt);
}

// Search-space partitioned variant: regions (kappa_lo, kappa_hi) walk from
// (k, sigma+1) downward, each searched with the added per-branch side bounds,
// carrying the best result across regions.
inline SearchResult mbcs_ssp(const SignedGraph& g, int k, const SearchOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return opt.store == StoreKind::naive ? detail::run_mbcs<NaiveStore>(g, k, true, false, opt)
                                         : detail::run_mbcs<PartitionedAdjacency>(g, k, true, false, opt);
}

// Partitioned search plus the per-region edge peeling and per-frame candidate
// peeling, coloring bound, pivoting, and domination cases.
inline SearchResult mbcs_ssp_star(const SignedGraph& g, int k, const SearchOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return opt.store == StoreKind::naive ? detail::run_mbcs<NaiveStore>(g, k, true, true, opt)
                                         : detail::run_mbcs<PartitionedAdjacency>(g, k, true, true, opt);
}

}  // namespace bclique
