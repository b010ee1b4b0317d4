#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "bclique/generator.hpp"
#include "bclique/naive_store.hpp"
#include "bclique/partition_store.hpp"
#include "support.hpp"

using namespace bclique;
using testsupport::two_triangles;

namespace {

// recompute every segment from the tags and compare as multisets
void check_consistent(const PartitionedAdjacency& st, const SignedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        for (EdgeSign s : {EdgeSign::positive, EdgeSign::negative}) {
            std::map<SegClass, std::multiset<int>> want;
            for (int u : g.neighbors(v, s)) want[seg_class(st.tag(u))].insert(u);
            for (SegClass c :
                 {SegClass::clique, SegClass::candidate, SegClass::excluded, SegClass::none}) {
                auto seg = st.segment(v, s, c);
                std::multiset<int> got(seg.begin(), seg.end());
                REQUIRE(got == want[c]);
            }
        }
}

std::vector<int> snapshot(const PartitionedAdjacency& st, const SignedGraph& g) {
    std::vector<int> flat;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (EdgeSign s : {EdgeSign::positive, EdgeSign::negative})
            for (SegClass c :
                 {SegClass::clique, SegClass::candidate, SegClass::excluded, SegClass::none})
                for (int u : st.segment(v, s, c)) flat.push_back(u);
    for (int v = 0; v < g.vertex_count(); ++v) {
        SegmentCounts sc = st.segment_counts(v);
        flat.insert(flat.end(), {sc.c_pos, sc.p_pos, sc.q_pos, sc.c_neg, sc.p_neg, sc.q_neg});
        flat.push_back(static_cast<int>(st.tag(v)));
    }
    return flat;
}

}  // namespace

TEST_CASE("build reproduces the worked six-vertex configuration") {
    // vertex 0: positive neighbors {1,5}, negative {3,4}; state has 1 in the
    // clique, 2 as a left candidate, 3 and 4 as right candidates, 0 excluded
    std::vector<SignedEdge> edges{
        {0, 1, EdgeSign::positive}, {0, 5, EdgeSign::positive}, {0, 3, EdgeSign::negative},
        {0, 4, EdgeSign::negative}, {1, 2, EdgeSign::positive}, {1, 3, EdgeSign::negative},
        {1, 4, EdgeSign::negative},
    };
    SignedGraph g = SignedGraph::from_edges(6, edges);
    SearchState seed;
    seed.c_left = {1};
    seed.p_left = {2};
    seed.p_right = {3, 4};
    seed.q_left = {0};
    PartitionedAdjacency st = PartitionedAdjacency::build(g, seed);
    SegmentCounts c = st.segment_counts(0);
    CHECK(c.c_pos == 1);
    CHECK(c.p_pos == 0);
    CHECK(c.q_pos == 0);
    CHECK(c.c_neg == 0);
    CHECK(c.p_neg == 2);
    CHECK(c.q_neg == 0);
    check_consistent(st, g);
}

TEST_CASE("all-none seed zeroes every counter") {
    SignedGraph g6 = two_triangles();
    PartitionedAdjacency st(g6);
    for (int v = 0; v < 6; ++v) CHECK(st.segment_counts(v) == SegmentCounts{});
}

TEST_CASE("seed with every neighbor in a candidate set") {
    SignedGraph g6 = two_triangles();
    SearchState seed;
    seed.p_left = {0, 1, 2};
    seed.p_right = {3, 4, 5};
    PartitionedAdjacency st = PartitionedAdjacency::build(g6, seed);
    for (int v = 0; v < 6; ++v) {
        SegmentCounts c = st.segment_counts(v);
        CHECK(c.p_pos == g6.pos_degree(v));
        CHECK(c.p_neg == g6.neg_degree(v));
    }
}

TEST_CASE("double-triangle root state counters") {
    SignedGraph g6 = two_triangles();
    SearchState seed;
    seed.c_left = {0};
    seed.p_left = {1, 2};
    seed.p_right = {3, 4, 5};
    PartitionedAdjacency st = PartitionedAdjacency::build(g6, seed);
    SegmentCounts c = st.segment_counts(1);
    CHECK(c.p_pos == 1);
    CHECK(c.p_neg == 3);
    CHECK(c.c_pos == 1);
    CHECK(st.local_degree_of(1) == 4);
    CHECK(st.local_degree_of(3) == 4);
}

TEST_CASE("candidate-to-clique move updates neighbors") {
    SECTION("single positive edge") {
        std::vector<SignedEdge> edges{{0, 1, EdgeSign::positive}};
        SignedGraph g = SignedGraph::from_edges(2, edges);
        SearchState seed;
        seed.p_left = {0, 1};
        PartitionedAdjacency st = PartitionedAdjacency::build(g, seed);
        CHECK(st.segment_counts(0).p_pos == 1);
        st.move_candidate_to_clique(1, /*left_side=*/true);
        SegmentCounts c = st.segment_counts(0);
        CHECK(c.c_pos == 1);
        CHECK(c.p_pos == 0);
        check_consistent(st, g);
    }
    SECTION("move and inverse restore the counters") {
        SignedGraph g6 = two_triangles();
        SearchState seed;
        seed.c_left = {0};
        seed.p_left = {1, 2};
        seed.p_right = {3, 4, 5};
        PartitionedAdjacency st = PartitionedAdjacency::build(g6, seed);
        std::vector<int> before = snapshot(st, g6);
        auto mark = st.frame_mark();
        st.move_candidate_to_clique(2, true);
        CHECK(st.segment_counts(1).c_pos == 2);
        CHECK(st.segment_counts(1).p_pos == 0);
        st.move_clique_to_excluded(2, true);
        CHECK(st.segment_counts(1).q_pos == 1);
        check_consistent(st, g6);
        st.restore_frame(mark);
        CHECK(snapshot(st, g6) == before);
    }
    SECTION("wrong-source moves are rejected") {
        SignedGraph g6 = two_triangles();
        SearchState seed;
        seed.p_left = {1};
        PartitionedAdjacency st = PartitionedAdjacency::build(g6, seed);
        CHECK_THROWS_AS(st.move_candidate_to_clique(1, /*left_side=*/false), std::logic_error);
        CHECK_THROWS_AS(st.move_clique_to_excluded(1, true), std::logic_error);
        CHECK_THROWS_AS(st.restore_frame(99), std::logic_error);
    }
}

TEST_CASE("restore after a long random move sequence equals a fresh build") {
    for (int trial = 0; trial < 30; ++trial) {
        SignedGraph g = trial % 2 ? testsupport::dense_graph(trial) : two_triangles();
        const int n = g.vertex_count();
        Rng rng(500 + static_cast<std::uint64_t>(trial));
        SearchState seed;
        for (int v = 0; v < n; ++v) {
            switch (rng.below(4)) {
                case 0: seed.p_left.push_back(v); break;
                case 1: seed.p_right.push_back(v); break;
                case 2: seed.q_left.push_back(v); break;
                default: break;  // none
            }
        }
        PartitionedAdjacency st = PartitionedAdjacency::build(g, seed);
        std::vector<int> before = snapshot(st, g);
        auto mark = st.frame_mark();

        // legal transitions only: candidates march to clique/excluded/none and
        // clique members to excluded, as the engines do
        for (int step = 0; step < 100; ++step) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            Tag t = st.tag(v);
            if (t == Tag::p_left || t == Tag::p_right) {
                bool left = t == Tag::p_left;
                switch (rng.below(3)) {
                    case 0: st.move(v, t, left ? Tag::c_left : Tag::c_right); break;
                    case 1: st.move(v, t, left ? Tag::q_left : Tag::q_right); break;
                    default: st.move(v, t, Tag::none); break;
                }
            } else if (t == Tag::c_left || t == Tag::c_right) {
                if (rng.below(2) == 0)
                    st.move(v, t, t == Tag::c_left ? Tag::q_left : Tag::q_right);
            } else if (t == Tag::q_left || t == Tag::q_right) {
                if (rng.below(2) == 0)
                    st.move(v, t, t == Tag::q_left ? Tag::p_left : Tag::p_right);
            }
            if (step % 10 == 0) check_consistent(st, g);
        }
        check_consistent(st, g);
        st.restore_frame(mark);
        REQUIRE(snapshot(st, g) == before);
        // and the restored state equals building the seed from scratch
        PartitionedAdjacency fresh = PartitionedAdjacency::build(g, seed);
        REQUIRE(snapshot(fresh, g) == before);
    }
}

TEST_CASE("store queries agree with the naive backend") {
    for (int trial = 0; trial < 25; ++trial) {
        SignedGraph g = testsupport::dense_graph(trial);
        const int n = g.vertex_count();
        Rng rng(900 + static_cast<std::uint64_t>(trial));
        SearchState seed;
        for (int v = 0; v < n; ++v) {
            switch (rng.below(7)) {
                case 0: seed.c_left.push_back(v); break;
                case 1: seed.c_right.push_back(v); break;
                case 2: seed.p_left.push_back(v); break;
                case 3: seed.p_right.push_back(v); break;
                case 4: seed.q_left.push_back(v); break;
                case 5: seed.q_right.push_back(v); break;
                default: break;
            }
        }
        PartitionedAdjacency st = PartitionedAdjacency::build(g, seed);
        NaiveStore naive(g);
        naive.seed(seed);
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) {
            for (Tag t : {Tag::c_left, Tag::c_right, Tag::p_left, Tag::p_right, Tag::q_left,
                          Tag::q_right}) {
                CHECK(st.count_pos_with_tag(v, t) == naive.count_pos_with_tag(v, t));
                CHECK(st.count_neg_with_tag(v, t) == naive.count_neg_with_tag(v, t));
                st.collect_pos_with_tag(v, t, a);
                naive.collect_pos_with_tag(v, t, b);
                CHECK(a == b);
                st.collect_neg_with_tag(v, t, a);
                naive.collect_neg_with_tag(v, t, b);
                CHECK(a == b);
            }
            if (st.tag(v) != Tag::none && seg_class(st.tag(v)) != SegClass::clique)
                CHECK(st.local_degree_of(v) == naive.local_degree_of(v));
        }
    }
}
