#pragma once

#include <cstdint>
#include <vector>

namespace bclique {

// Membership of a vertex in the six sets of a branch-and-bound frame.
enum class Tag : std::uint8_t { none, c_left, c_right, p_left, p_right, q_left, q_right };

// Segment class of a tag: clique / candidate / excluded / none. The
// partitioned adjacency lists are laid out in this order.
enum class SegClass : std::uint8_t { clique = 0, candidate = 1, excluded = 2, none = 3 };

inline SegClass seg_class(Tag t) {
    switch (t) {
        case Tag::c_left:
        case Tag::c_right: return SegClass::clique;
        case Tag::p_left:
        case Tag::p_right: return SegClass::candidate;
        case Tag::q_left:
        case Tag::q_right: return SegClass::excluded;
        default: return SegClass::none;
    }
}

inline bool is_left(Tag t) { return t == Tag::c_left || t == Tag::p_left || t == Tag::q_left; }
inline bool is_right(Tag t) { return t == Tag::c_right || t == Tag::p_right || t == Tag::q_right; }
inline bool is_candidate(Tag t) { return t == Tag::p_left || t == Tag::p_right; }
inline bool is_excluded(Tag t) { return t == Tag::q_left || t == Tag::q_right; }

// One frame of the six-set recursion. c_left/c_right hold the growing clique,
// p_* the candidates, q_* the already-processed vertices. All six sets are
// pairwise disjoint; every p/q member on a side is positive-adjacent to that
// whole side of the clique and negative-adjacent to the other side.
// depth_parity is flipped on frame entry and controls which side's candidate
// loop runs first.
struct SearchState {
    std::vector<int> c_left, c_right;
    std::vector<int> p_left, p_right;
    std::vector<int> q_left, q_right;
    bool depth_parity = true;
};

}  // namespace bclique
