#pragma once

#include <cstdint>

#include "fast/rng.hpp"
#include "fast/tournament.hpp"

namespace fast {

/// Pivot choice for the quick-sort style heuristic.
enum class PivotRule {
    UniformRandom,  ///< pivot drawn uniformly from the current group
    MinImbalance,   ///< pivot minimizing |out-degree - in-degree| within the group
};

/// Uniform return shape of the five heuristics. `work` is an
/// algorithm-specific counter: adjacent swaps for the insertion and bubble
/// variants, head comparisons for merge, degree scans for selection, and
/// element-vs-pivot comparisons for quick.
struct HeuristicResult {
    Ordering ordering;
    Cost cost = 0;
    std::uint64_t work = 0;
};

/// Insertion-sort heuristic: random starting permutation, then each vertex
/// bubbles toward the front while its edge points at its predecessor. The
/// output is always an adjacent-swap local minimum.
HeuristicResult insertion_sort(const Tournament& t, std::uint64_t seed);

/// Deterministic core of insertion_sort, starting from an explicit list.
/// Also used by the exhaustive expected-cost oracle.
HeuristicResult insertion_sort_from(const Tournament& t, Ordering start);

/// Merge-sort heuristic: the vertex set is split into random halves of size
/// floor(k/2) and ceil(k/2), sorted recursively, and merged by head-to-head
/// edge comparisons; once a side is exhausted the remainder is appended in
/// its order.
HeuristicResult merge_sort(const Tournament& t, std::uint64_t seed);

/// One merge step over two already-ordered groups, exposed for direct
/// testing. Adds the number of head comparisons to *comparisons if given.
Ordering merge_ordered(const Tournament& t, const Ordering& first, const Ordering& second,
                       std::uint64_t* comparisons = nullptr);

/// Selection-sort heuristic: repeatedly emit a vertex of maximum out-degree
/// in the remaining induced subtournament, ties broken uniformly at random.
HeuristicResult selection_sort(const Tournament& t, std::uint64_t seed);

/// Bubble-sort heuristic: random starting permutation, then full
/// adjacent-swap passes until a pass performs no swap. Every swap removes
/// exactly one backward edge, so total swaps never exceed n(n-1)/2.
HeuristicResult bubble_sort(const Tournament& t, std::uint64_t seed);

/// Deterministic core of bubble_sort, starting from an explicit list.
HeuristicResult bubble_sort_from(const Tournament& t, Ordering start);

/// Quick-sort heuristic: pick a pivot, place everything that beats it
/// before it and everything it beats after it, recurse on both sides.
HeuristicResult quick_sort(const Tournament& t, std::uint64_t seed,
                           PivotRule rule = PivotRule::UniformRandom);

/// One partition step of quick_sort, exposed for direct testing: members of
/// `group` that beat the pivot land in `before`, the rest in `after`, both
/// in their original relative order. The pivot itself is skipped.
void quick_partition(const Tournament& t, const std::vector<VertexId>& group, VertexId pivot,
                     std::vector<VertexId>& before, std::vector<VertexId>& after);

/// Pivot selection for PivotRule::MinImbalance: a vertex of the group whose
/// |out - in| within the group is minimal, ties broken uniformly at random.
VertexId choose_pivot_min_imbalance(const Tournament& t, const std::vector<VertexId>& group,
                                    Rng& rng);

}  // namespace fast
