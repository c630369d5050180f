#include "fast/heuristics.hpp"

#include <limits>
#include <utility>

#include "fast/rng.hpp"

namespace fast {

HeuristicResult insertion_sort_from(const Tournament& t, Ordering start) {
    validate_ordering(t, start);
    Ordering& v = start;
    std::uint64_t swaps = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::size_t j = i;
        // Bubble up while the adjacent pair is backward; j > 0 stops at the head.
        while (j > 0 && t.edge(v[j], v[j - 1])) {
            std::swap(v[j], v[j - 1]);
            --j;
            ++swaps;
        }
    }
    const Cost cost = backward_count(t, v);
    return {std::move(start), cost, swaps};
}

HeuristicResult insertion_sort(const Tournament& t, std::uint64_t seed) {
    Ordering v = identity_order(t.vertex_count());
    Rng rng(seed);
    shuffle(v, rng);
    return insertion_sort_from(t, std::move(v));
}

Ordering merge_ordered(const Tournament& t, const Ordering& first, const Ordering& second,
                       std::uint64_t* comparisons) {
    Ordering out;
    out.reserve(first.size() + second.size());
    std::size_t kf = 0, ks = 0;
    while (kf < first.size() && ks < second.size()) {
        if (comparisons) ++*comparisons;
        if (t.edge(first[kf], second[ks]))
            out.push_back(first[kf++]);
        else
            out.push_back(second[ks++]);
    }
    out.insert(out.end(), first.begin() + kf, first.end());
    out.insert(out.end(), second.begin() + ks, second.end());
    return out;
}

namespace {

Ordering merge_sort_rec(const Tournament& t, Ordering group, Rng& rng, std::uint64_t& comparisons) {
    if (group.size() <= 1) return group;
    shuffle(group, rng);  // the first floor(k/2) of a shuffled list is a random half
    const std::size_t half = group.size() / 2;
    Ordering first(group.begin(), group.begin() + half);
    Ordering second(group.begin() + half, group.end());
    first = merge_sort_rec(t, std::move(first), rng, comparisons);
    second = merge_sort_rec(t, std::move(second), rng, comparisons);
    return merge_ordered(t, first, second, &comparisons);
}

}  // namespace

HeuristicResult merge_sort(const Tournament& t, std::uint64_t seed) {
    Rng rng(seed);
    std::uint64_t comparisons = 0;
    Ordering o = merge_sort_rec(t, identity_order(t.vertex_count()), rng, comparisons);
    const Cost cost = backward_count(t, o);
    return {std::move(o), cost, comparisons};
}

HeuristicResult selection_sort(const Tournament& t, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<VertexId> remaining = identity_order(t.vertex_count());
    Ordering out;
    out.reserve(remaining.size());
    std::uint64_t scans = 0;
    std::vector<VertexId> best;
    while (!remaining.empty()) {
        best.clear();
        std::size_t best_deg = 0;
        for (VertexId v : remaining) {
            const std::size_t deg = t.out_degree_within(v, remaining);
            ++scans;
            if (best.empty() || deg > best_deg) {
                best_deg = deg;
                best.assign(1, v);
            } else if (deg == best_deg) {
                best.push_back(v);
            }
        }
        const VertexId pick =
            best.size() == 1 ? best[0] : best[rng.next_below(best.size())];
        out.push_back(pick);
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (remaining[i] == pick) {
                remaining.erase(remaining.begin() + i);
                break;
            }
    }
    const Cost cost = backward_count(t, out);
    return {std::move(out), cost, scans};
}

HeuristicResult bubble_sort_from(const Tournament& t, Ordering start) {
    validate_ordering(t, start);
    Ordering& v = start;
    std::uint64_t swaps = 0;
    bool swapped = v.size() > 1;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (t.edge(v[i + 1], v[i])) {
                std::swap(v[i + 1], v[i]);
                ++swaps;
                swapped = true;
            }
        }
    }
    const Cost cost = backward_count(t, v);
    return {std::move(start), cost, swaps};
}

HeuristicResult bubble_sort(const Tournament& t, std::uint64_t seed) {
    Ordering v = identity_order(t.vertex_count());
    Rng rng(seed);
    shuffle(v, rng);
    return bubble_sort_from(t, std::move(v));
}

VertexId choose_pivot_min_imbalance(const Tournament& t, const std::vector<VertexId>& group,
                                    Rng& rng) {
    std::vector<VertexId> best;
    std::size_t best_imbalance = std::numeric_limits<std::size_t>::max();
    for (VertexId v : group) {
        const std::size_t out = t.out_degree_within(v, group);
        const std::size_t in = group.size() - 1 - out;
        const std::size_t imbalance = out > in ? out - in : in - out;
        if (imbalance < best_imbalance) {
            best_imbalance = imbalance;
            best.assign(1, v);
        } else if (imbalance == best_imbalance) {
            best.push_back(v);
        }
    }
    return best.size() == 1 ? best[0] : best[rng.next_below(best.size())];
}

void quick_partition(const Tournament& t, const std::vector<VertexId>& group, VertexId pivot,
                     std::vector<VertexId>& before, std::vector<VertexId>& after) {
    for (VertexId v : group) {
        if (v == pivot) continue;
        if (t.edge(v, pivot))
            before.push_back(v);
        else
            after.push_back(v);
    }
}

namespace {

void quick_sort_rec(const Tournament& t, const std::vector<VertexId>& group, PivotRule rule,
                    Rng& rng, Ordering& out, std::uint64_t& comparisons) {
    if (group.size() <= 1) {
        out.insert(out.end(), group.begin(), group.end());
        return;
    }
    const VertexId pivot = rule == PivotRule::UniformRandom
                               ? group[rng.next_below(group.size())]
                               : choose_pivot_min_imbalance(t, group, rng);
    std::vector<VertexId> before, after;
    quick_partition(t, group, pivot, before, after);
    comparisons += group.size() - 1;  // one edge lookup per non-pivot member
    quick_sort_rec(t, before, rule, rng, out, comparisons);
    out.push_back(pivot);
    quick_sort_rec(t, after, rule, rng, out, comparisons);
}

}  // namespace

HeuristicResult quick_sort(const Tournament& t, std::uint64_t seed, PivotRule rule) {
    Rng rng(seed);
    Ordering out;
    out.reserve(t.vertex_count());
    std::uint64_t comparisons = 0;
    quick_sort_rec(t, identity_order(t.vertex_count()), rule, rng, out, comparisons);
    const Cost cost = backward_count(t, out);
    return {std::move(out), cost, comparisons};
}

}  // namespace fast
