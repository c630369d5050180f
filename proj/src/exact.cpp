#include "fast/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace fast {

ExactResult solve_bruteforce(const Tournament& t) {
    const std::size_t n = t.vertex_count();
    if (n > kBruteForceMaxVertices)
        throw std::invalid_argument("brute force limited to 10 vertices");
    Ordering perm = identity_order(n);
    Ordering best_order = perm;
    Cost best = backward_count(t, perm);
    // Permutations arrive in lexicographic order and only strict improvements
    // are kept, so the winner is the lexicographically smallest minimizer.
    while (std::next_permutation(perm.begin(), perm.end())) {
        const Cost c = backward_count(t, perm);
        if (c < best) {
            best = c;
            best_order = perm;
        }
    }
    return {std::move(best_order), best};
}

ExactResult solve_dp(const Tournament& t) {
    const std::size_t n = t.vertex_count();
    if (n > kSubsetDpMaxVertices)
        throw std::invalid_argument("subset DP limited to 24 vertices");

    // in_mask[v]: bitmask of vertices with an edge into v. Placing v first
    // within a block makes exactly those edges (restricted to the block)
    // backward.
    std::vector<std::uint32_t> in_mask(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u = 0; u < n; ++u)
            if (u != v && t.edge(u, v)) in_mask[v] |= 1u << u;

    const std::size_t num_subsets = std::size_t{1} << n;
    std::vector<std::uint16_t> best(num_subsets, 0);
    for (std::size_t s = 1; s < num_subsets; ++s) {
        std::uint16_t value = 0xFFFF;
        std::uint32_t rest = static_cast<std::uint32_t>(s);
        while (rest) {
            const unsigned v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint32_t others = static_cast<std::uint32_t>(s) & ~(1u << v);
            const std::uint16_t c = static_cast<std::uint16_t>(
                best[others] + std::popcount(in_mask[v] & others));
            value = std::min(value, c);
        }
        best[s] = value;
    }

    // Front-first greedy reconstruction; taking the smallest vertex that
    // stays optimal yields the lexicographically smallest optimal ordering.
    Ordering order;
    order.reserve(n);
    std::uint32_t s = static_cast<std::uint32_t>(num_subsets - 1);
    while (s) {
        for (VertexId v = 0; v < n; ++v) {
            if (!((s >> v) & 1u)) continue;
            const std::uint32_t others = s & ~(1u << v);
            if (best[s] == best[others] + std::popcount(in_mask[v] & others)) {
                order.push_back(v);
                s = others;
                break;
            }
        }
    }
    const Cost cost = best[num_subsets - 1];
    return {std::move(order), cost};
}

}  // namespace fast
