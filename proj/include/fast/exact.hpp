#pragma once

#include <cstddef>

#include "fast/tournament.hpp"

namespace fast {

/// A provably minimum-cost ordering. Among all optimal orderings both
/// solvers return the lexicographically smallest, so their outputs can be
/// compared directly in tests.
struct ExactResult {
    Ordering ordering;
    Cost cost = 0;
};

inline constexpr std::size_t kBruteForceMaxVertices = 10;
inline constexpr std::size_t kSubsetDpMaxVertices = 24;

/// Enumerates all n! orderings. n <= 10.
ExactResult solve_bruteforce(const Tournament& t);

/// Subset dynamic program: the best cost of laying out a subset S as a
/// prefix is min over the vertex v placed first of (edges into v from the
/// rest of S) + best(S minus v). O(2^n * n) time, O(2^n) memory. n <= 24.
ExactResult solve_dp(const Tournament& t);

}  // namespace fast
