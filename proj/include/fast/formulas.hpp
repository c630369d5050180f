#pragma once

#include "fast/rational.hpp"

namespace fast {

/// Expected number of backward edges created at insertion stage k of the
/// insertion-sort heuristic on a uniform random tournament:
///   k/2 - 3/2 + 2^(1-k),  with b(1) = b(2) = 0.
/// Satisfies b(k) = b(k-1)/2 + (k-2)/4 for k >= 3. k >= 1.
Rational stage_backward_mean(unsigned k);

/// Expected total backward edges of the insertion-sort heuristic on a
/// uniform random tournament on n vertices:
///   (n^2 - 5n + 8)/4 - 2^(1-n).
/// Equals the sum of stage_backward_mean(k) for k = 3..n. n >= 2.
Rational expected_total_backward(unsigned n);

/// Probability that the i-th element of one group is head-compared with
/// the j-th element of the other during a single fair-coin merge:
///   C(i+j-2, i-1) / 2^(i+j-2).
/// Symmetric in (i, j) and satisfies h(i,j) = h(i,j-1)/2 + h(i-1,j)/2.
/// i, j >= 1.
Rational head_compare_prob(unsigned i, unsigned j);

/// Probability that the cross-group edge between positions i and j ends up
/// backward after a single fair-coin merge:
///   1/4 * [ sum_{k=1..j-1} C(k+i-2, i-1)/2^(k+i-2)
///         + sum_{k=1..i-1} C(k+j-2, j-1)/2^(k+j-2) ].
/// i, j >= 1; empty sums are zero.
Rational merge_backward_prob(unsigned i, unsigned j);

/// Floating-point evaluators for large indices. Binomial mass is built by
/// the Pascal-style recurrence on the comparison probability itself, never
/// through factorials, so the values stay in [0, 1] without overflow.
double stage_backward_mean_f64(unsigned k);
double expected_total_backward_f64(unsigned n);
double head_compare_prob_f64(unsigned i, unsigned j);
double merge_backward_prob_f64(unsigned i, unsigned j);

}  // namespace fast
