#include "fast/formulas.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fast {

Rational stage_backward_mean(unsigned k) {
    if (k == 0) throw std::invalid_argument("stage index must be at least 1");
    // The closed form already evaluates to 0 at k = 1 and k = 2.
    return rational(k, 2) - rational(3, 2) + pow2(1 - static_cast<long>(k));
}

Rational expected_total_backward(unsigned n) {
    if (n < 2) throw std::invalid_argument("needs at least two vertices");
    const long nn = static_cast<long>(n);
    return rational(nn * nn - 5 * nn + 8, 4) - pow2(1 - nn);
}

Rational head_compare_prob(unsigned i, unsigned j) {
    if (i == 0 || j == 0) throw std::invalid_argument("group positions are 1-based");
    return Rational(binomial(i + j - 2, i - 1)) / pow2(static_cast<long>(i + j - 2));
}

Rational merge_backward_prob(unsigned i, unsigned j) {
    if (i == 0 || j == 0) throw std::invalid_argument("group positions are 1-based");
    Rational sum = 0;
    for (unsigned k = 1; k < j; ++k) sum += head_compare_prob(k, i);
    for (unsigned k = 1; k < i; ++k) sum += head_compare_prob(k, j);
    return sum / 4;
}

double stage_backward_mean_f64(unsigned k) {
    if (k == 0) throw std::invalid_argument("stage index must be at least 1");
    return static_cast<double>(k) / 2.0 - 1.5 + std::exp2(1.0 - static_cast<double>(k));
}

double expected_total_backward_f64(unsigned n) {
    if (n < 2) throw std::invalid_argument("needs at least two vertices");
    const double nn = static_cast<double>(n);
    return (nn * nn - 5.0 * nn + 8.0) / 4.0 - std::exp2(1.0 - nn);
}

namespace {

// Row j of the comparison-probability table up to column imax, built by the
// halving recurrence. Row 1 is 2^(1-i); each further row averages the
// neighbor entries. All values stay within [0, 1].
std::vector<double> h_row_f64(unsigned j, unsigned imax) {
    std::vector<double> row(imax + 1, 0.0), prev(imax + 1, 0.0);
    for (unsigned i = 1; i <= imax; ++i) prev[i] = std::exp2(1.0 - static_cast<double>(i));
    if (j == 1) return prev;
    for (unsigned jj = 2; jj <= j; ++jj) {
        row[1] = std::exp2(1.0 - static_cast<double>(jj));
        for (unsigned i = 2; i <= imax; ++i) row[i] = 0.5 * (row[i - 1] + prev[i]);
        prev = row;
    }
    return prev;
}

}  // namespace

double head_compare_prob_f64(unsigned i, unsigned j) {
    if (i == 0 || j == 0) throw std::invalid_argument("group positions are 1-based");
    return h_row_f64(j, i)[i];
}

double merge_backward_prob_f64(unsigned i, unsigned j) {
    if (i == 0 || j == 0) throw std::invalid_argument("group positions are 1-based");
    double sum = 0.0;
    if (j >= 2) {
        const std::vector<double> row_i = h_row_f64(i, j - 1);
        for (unsigned k = 1; k < j; ++k) sum += row_i[k];
    }
    if (i >= 2) {
        const std::vector<double> row_j = h_row_f64(j, i - 1);
        for (unsigned k = 1; k < i; ++k) sum += row_j[k];
    }
    return 0.25 * sum;
}

}  // namespace fast
