#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fast/heuristics.hpp"
#include "fast/rational.hpp"
#include "fast/tournament.hpp"

namespace fast {

enum class Algo { Insertion, Merge, Selection, Bubble, Quick, Exact };

enum class Model { Uniform, Transitive, Noisy };

std::string to_string(Algo a);
std::string to_string(Model m);
std::string to_string(PivotRule r);
Algo parse_algo(const std::string& s);
PivotRule parse_pivot_rule(const std::string& s);

/// Declarative trial specification. Per-trial randomness is derived as
/// mix(seed, trial) for the instance and mix(mix(seed, trial), algo_id) for
/// each algorithm run, so results are identical under any schedule.
struct ExperimentConfig {
    std::vector<Algo> algorithms;
    unsigned n = 0;
    Model model = Model::Uniform;
    double flip_prob = 0.0;  // noisy-transitive flip probability
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    PivotRule pivot = PivotRule::UniformRandom;
    unsigned threads = 1;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Aggregates for one algorithm across all trials of a config.
struct AlgoStats {
    Algo algo = Algo::Insertion;
    std::uint64_t trials = 0;
    double mean_cost = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(trials)
    Cost min_cost = 0;
    Cost max_cost = 0;
    bool has_ratio = false;  // ratio vs exact optimum, per-trial cost/max(1,opt)
    double mean_ratio = 0.0;
    double max_ratio = 0.0;

    bool operator==(const AlgoStats&) const = default;
};

struct SummaryStats {
    ExperimentConfig config;
    std::vector<AlgoStats> per_algo;

    bool operator==(const SummaryStats&) const = default;
};

/// Exact average cost of the insertion-sort heuristic over ALL tournaments
/// on n vertices, 2 <= n <= 6, with the fixed insertion order 0..n-1
/// (relabeling symmetry of the uniform model makes the fixed order
/// equivalent to averaging over random orders). Pure enumeration of
/// 2^(n(n-1)/2) instances; no random numbers involved.
Rational oracle_expected_insertion_cost(unsigned n);

/// Exact per-pair outcome tables of a single merge of two groups of
/// `groups_of` elements each, where every head comparison is an independent
/// fair coin. Built by walking every coin path of the merge.
struct MergeOracleTables {
    unsigned groups_of = 0;
    /// compare[i][j]: probability positions i and j are head-compared (1-based).
    std::vector<std::vector<Rational>> compare;
    /// backward[i][j]: probability the cross edge (i, j) ends up backward.
    /// Pairs decided without a comparison carry an unexamined fair-coin
    /// edge, i.e. they are backward with probability 1/2.
    std::vector<std::vector<Rational>> backward;
};
MergeOracleTables enumerate_merge_paths(unsigned groups_of);

/// Probability that positions i and j are head-compared during a single
/// merge; full coin-path enumeration. 1 <= i, j <= groups_of <= 10.
Rational oracle_merge_comparison(unsigned i, unsigned j, unsigned groups_of);

/// Probability that the cross-group edge (i, j) is backward after a single
/// merge; full coin-path enumeration. 1 <= i, j <= groups_of <= 10.
Rational oracle_backward_prob(unsigned i, unsigned j, unsigned groups_of);

/// Runs cfg.trials independent instances of the configured model through
/// every selected algorithm. Bit-identical results for a given config, no
/// matter how many threads execute the trials.
SummaryStats run_trials(const ExperimentConfig& cfg);

/// run_trials plus a per-trial exact optimum (subset DP), reporting the
/// mean and max of cost/max(1, optimal_cost) per algorithm. Requires n
/// within the exact-solver guard.
SummaryStats approximation_report(const ExperimentConfig& cfg);

/// CSV with header algo,n,model,p,trials,seed,mean_cost,stderr,min,max,mean_ratio
/// and one row per algorithm. The p field is empty for the uniform model,
/// mean_ratio is empty when no exact baseline was computed.
void write_csv(std::ostream& out, const SummaryStats& stats);

/// JSON config, e.g.
///   {"algos": ["insertion", "quick"], "n": 10, "model": "noisy", "p": 0.1,
///    "trials": 1000, "seed": 7, "pivot": "random", "threads": 2}
ExperimentConfig parse_experiment_config(std::istream& in);

}  // namespace fast
