#include "fast/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "fast/exact.hpp"
#include "fast/rng.hpp"

namespace fast {

std::string to_string(Algo a) {
    switch (a) {
        case Algo::Insertion: return "insertion";
        case Algo::Merge: return "merge";
        case Algo::Selection: return "selection";
        case Algo::Bubble: return "bubble";
        case Algo::Quick: return "quick";
        case Algo::Exact: return "exact";
    }
    return "?";
}

std::string to_string(Model m) {
    switch (m) {
        case Model::Uniform: return "uniform";
        case Model::Transitive: return "transitive";
        case Model::Noisy: return "noisy";
    }
    return "?";
}

std::string to_string(PivotRule r) {
    return r == PivotRule::UniformRandom ? "random" : "min-imbalance";
}

Algo parse_algo(const std::string& s) {
    if (s == "insertion") return Algo::Insertion;
    if (s == "merge") return Algo::Merge;
    if (s == "selection") return Algo::Selection;
    if (s == "bubble") return Algo::Bubble;
    if (s == "quick") return Algo::Quick;
    if (s == "exact") return Algo::Exact;
    throw std::invalid_argument("unknown algorithm: " + s);
}

PivotRule parse_pivot_rule(const std::string& s) {
    if (s == "random") return PivotRule::UniformRandom;
    if (s == "min-imbalance") return PivotRule::MinImbalance;
    throw std::invalid_argument("unknown pivot rule: " + s);
}

Rational oracle_expected_insertion_cost(unsigned n) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("insertion-cost oracle enumerates 2 <= n <= 6 only");
    const unsigned pairs = n * (n - 1) / 2;
    const std::uint64_t count = std::uint64_t{1} << pairs;
    std::uint64_t total = 0;
    const Ordering start = identity_order(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const Tournament t = Tournament::from_mask(n, mask);
        total += insertion_sort_from(t, start).cost;
    }
    Rational mean(static_cast<unsigned long>(total), static_cast<unsigned long>(count));
    mean.canonicalize();
    return mean;
}

namespace {

// One full coin-path walk of a single merge. Probabilities are tracked as
// integer weights scaled by 2^max_coins (2^(max_coins+1) for the backward
// table, which folds in the unexamined edge's own fair coin).
class MergePathWalker {
public:
    explicit MergePathWalker(unsigned g)
        : g_(g),
          max_coins_(2 * g - 1),
          compared_(g + 1, std::vector<bool>(g + 1, false)),
          compare_weight_(g + 1, std::vector<std::uint64_t>(g + 1, 0)),
          backward_weight_(g + 1, std::vector<std::uint64_t>(g + 1, 0)) {}

    void run() { walk(1, 1, 0); }

    MergeOracleTables tables() const {
        MergeOracleTables t;
        t.groups_of = g_;
        t.compare.assign(g_ + 1, std::vector<Rational>(g_ + 1, Rational(0)));
        t.backward.assign(g_ + 1, std::vector<Rational>(g_ + 1, Rational(0)));
        for (unsigned i = 1; i <= g_; ++i)
            for (unsigned j = 1; j <= g_; ++j) {
                t.compare[i][j] = scaled(compare_weight_[i][j], max_coins_);
                t.backward[i][j] = scaled(backward_weight_[i][j], max_coins_ + 1);
            }
        return t;
    }

private:
    static Rational scaled(std::uint64_t weight, unsigned exponent) {
        Rational q(static_cast<unsigned long>(weight), 1);
        q /= pow2(static_cast<long>(exponent));
        return q;
    }

    // a, b: 1-based heads of the two groups; depth: coins consumed so far.
    void walk(unsigned a, unsigned b, unsigned depth) {
        if (a > g_ || b > g_) {
            finish_path(depth);
            return;
        }
        compared_[a][b] = true;
        walk(a + 1, b, depth + 1);  // first head wins and is emitted
        walk(a, b + 1, depth + 1);  // second head wins
        compared_[a][b] = false;
    }

    void finish_path(unsigned depth) {
        // One side is exhausted; the remainder is appended without further
        // comparisons, so every pair's relative order is now fixed.
        const std::uint64_t path_weight = std::uint64_t{1} << (max_coins_ - depth);
        for (unsigned i = 1; i <= g_; ++i)
            for (unsigned j = 1; j <= g_; ++j) {
                if (compared_[i][j]) {
                    // The loser follows the winner, so a head-compared pair
                    // can never end up backward.
                    compare_weight_[i][j] += path_weight;
                } else {
                    // Unexamined edge: whichever element came out first, the
                    // independent fair-coin edge points against that order
                    // with probability 1/2 (hence the doubled table scale).
                    backward_weight_[i][j] += path_weight;
                }
            }
    }

    unsigned g_;
    unsigned max_coins_;
    std::vector<std::vector<bool>> compared_;
    std::vector<std::vector<std::uint64_t>> compare_weight_;
    std::vector<std::vector<std::uint64_t>> backward_weight_;
};

}  // namespace

MergeOracleTables enumerate_merge_paths(unsigned groups_of) {
    if (groups_of < 1 || groups_of > 10)
        throw std::invalid_argument("merge oracle enumerates 1 <= groups_of <= 10 only");
    MergePathWalker walker(groups_of);
    walker.run();
    return walker.tables();
}

Rational oracle_merge_comparison(unsigned i, unsigned j, unsigned groups_of) {
    if (i < 1 || j < 1 || i > groups_of || j > groups_of)
        throw std::invalid_argument("positions must satisfy 1 <= i, j <= groups_of");
    return enumerate_merge_paths(groups_of).compare[i][j];
}

Rational oracle_backward_prob(unsigned i, unsigned j, unsigned groups_of) {
    if (i < 1 || j < 1 || i > groups_of || j > groups_of)
        throw std::invalid_argument("positions must satisfy 1 <= i, j <= groups_of");
    return enumerate_merge_paths(groups_of).backward[i][j];
}

namespace {

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.algorithms.empty()) throw std::invalid_argument("no algorithms selected");
    if (cfg.n < 2) throw std::invalid_argument("experiments need n >= 2");
    if (cfg.trials < 1) throw std::invalid_argument("trial count must be at least 1");
    if (cfg.threads < 1) throw std::invalid_argument("thread count must be at least 1");
    if (!(cfg.flip_prob >= 0.0 && cfg.flip_prob <= 1.0))
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    for (Algo a : cfg.algorithms)
        if (a == Algo::Exact && cfg.n > kSubsetDpMaxVertices)
            throw std::invalid_argument("exact runs are limited to n <= 24");
}

// Stable per-algorithm stream ids, independent of selection order.
unsigned algo_stream_id(Algo a) { return static_cast<unsigned>(a); }

Tournament build_instance(const ExperimentConfig& cfg, std::uint64_t trial_seed) {
    switch (cfg.model) {
        case Model::Uniform: return Tournament::uniform_random(cfg.n, trial_seed);
        case Model::Transitive: return Tournament::noisy_transitive(cfg.n, 0.0, trial_seed);
        case Model::Noisy: return Tournament::noisy_transitive(cfg.n, cfg.flip_prob, trial_seed);
    }
    throw std::logic_error("unreachable model");
}

Cost run_algo(Algo a, const Tournament& t, std::uint64_t seed, PivotRule pivot) {
    switch (a) {
        case Algo::Insertion: return insertion_sort(t, seed).cost;
        case Algo::Merge: return merge_sort(t, seed).cost;
        case Algo::Selection: return selection_sort(t, seed).cost;
        case Algo::Bubble: return bubble_sort(t, seed).cost;
        case Algo::Quick: return quick_sort(t, seed, pivot).cost;
        case Algo::Exact: return solve_dp(t).cost;
    }
    throw std::logic_error("unreachable algorithm");
}

// Fills costs[algo][trial] (and optionally optima[trial]) for a trial range.
void run_range(const ExperimentConfig& cfg, std::uint64_t begin, std::uint64_t end,
               std::vector<std::vector<Cost>>& costs, std::vector<Cost>* optima) {
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        const std::uint64_t trial_seed = mix(cfg.seed, trial);
        const Tournament t = build_instance(cfg, trial_seed);
        for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
            const Algo a = cfg.algorithms[ai];
            const std::uint64_t run_seed = mix(trial_seed, algo_stream_id(a));
            costs[ai][trial] = run_algo(a, t, run_seed, cfg.pivot);
        }
        if (optima) (*optima)[trial] = solve_dp(t).cost;
    }
}

SummaryStats summarize(const ExperimentConfig& cfg, const std::vector<std::vector<Cost>>& costs,
                       const std::vector<Cost>* optima) {
    SummaryStats stats;
    stats.config = cfg;
    for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
        AlgoStats s;
        s.algo = cfg.algorithms[ai];
        s.trials = cfg.trials;
        // Integer moments keep the reduction exact and schedule-independent.
        std::uint64_t sum = 0;
        unsigned __int128 sum_sq = 0;
        Cost min_c = costs[ai][0], max_c = costs[ai][0];
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            const Cost c = costs[ai][t];
            sum += c;
            sum_sq += static_cast<unsigned __int128>(c) * c;
            min_c = std::min(min_c, c);
            max_c = std::max(max_c, c);
        }
        const double n = static_cast<double>(cfg.trials);
        s.mean_cost = static_cast<double>(sum) / n;
        if (cfg.trials > 1) {
            // n*sum_sq - sum^2 is exact in 128-bit integers, so the variance
            // is one rounding away from exact and schedule-independent.
            const unsigned __int128 scaled_var =
                static_cast<unsigned __int128>(cfg.trials) * sum_sq -
                static_cast<unsigned __int128>(sum) * sum;
            const double var = static_cast<double>(scaled_var) / (n * (n - 1.0));
            s.std_error = std::sqrt(var / n);
        }
        s.min_cost = min_c;
        s.max_cost = max_c;
        if (optima) {
            s.has_ratio = true;
            double ratio_sum = 0.0, ratio_max = 0.0;
            for (std::uint64_t t = 0; t < cfg.trials; ++t) {
                const double denom = static_cast<double>(std::max<Cost>(1, (*optima)[t]));
                const double r = static_cast<double>(costs[ai][t]) / denom;
                ratio_sum += r;
                ratio_max = std::max(ratio_max, r);
            }
            s.mean_ratio = ratio_sum / n;
            s.max_ratio = ratio_max;
        }
        stats.per_algo.push_back(s);
    }
    return stats;
}

SummaryStats run_all(const ExperimentConfig& cfg, bool with_exact) {
    validate_config(cfg);
    if (with_exact && cfg.n > kSubsetDpMaxVertices)
        throw std::invalid_argument("approximation report needs n within the exact-solver guard");

    std::vector<std::vector<Cost>> costs(cfg.algorithms.size(),
                                         std::vector<Cost>(cfg.trials, 0));
    std::vector<Cost> optima;
    if (with_exact) optima.assign(cfg.trials, 0);
    std::vector<Cost>* optima_ptr = with_exact ? &optima : nullptr;

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads, cfg.trials));
    if (workers <= 1) {
        run_range(cfg, 0, cfg.trials, costs, optima_ptr);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, cfg.trials);
            if (begin >= end) break;
            pool.emplace_back(
                [&, begin, end] { run_range(cfg, begin, end, costs, optima_ptr); });
        }
        for (auto& th : pool) th.join();
    }
    return summarize(cfg, costs, optima_ptr);
}

}  // namespace

SummaryStats run_trials(const ExperimentConfig& cfg) { return run_all(cfg, false); }

SummaryStats approximation_report(const ExperimentConfig& cfg) { return run_all(cfg, true); }

namespace {

std::string format_double(double v) {
    std::ostringstream s;
    s.precision(10);
    s << v;
    return s.str();
}

}  // namespace

void write_csv(std::ostream& out, const SummaryStats& stats) {
    out << "algo,n,model,p,trials,seed,mean_cost,stderr,min,max,mean_ratio\n";
    const ExperimentConfig& cfg = stats.config;
    for (const AlgoStats& s : stats.per_algo) {
        out << to_string(s.algo) << ',' << cfg.n << ',' << to_string(cfg.model) << ',';
        if (cfg.model != Model::Uniform) out << format_double(cfg.flip_prob);
        out << ',' << cfg.trials << ',' << cfg.seed << ',' << format_double(s.mean_cost) << ','
            << format_double(s.std_error) << ',' << s.min_cost << ',' << s.max_cost << ',';
        if (s.has_ratio) out << format_double(s.mean_ratio);
        out << '\n';
    }
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        for (const auto& a : j.at("algos")) cfg.algorithms.push_back(parse_algo(a));
        cfg.n = j.at("n").get<unsigned>();
        cfg.model = [&] {
            const std::string m = j.value("model", "uniform");
            if (m == "uniform") return Model::Uniform;
            if (m == "transitive") return Model::Transitive;
            if (m == "noisy") return Model::Noisy;
            throw std::runtime_error("config parse error: unknown model '" + m + "'");
        }();
        cfg.flip_prob = j.value("p", 0.0);
        cfg.trials = j.value("trials", std::uint64_t{1});
        cfg.seed = j.value("seed", std::uint64_t{0});
        cfg.pivot = parse_pivot_rule(j.value("pivot", "random"));
        cfg.threads = j.value("threads", 1u);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    return cfg;
}

}  // namespace fast
