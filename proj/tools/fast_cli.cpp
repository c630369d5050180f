// fast: sorting-style heuristics, exact solvers and analytic verification
// for minimum feedback arc set on tournaments.
//
// Subcommands: gen, solve, cost, experiment, verify, formulas, aggregate.
// All randomness flows from --seed (or the FAST_SEED environment variable),
// so identical invocations produce byte-identical output.
// Exit codes: 0 success, 1 validation/verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fast/aggregate.hpp"
#include "fast/exact.hpp"
#include "fast/experiment.hpp"
#include "fast/formulas.hpp"
#include "fast/heuristics.hpp"
#include "fast/rational.hpp"
#include "fast/tournament.hpp"

namespace {

using namespace fast;

struct ModelSpec {
    Model model = Model::Uniform;
    double p = 0.0;
};

ModelSpec parse_model(const std::string& text) {
    if (text == "uniform") return {Model::Uniform, 0.0};
    if (text == "transitive") return {Model::Transitive, 0.0};
    if (text.rfind("noisy:", 0) == 0) {
        ModelSpec spec{Model::Noisy, 0.0};
        try {
            spec.p = std::stod(text.substr(6));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--model", "bad flip probability in '" + text + "'");
        }
        if (!(spec.p >= 0.0 && spec.p <= 1.0))
            throw CLI::ValidationError("--model", "flip probability must lie in [0, 1]");
        return spec;
    }
    throw CLI::ValidationError("--model", "expected uniform, transitive or noisy:P");
}

Tournament run_model(const ModelSpec& spec, unsigned n, std::uint64_t seed) {
    switch (spec.model) {
        case Model::Uniform: return Tournament::uniform_random(n, seed);
        case Model::Transitive: return Tournament::transitive(n);
        case Model::Noisy: return Tournament::noisy_transitive(n, spec.p, seed);
    }
    throw std::logic_error("unreachable model");
}

Tournament read_tournament_arg(const std::string& path) {
    if (path.empty() || path == "-") return parse_tournament(std::cin);
    return load_tournament(path);
}

// Writes through to a file when requested, otherwise stdout.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string rat_with_float(const Rational& q) {
    std::ostringstream s;
    s << q.get_str() << " (" << to_double(q) << ")";
    return s.str();
}

HeuristicResult dispatch_solve(Algo algo, const Tournament& t, std::uint64_t seed,
                               PivotRule pivot) {
    switch (algo) {
        case Algo::Insertion: return insertion_sort(t, seed);
        case Algo::Merge: return merge_sort(t, seed);
        case Algo::Selection: return selection_sort(t, seed);
        case Algo::Bubble: return bubble_sort(t, seed);
        case Algo::Quick: return quick_sort(t, seed, pivot);
        case Algo::Exact: {
            ExactResult r = solve_dp(t);
            return {std::move(r.ordering), r.cost, 0};
        }
    }
    throw std::logic_error("unreachable algorithm");
}

int verify_theorem1(unsigned nmax, std::ostream& out) {
    if (nmax < 2 || nmax > 6) throw std::invalid_argument("theorem 1 supports --nmax in [2, 6]");
    out << "# theorem 1: expected insertion-sort cost, closed form vs exhaustive enumeration\n";
    unsigned failures = 0, checks = 0;
    for (unsigned n = 2; n <= nmax; ++n) {
        const Rational formula = expected_total_backward(n);
        const Rational oracle = oracle_expected_insertion_cost(n);
        const bool ok = formula == oracle;
        ++checks;
        if (!ok) ++failures;
        out << "n=" << n << " formula " << rat_with_float(formula) << " oracle "
            << rat_with_float(oracle) << (ok ? " ok" : " MISMATCH") << "\n";
    }
    out << "theorem 1: " << (failures ? "FAILED" : "OK") << " (" << (checks - failures) << "/"
        << checks << " checks)\n";
    return failures ? 1 : 0;
}

int verify_theorem2(unsigned nmax, std::ostream& out) {
    if (nmax < 1 || nmax > 10) throw std::invalid_argument("theorem 2 supports --nmax in [1, 10]");
    out << "# theorem 2: head-comparison probability, closed form vs coin-path enumeration "
           "(two groups of "
        << nmax << ")\n";
    const MergeOracleTables tables = enumerate_merge_paths(nmax);
    unsigned failures = 0, checks = 0;
    for (unsigned i = 1; i <= nmax; ++i)
        for (unsigned j = 1; j <= nmax; ++j) {
            const Rational formula = head_compare_prob(i, j);
            const Rational& oracle = tables.compare[i][j];
            const bool ok = formula == oracle;
            ++checks;
            if (!ok) ++failures;
            out << "i=" << i << " j=" << j << " formula " << rat_with_float(formula) << " oracle "
                << rat_with_float(oracle) << (ok ? " ok" : " MISMATCH") << "\n";
        }
    out << "theorem 2: " << (failures ? "FAILED" : "OK") << " (" << (checks - failures) << "/"
        << checks << " checks)\n";
    return failures ? 1 : 0;
}

int verify_theorem3(unsigned nmax, std::ostream& out) {
    if (nmax < 1 || nmax > 10) throw std::invalid_argument("theorem 3 supports --nmax in [1, 10]");
    out << "# theorem 3: cross-edge backward probability, closed form vs coin-path enumeration "
           "(two groups of "
        << nmax << ")\n";
    const MergeOracleTables tables = enumerate_merge_paths(nmax);
    unsigned failures = 0, checks = 0;
    for (unsigned i = 1; i <= nmax; ++i)
        for (unsigned j = 1; j <= nmax; ++j) {
            const Rational formula = merge_backward_prob(i, j);
            const Rational& oracle = tables.backward[i][j];
            const bool ok = formula == oracle;
            ++checks;
            if (!ok) ++failures;
            out << "i=" << i << " j=" << j << " formula " << rat_with_float(formula) << " oracle "
                << rat_with_float(oracle) << (ok ? " ok" : " MISMATCH") << "\n";
        }
    bool identity_ok = true;
    for (unsigned i = 1; i <= 12 && identity_ok; ++i)
        for (unsigned j = 1; j <= 12 && identity_ok; ++j)
            identity_ok = merge_backward_prob(i, j) == (1 - head_compare_prob(i, j)) / 2;
    ++checks;
    if (!identity_ok) ++failures;
    out << "identity backward(i,j) == (1 - compare(i,j))/2 for all i,j <= 12 "
        << (identity_ok ? "ok" : "MISMATCH") << "\n";
    out << "theorem 3: " << (failures ? "FAILED" : "OK") << " (" << (checks - failures) << "/"
        << checks << " checks)\n";
    return failures ? 1 : 0;
}

int print_formula_table(const std::string& table, unsigned max, std::ostream& out) {
    if (table == "bk") {
        out << "# expected backward edges created at insertion stage k\n";
        for (unsigned k = 1; k <= max; ++k)
            out << "k=" << k << " " << rat_with_float(stage_backward_mean(k)) << "\n";
    } else if (table == "total") {
        out << "# expected total backward edges of the insertion-sort heuristic\n";
        for (unsigned n = 2; n <= max; ++n)
            out << "n=" << n << " " << rat_with_float(expected_total_backward(n)) << "\n";
    } else if (table == "h") {
        out << "# probability positions i and j are head-compared in a single merge\n";
        for (unsigned i = 1; i <= max; ++i)
            for (unsigned j = 1; j <= max; ++j)
                out << "i=" << i << " j=" << j << " " << rat_with_float(head_compare_prob(i, j))
                    << "\n";
    } else if (table == "p") {
        out << "# probability the cross edge (i, j) is backward after a single merge\n";
        for (unsigned i = 1; i <= max; ++i)
            for (unsigned j = 1; j <= max; ++j)
                out << "i=" << i << " j=" << j << " " << rat_with_float(merge_backward_prob(i, j))
                    << "\n";
    } else {
        throw std::invalid_argument("unknown table: " + table);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sorting-style heuristics and exact solvers for minimum feedback arc set "
                 "on tournaments"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a tournament file");
    unsigned gen_n = 0;
    std::string gen_model = "uniform", gen_out;
    std::uint64_t gen_seed = 0;
    gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::Range(1u, 1000000u));
    gen->add_option("--model", gen_model, "uniform | transitive | noisy:P");
    gen->add_option("--seed", gen_seed, "random seed")->envname("FAST_SEED");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "Order a tournament and report the cost");
    std::string solve_algo = "insertion", solve_in, solve_pivot = "random";
    std::uint64_t solve_seed = 0;
    solve->add_option("--algo", solve_algo, "insertion | merge | selection | bubble | quick | exact")
        ->check(CLI::IsMember({"insertion", "merge", "selection", "bubble", "quick", "exact"}));
    solve->add_option("--in", solve_in, "tournament file (default stdin)");
    solve->add_option("--seed", solve_seed, "random seed")->envname("FAST_SEED");
    solve->add_option("--pivot", solve_pivot, "quick-sort pivot rule")
        ->check(CLI::IsMember({"random", "min-imbalance"}));

    // cost
    auto* cost_cmd = app.add_subcommand("cost", "Backward count and edge list of an ordering");
    std::string cost_in, cost_order;
    cost_cmd->add_option("--in", cost_in, "tournament file (default stdin)");
    cost_cmd->add_option("--order", cost_order, "comma-separated vertex ids")->required();

    // experiment
    auto* exp = app.add_subcommand("experiment", "Monte Carlo cost campaign, CSV output");
    std::string exp_config, exp_algos = "insertion,merge,selection,bubble,quick";
    std::string exp_model = "uniform", exp_pivot = "random", exp_out;
    unsigned exp_n = 10, exp_threads = 1;
    std::uint64_t exp_trials = 1000, exp_seed = 0;
    bool exp_ratios = false;
    auto* exp_config_opt = exp->add_option("--config", exp_config, "JSON config file");
    auto* exp_algos_opt = exp->add_option("--algos", exp_algos, "comma-separated algorithms");
    auto* exp_n_opt = exp->add_option("--n", exp_n, "vertex count");
    auto* exp_model_opt = exp->add_option("--model", exp_model, "uniform | transitive | noisy:P");
    auto* exp_trials_opt = exp->add_option("--trials", exp_trials, "trial count");
    auto* exp_seed_opt = exp->add_option("--seed", exp_seed, "master seed")->envname("FAST_SEED");
    auto* exp_pivot_opt = exp->add_option("--pivot", exp_pivot, "quick-sort pivot rule")
                              ->check(CLI::IsMember({"random", "min-imbalance"}));
    auto* exp_threads_opt = exp->add_option("--threads", exp_threads, "worker threads");
    auto* exp_ratios_opt =
        exp->add_flag("--ratios", exp_ratios, "also solve exactly and report cost ratios");
    exp->add_option("--out", exp_out, "output file (default stdout)");
    for (auto* opt : {exp_algos_opt, exp_n_opt, exp_model_opt, exp_trials_opt, exp_seed_opt,
                      exp_pivot_opt, exp_threads_opt})
        exp_config_opt->excludes(opt);
    exp_config_opt->excludes(exp_ratios_opt);

    // verify
    auto* verify = app.add_subcommand("verify", "Check a theorem's formula against its oracle");
    unsigned verify_theorem = 0, verify_nmax = 0;
    verify->add_option("--theorem", verify_theorem, "1 | 2 | 3")
        ->required()
        ->check(CLI::Range(1u, 3u));
    verify->add_option("--nmax", verify_nmax, "size bound (default 5, 5, 4 per theorem)");

    // formulas
    auto* formulas = app.add_subcommand("formulas", "Print closed-form value tables");
    std::string formulas_table;
    unsigned formulas_max = 8;
    formulas->add_option("--table", formulas_table, "bk | total | h | p")
        ->required()
        ->check(CLI::IsMember({"bk", "total", "h", "p"}));
    formulas->add_option("--max", formulas_max, "largest index")->check(CLI::Range(1u, 4096u));

    // aggregate
    auto* agg = app.add_subcommand("aggregate", "Rank aggregation via the majority tournament");
    std::string agg_ballots, agg_algo = "insertion", agg_ties = "error", agg_pivot = "random";
    std::uint64_t agg_seed = 0;
    agg->add_option("--ballots", agg_ballots, "ballots file")->required();
    agg->add_option("--algo", agg_algo, "insertion | merge | selection | bubble | quick | exact")
        ->check(CLI::IsMember({"insertion", "merge", "selection", "bubble", "quick", "exact"}));
    agg->add_option("--seed", agg_seed, "random seed")->envname("FAST_SEED");
    agg->add_option("--ties", agg_ties, "majority tie handling: error | random | lex")
        ->check(CLI::IsMember({"error", "random", "lex"}));
    agg->add_option("--pivot", agg_pivot, "quick-sort pivot rule")
        ->check(CLI::IsMember({"random", "min-imbalance"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(gen)) {
            const ModelSpec spec = parse_model(gen_model);
            const Tournament t = run_model(spec, gen_n, gen_seed);
            OutputTarget out(gen_out);
            write_tournament(out.stream(), t);
            return 0;
        }

        if (app.got_subcommand(solve)) {
            const Tournament t = read_tournament_arg(solve_in);
            const HeuristicResult r =
                dispatch_solve(parse_algo(solve_algo), t, solve_seed, parse_pivot_rule(solve_pivot));
            std::cout << "order " << format_order_csv(r.ordering) << "\n"
                      << "cost " << r.cost << "\n";
            return 0;
        }

        if (app.got_subcommand(cost_cmd)) {
            const Tournament t = read_tournament_arg(cost_in);
            const Ordering o = parse_order_csv(cost_order, t.vertex_count());
            std::cout << "cost " << backward_count(t, o) << "\n";
            for (const auto& [from, to] : backward_edges(t, o))
                std::cout << "edge " << from << " " << to << "\n";
            return 0;
        }

        if (app.got_subcommand(exp)) {
            ExperimentConfig cfg;
            if (!exp_config.empty()) {
                std::ifstream in(exp_config);
                if (!in) throw std::runtime_error("cannot open config file: " + exp_config);
                cfg = parse_experiment_config(in);
            } else {
                std::string item;
                std::istringstream algos(exp_algos);
                while (std::getline(algos, item, ',')) cfg.algorithms.push_back(parse_algo(item));
                const ModelSpec spec = parse_model(exp_model);
                cfg.n = exp_n;
                cfg.model = spec.model;
                cfg.flip_prob = spec.p;
                cfg.trials = exp_trials;
                cfg.seed = exp_seed;
                cfg.pivot = parse_pivot_rule(exp_pivot);
                cfg.threads = exp_threads;
            }
            const SummaryStats stats = exp_ratios ? approximation_report(cfg) : run_trials(cfg);
            OutputTarget out(exp_out);
            write_csv(out.stream(), stats);
            return 0;
        }

        if (app.got_subcommand(verify)) {
            switch (verify_theorem) {
                case 1: return verify_theorem1(verify_nmax ? verify_nmax : 5, std::cout);
                case 2: return verify_theorem2(verify_nmax ? verify_nmax : 5, std::cout);
                case 3: return verify_theorem3(verify_nmax ? verify_nmax : 4, std::cout);
            }
        }

        if (app.got_subcommand(formulas))
            return print_formula_table(formulas_table, formulas_max, std::cout);

        if (app.got_subcommand(agg)) {
            const Profile profile = load_ballots(agg_ballots);
            const TieRule ties = agg_ties == "error"    ? TieRule::Error
                                 : agg_ties == "random" ? TieRule::SeededRandom
                                                        : TieRule::Lexicographic;
            const Tournament t = majority_tournament(profile, ties, agg_seed);
            const HeuristicResult r =
                dispatch_solve(parse_algo(agg_algo), t, agg_seed, parse_pivot_rule(agg_pivot));
            for (std::size_t i = 0; i < r.ordering.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << profile.names[r.ordering[i]];
            }
            std::cout << "\n# majority_backward_cost " << r.cost << "\n"
                      << "# total_kendall_tau " << total_kendall_tau(r.ordering, profile) << "\n";
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        // Bad option values discovered after parsing (e.g. --model noisy:2)
        // are still usage errors.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
