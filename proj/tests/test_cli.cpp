// End-to-end checks of the command-line tool: output shapes, exit codes,
// stdin/file plumbing and seed handling. Invoke with the binary path as the
// only argument.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cout << "FAIL " << what << "\n";
    }
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run(const std::string& cmd) {
    CmdResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string fast;      // path to the binary under test
std::string work_dir;  // scratch directory

void write_file(const std::string& name, const std::string& content) {
    std::ofstream f(work_dir + "/" + name);
    f << content;
}

std::string path(const std::string& name) { return work_dir + "/" + name; }

void test_gen() {
    const CmdResult r = run(fast + " gen --n 4 --model transitive --seed 1");
    expect(r.exit_code == 0, "gen exits 0");
    expect(contains(r.out, "tournament 4"), "gen writes the header");
    expect(contains(r.out, "0 1") && contains(r.out, "2 3"), "gen writes forward edges");

    const CmdResult a = run(fast + " gen --n 9 --model uniform --seed 5");
    const CmdResult b = run(fast + " gen --n 9 --model uniform --seed 5");
    const CmdResult c = run(fast + " gen --n 9 --model uniform --seed 6");
    expect(a.out == b.out, "gen is reproducible for a fixed seed");
    expect(a.out != c.out, "gen depends on the seed");

    const CmdResult noisy = run(fast + " gen --n 6 --model noisy:0.0 --seed 3");
    const CmdResult trans = run(fast + " gen --n 6 --model transitive --seed 3");
    expect(noisy.out == trans.out, "noisy:0 equals the transitive model");

    expect(run(fast + " gen --n 4 --model noisy:1.5 --seed 1 2>/dev/null").exit_code == 2,
           "gen rejects a flip probability above one");
    expect(run(fast + " gen --model uniform 2>/dev/null").exit_code == 2,
           "gen requires --n");
}

void test_solve() {
    write_file("cycle.txt", "tournament 3\n0 1\n1 2\n2 0\n");
    const CmdResult r = run(fast + " solve --algo exact --in " + path("cycle.txt"));
    expect(r.exit_code == 0, "solve exits 0");
    expect(r.out == "order 0,1,2\ncost 1\n", "solve prints the exact order and cost");

    const CmdResult piped =
        run(fast + " gen --n 20 --model transitive --seed 2 | " + fast + " solve --algo merge --seed 8");
    expect(piped.exit_code == 0, "solve reads stdin");
    expect(contains(piped.out, "cost 0"), "merge recovers the transitive order");

    const CmdResult exact_pipe =
        run(fast + " gen --n 3 --model transitive --seed 0 | " + fast + " solve --algo exact");
    expect(exact_pipe.out == "order 0,1,2\ncost 0\n", "exact solve of a generated transitive file");

    for (const char* algo : {"insertion", "merge", "selection", "bubble", "quick"}) {
        const CmdResult h = run(fast + " solve --algo " + std::string(algo) + " --seed 4 --in " +
                                path("cycle.txt"));
        expect(h.exit_code == 0 && contains(h.out, "cost 1"),
               std::string("3-cycle costs 1 under ") + algo);
    }

    const CmdResult pivoted = run(fast + " gen --n 15 --model uniform --seed 7 | " + fast +
                                  " solve --algo quick --pivot min-imbalance --seed 1");
    expect(pivoted.exit_code == 0, "quick accepts the min-imbalance pivot rule");

    expect(run(fast + " solve --algo bogo --in " + path("cycle.txt") + " 2>/dev/null").exit_code == 2,
           "solve rejects unknown algorithms as usage errors");

    write_file("broken.txt", "tournament 3\n0 1\n1 2\n");
    const CmdResult broken = run(fast + " solve --in " + path("broken.txt") + " 2>&1");
    expect(broken.exit_code == 1, "solve exits 1 on a malformed tournament");
    expect(contains(broken.out, "error"), "solve reports the parse error");
}

void test_cost() {
    write_file("cycle.txt", "tournament 3\n0 1\n1 2\n2 0\n");
    const CmdResult r = run(fast + " cost --in " + path("cycle.txt") + " --order 0,1,2");
    expect(r.exit_code == 0, "cost exits 0");
    expect(r.out == "cost 1\nedge 2 0\n", "cost prints the count and the backward edge");

    const CmdResult other = run(fast + " cost --in " + path("cycle.txt") + " --order 1,2,0");
    expect(other.out == "cost 1\nedge 0 1\n", "cost tracks the ordering");

    expect(run(fast + " cost --in " + path("cycle.txt") + " --order 0,1 2>/dev/null").exit_code == 1,
           "cost rejects a non-permutation order");
    expect(run(fast + " cost --in " + path("cycle.txt") + " 2>/dev/null").exit_code == 2,
           "cost requires --order");
}

void test_experiment() {
    const std::string flags = " experiment --algos insertion,bubble --n 7 --trials 40 --seed 12";
    const CmdResult r = run(fast + flags);
    expect(r.exit_code == 0, "experiment exits 0");
    expect(contains(r.out, "algo,n,model,p,trials,seed,mean_cost,stderr,min,max,mean_ratio"),
           "experiment prints the CSV header");
    expect(contains(r.out, "insertion,7,uniform,,40,12,"), "experiment prints one row per algorithm");
    expect(run(fast + flags).out == r.out, "experiment output is reproducible");

    write_file("exp.json",
               R"({"algos": ["selection"], "n": 6, "model": "noisy", "p": 0.2, "trials": 25, "seed": 9})");
    const CmdResult from_config = run(fast + " experiment --config " + path("exp.json"));
    expect(from_config.exit_code == 0, "experiment accepts a JSON config");
    expect(contains(from_config.out, "selection,6,noisy,0.2,25,9,"),
           "experiment config drives the CSV row");

    expect(run(fast + " experiment --config " + path("exp.json") + " --n 9 2>/dev/null").exit_code ==
               2,
           "experiment refuses --config mixed with inline flags");

    const CmdResult ratios =
        run(fast + " experiment --algos exact --n 6 --trials 10 --seed 2 --ratios");
    expect(ratios.exit_code == 0, "experiment computes ratio columns on request");
    expect(!contains(ratios.out, ",\n") || contains(ratios.out, "exact,6"),
           "ratio rows carry the exact baseline");

    const CmdResult out_file = run(fast + flags + " --out " + path("exp.csv"));
    expect(out_file.exit_code == 0 && out_file.out.empty(), "experiment --out writes no stdout");
    std::ifstream csv(path("exp.csv"));
    std::string first_line;
    std::getline(csv, first_line);
    expect(first_line == "algo,n,model,p,trials,seed,mean_cost,stderr,min,max,mean_ratio",
           "experiment --out writes the CSV file");
}

void test_verify() {
    const CmdResult one = run(fast + " verify --theorem 1 --nmax 5");
    expect(one.exit_code == 0, "verify theorem 1 exits 0");
    expect(contains(one.out, "n=3 formula 1/4 (0.25) oracle 1/4 (0.25) ok"),
           "verify theorem 1 prints the n=3 row");

    const CmdResult two = run(fast + " verify --theorem 2 --nmax 2");
    expect(two.exit_code == 0, "verify theorem 2 exits 0");
    expect(contains(two.out, "i=1 j=1 formula 1 (1) oracle 1 (1) ok"),
           "verify theorem 2 prints the head pair");

    const CmdResult three = run(fast + " verify --theorem 3 --nmax 2");
    expect(three.exit_code == 0, "verify theorem 3 exits 0");
    expect(contains(three.out, "identity backward(i,j) == (1 - compare(i,j))/2"),
           "verify theorem 3 checks the identity");

    expect(run(fast + " verify --theorem 4 2>/dev/null").exit_code == 2,
           "verify rejects unknown theorem numbers");
    expect(run(fast + " verify --theorem 1 --nmax 40 2>/dev/null").exit_code == 1,
           "verify rejects an out-of-range bound");
}

void test_formulas() {
    const CmdResult bk = run(fast + " formulas --table bk --max 4");
    expect(bk.exit_code == 0, "formulas exits 0");
    expect(contains(bk.out, "k=3 1/4 (0.25)") && contains(bk.out, "k=4 5/8 (0.625)"),
           "formulas bk prints exact stage means");

    const CmdResult total = run(fast + " formulas --table total --max 5");
    expect(contains(total.out, "n=5 31/16 (1.9375)"), "formulas total prints exact totals");

    const CmdResult h = run(fast + " formulas --table h --max 3");
    expect(contains(h.out, "i=2 j=3 3/8 (0.375)"), "formulas h prints comparison probabilities");

    const CmdResult p = run(fast + " formulas --table p --max 2");
    expect(contains(p.out, "i=1 j=2 1/4 (0.25)"), "formulas p prints backward probabilities");

    expect(run(fast + " formulas --table nope --max 3 2>/dev/null").exit_code == 2,
           "formulas rejects unknown tables");
}

void test_aggregate() {
    write_file("ballots.txt", "alice bob carol\nbob carol alice\nalice carol bob\n");
    const CmdResult r = run(fast + " aggregate --ballots " + path("ballots.txt") + " --algo exact");
    expect(r.exit_code == 0, "aggregate exits 0");
    expect(contains(r.out, "alice bob carol"), "aggregate prints the consensus ranking");
    expect(contains(r.out, "# majority_backward_cost 0"), "aggregate prints the majority cost");
    expect(contains(r.out, "# total_kendall_tau 3"), "aggregate prints the total tau");

    write_file("tied.txt", "a b\nb a\n");
    expect(run(fast + " aggregate --ballots " + path("tied.txt") + " 2>/dev/null").exit_code == 1,
           "aggregate surfaces majority ties as validation errors");
    const CmdResult lex =
        run(fast + " aggregate --ballots " + path("tied.txt") + " --ties lex --algo exact");
    expect(lex.exit_code == 0 && contains(lex.out, "a b"), "lex tie rule favors the smaller name");

    expect(run(fast + " aggregate --algo exact 2>/dev/null").exit_code == 2,
           "aggregate requires --ballots");
}

void test_seed_env() {
    const CmdResult env = run("FAST_SEED=42 " + fast + " gen --n 5 --model uniform");
    const CmdResult flag = run(fast + " gen --n 5 --model uniform --seed 42");
    expect(env.out == flag.out, "FAST_SEED supplies the default seed");

    const CmdResult overridden = run("FAST_SEED=42 " + fast + " gen --n 5 --model uniform --seed 1");
    const CmdResult direct = run(fast + " gen --n 5 --model uniform --seed 1");
    expect(overridden.out == direct.out, "--seed overrides FAST_SEED");
}

void test_usage() {
    expect(run(fast + " 2>/dev/null").exit_code == 2, "bare invocation is a usage error");
    expect(run(fast + " frobnicate 2>/dev/null").exit_code == 2, "unknown subcommand exits 2");
    expect(run(fast + " --help >/dev/null 2>&1").exit_code == 0, "--help exits 0");
    expect(run(fast + " solve --help >/dev/null 2>&1").exit_code == 0, "subcommand --help exits 0");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-fast-binary>\n";
        return 2;
    }
    fast = argv[1];

    char tmpl[] = "/tmp/fast_cli_test_XXXXXX";
    if (!mkdtemp(tmpl)) {
        std::cerr << "cannot create scratch directory\n";
        return 2;
    }
    work_dir = tmpl;

    test_gen();
    test_solve();
    test_cost();
    test_experiment();
    test_verify();
    test_formulas();
    test_aggregate();
    test_seed_env();
    test_usage();

    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << g_failures << " cli check(s) failed\n";
    return 1;
}
