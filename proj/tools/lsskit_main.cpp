// Command-line front end: solve single inputs, cross-verify the solver
// against the reference oracles on random corpora, benchmark both, and
// generate reproducible random inputs.
//
// Exit codes: 0 ok, 2 usage or I/O error, 3 verification mismatch.

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsskit/lss.hpp"
#include "lsskit/oracles.hpp"
#include "lsskit/rng.hpp"

namespace {

using lsskit::LssResult;
using lsskit::SplitMix64;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::int64_t elapsed_ns_since(Clock::time_point start) {
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        Clock::now() - start)
                        .count();
    return std::max<std::int64_t>(ns, 1);
}

std::uint64_t default_seed() {
    const char* env = std::getenv("LSSKIT_SEED");
    if (!env || !*env) return 0;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), value);
    if (ec != std::errc{} || *ptr != '\0') {
        std::cerr << "lsskit: LSSKIT_SEED is not an unsigned integer\n";
        std::exit(kExitUsage);
    }
    return value;
}

bool read_input(const std::string& path, std::string& out) {
    out.clear();
    try {
        std::istream* in = &std::cin;
        std::ifstream file;
        if (!path.empty() && path != "-") {
            file.open(path, std::ios::binary);
            if (!file) return false;
            in = &file;
        }
        char buffer[1 << 16];
        do {
            in->read(buffer, sizeof buffer);
            out.append(buffer, static_cast<std::size_t>(in->gcount()));
        } while (*in);
        return !in->bad();  // bad() also covers reads that hit EISDIR etc.
    } catch (const std::exception&) {
        return false;
    }
}

void normalize_input(std::string& s, bool strip_whitespace) {
    if (strip_whitespace) {
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](unsigned char c) { return std::isspace(c) != 0; }),
                s.end());
        return;
    }
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

unsigned ceil_log2(std::uint64_t n) {
    return n <= 2 ? 1u : static_cast<unsigned>(std::bit_width(n - 1));
}

// Escapes a reproducer string so it survives terminals and shells.
std::string printable(std::string_view s) {
    std::string out;
    for (const char c : s) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) {
            out.push_back(c);
        } else {
            char buf[5];
            std::snprintf(buf, sizeof buf, "\\x%02x", u);
            out += buf;
        }
    }
    return out;
}

struct SolveOptions {
    std::string input_path;
    std::string algorithm = "auto";
    bool json = false;
    bool length_only = false;
    bool curve = false;
    bool strip_whitespace = false;
    double auto_threshold = 4.0;
};

struct SolveReport {
    std::string algorithm;
    LssResult result;
    std::vector<std::uint32_t> curve;
    std::int64_t elapsed_ns = 0;
};

LssResult dp_solve(std::string_view s,
                   const lsskit::oracles::PerPartitionResult& oracle) {
    LssResult result;
    result.r = oracle.r;
    if (oracle.r == 0) return result;
    result.best_p = oracle.best_p;
    const std::size_t p = oracle.best_p;
    const lsskit::oracles::LcsWitness w =
        lsskit::oracles::lcs_dp(s.substr(0, p), s.substr(p));
    result.first_half = w.a_positions;
    result.second_half.clear();
    for (const std::uint32_t j : w.b_positions)
        result.second_half.push_back(j + static_cast<std::uint32_t>(p));
    result.square = w.subsequence + w.subsequence;
    result.r = static_cast<std::uint32_t>(2 * w.length);
    return result;
}

int run_solve(const SolveOptions& opt) {
    std::string s;
    if (!read_input(opt.input_path, s)) {
        std::cerr << "lsskit: cannot read input\n";
        return kExitUsage;
    }
    normalize_input(s, opt.strip_whitespace);

    const std::size_t n = s.size();
    const std::uint64_t m_total = lsskit::build_match_index(s).m_total;

    std::string algorithm = opt.algorithm;
    if (algorithm == "auto") {
        // The sweep solver wins unless the instance is so match-dense that
        // its M log n term dwarfs the quadratic DP.
        const bool dense =
            n >= 2 && static_cast<long double>(m_total) * ceil_log2(n) >
                          opt.auto_threshold * static_cast<long double>(n) * n;
        algorithm = dense ? "dp" : "lis";
    }
    if (algorithm == "exhaustive" && n > 20) {
        std::cerr << "lsskit: exhaustive algorithm is limited to 20 symbols\n";
        return kExitUsage;
    }

    SolveReport report;
    report.algorithm = algorithm;
    try {
        const auto start = Clock::now();
        if (algorithm == "lis") {
            if (n <= 1 || lsskit::all_distinct(s)) {
                report.result = LssResult{};
                if (opt.curve && n >= 2) report.curve.assign(n - 1, 0);
            } else {
                const lsskit::SweepTrace trace = lsskit::sweep(s);
                if (opt.curve) report.curve = trace.ell_per_p;
                if (trace.r != 0 && !opt.length_only) {
                    report.result = lsskit::reconstruct(s, trace.best_p, trace.r);
                } else {
                    report.result.r = trace.r;
                    if (trace.r != 0) report.result.best_p = trace.best_p;
                }
            }
        } else if (algorithm == "dp") {
            const auto oracle = lsskit::oracles::lss_per_partition(s);
            if (opt.curve) report.curve = oracle.ell_per_p;
            if (oracle.r != 0 && !opt.length_only) {
                report.result = dp_solve(s, oracle);
            } else {
                report.result.r = oracle.r;
                if (oracle.r != 0) report.result.best_p = oracle.best_p;
            }
        } else {  // exhaustive
            const auto witness = lsskit::oracles::lss_exhaustive_witness(s);
            report.result.r = witness.r;
            if (witness.r != 0) {
                const std::size_t half = witness.r / 2;
                report.result.first_half.assign(witness.positions.begin(),
                                                witness.positions.begin() + half);
                report.result.second_half.assign(witness.positions.begin() + half,
                                                 witness.positions.end());
                report.result.best_p = report.result.first_half.back();
                for (const std::uint32_t i : witness.positions)
                    report.result.square.push_back(s[i - 1]);
            }
            if (opt.curve) report.curve = lsskit::oracles::lss_per_partition(s).ell_per_p;
        }
        report.elapsed_ns = elapsed_ns_since(start);
    } catch (const std::invalid_argument& e) {
        std::cerr << "lsskit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "lsskit: internal verification failure: " << e.what() << "\n";
        return kExitMismatch;
    }

    if (!opt.length_only) {
        try {
            lsskit::check_witness(s, report.result);
        } catch (const std::logic_error& e) {
            std::cerr << "lsskit: internal verification failure: " << e.what() << "\n";
            return kExitMismatch;
        }
    }

    if (opt.json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["M"] = m_total;
        j["r"] = report.result.r;
        if (report.result.best_p) {
            j["p"] = *report.result.best_p;
        } else {
            j["p"] = nullptr;
        }
        if (opt.length_only) {
            j["square"] = nullptr;
            j["first_half"] = nullptr;
            j["second_half"] = nullptr;
        } else {
            j["square"] = report.result.square;
            j["first_half"] = report.result.first_half;
            j["second_half"] = report.result.second_half;
        }
        j["algorithm"] = report.algorithm;
        j["elapsed_ns"] = report.elapsed_ns;
        if (opt.curve) j["curve"] = report.curve;
        std::cout << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
                  << "\n";
    } else {
        std::cout << "n=" << n << " M=" << m_total << " r=" << report.result.r
                  << " p=";
        if (report.result.best_p) {
            std::cout << *report.result.best_p;
        } else {
            std::cout << "none";
        }
        std::cout << " algorithm=" << report.algorithm
                  << " elapsed_ns=" << report.elapsed_ns << "\n";
        if (!opt.length_only) {
            std::cout << "square=" << report.result.square << "\n";
            std::cout << "first_half=";
            for (std::size_t i = 0; i < report.result.first_half.size(); ++i)
                std::cout << (i ? " " : "") << report.result.first_half[i];
            std::cout << "\nsecond_half=";
            for (std::size_t i = 0; i < report.result.second_half.size(); ++i)
                std::cout << (i ? " " : "") << report.result.second_half[i];
            std::cout << "\n";
        }
        if (opt.curve) {
            std::cout << "curve=";
            for (std::size_t i = 0; i < report.curve.size(); ++i)
                std::cout << (i ? " " : "") << report.curve[i];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

struct VerifyOptions {
    std::uint64_t trials = 1000;
    std::uint64_t n_max = 64;
    std::vector<unsigned> sigmas = {1, 2, 4, 26};
    std::uint64_t seed = 0;
    bool inject_fault = false;
};

int run_verify(const VerifyOptions& opt) {
    SplitMix64 master(opt.seed);
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
        const unsigned sigma = opt.sigmas[trial % opt.sigmas.size()];
        const std::size_t n = master.below(opt.n_max + 1);
        const std::string s = lsskit::random_string(master, n, sigma);

        const auto fail = [&](const std::string& what) {
            std::cerr << "verification mismatch: " << what << "\n"
                      << "reproducer: trial=" << trial << " seed=" << opt.seed
                      << " n=" << n << " sigma=" << sigma << " s=" << printable(s)
                      << "\n";
            return kExitMismatch;
        };

        try {
            const LssResult res = lsskit::lss(s);
            lsskit::check_witness(s, res);

            std::uint32_t observed_r = res.r;
            if (opt.inject_fault && trial == 0) observed_r += 2;

            const auto oracle = lsskit::oracles::lss_per_partition(s);
            if (observed_r != oracle.r)
                return fail("solver r disagrees with per-partition oracle");
            if (res.r > 0 && *res.best_p != oracle.best_p)
                return fail("solver best_p disagrees with per-partition oracle");
            if (n <= 14 && res.r != lsskit::oracles::lss_exhaustive(s))
                return fail("solver r disagrees with exhaustive oracle");

            const std::string reversed(s.rbegin(), s.rend());
            if (lsskit::lss(reversed).r != res.r)
                return fail("r not invariant under reversal");

            if (n >= 2) {
                const bool check_each_state = n <= 128;
                const lsskit::SweepTrace trace = lsskit::sweep(
                    s, [&](std::size_t, const lsskit::LisStructure& st) {
                        if (check_each_state) st.check_invariants();
                    });
                if (trace.ell_per_p != oracle.ell_per_p)
                    return fail("per-partition curve mismatch");
                const std::uint64_t m = lsskit::build_match_index(s).m_total;
                if (trace.insertions != m)
                    return fail("insertion count differs from matching pairs");
                if (trace.batched_deletions > std::min<std::uint64_t>(n, m))
                    return fail("batched deletion count exceeds min(n, M)");
            }
        } catch (const std::exception& e) {
            return fail(std::string("exception: ") + e.what());
        }
    }
    std::cout << opt.trials << "/" << opt.trials << " ok\n";
    return kExitOk;
}

struct BenchOptions {
    std::vector<std::uint64_t> sizes = {256, 512, 1024};
    std::vector<unsigned> sigmas = {4, 64};
    unsigned reps = 3;
    std::uint64_t seed = 0;
    std::vector<std::string> algorithms = {"lis", "dp"};
};

int run_bench(const BenchOptions& opt) {
    std::vector<std::uint64_t> sizes = opt.sizes;
    std::vector<unsigned> sigmas = opt.sigmas;
    std::sort(sizes.begin(), sizes.end());
    std::sort(sigmas.begin(), sigmas.end());

    std::cout << "n,sigma,seed,rep,algorithm,M,r,elapsed_ns\n";
    for (const std::uint64_t n : sizes) {
        for (const unsigned sigma : sigmas) {
            for (unsigned rep = 0; rep < opt.reps; ++rep) {
                SplitMix64 stream(lsskit::mix_seed(
                    lsskit::mix_seed(lsskit::mix_seed(opt.seed, n), sigma), rep));
                const std::string s = lsskit::random_string(stream, n, sigma);
                const std::uint64_t m_total = lsskit::build_match_index(s).m_total;
                for (const std::string& algorithm : opt.algorithms) {
                    std::uint32_t r = 0;
                    const auto start = Clock::now();
                    if (algorithm == "lis") {
                        r = lsskit::lss(s).r;
                    } else {
                        r = lsskit::oracles::lss_per_partition(s).r;
                    }
                    const std::int64_t ns = elapsed_ns_since(start);
                    std::cout << n << "," << sigma << "," << opt.seed << "," << rep
                              << "," << algorithm << "," << m_total << "," << r
                              << "," << ns << "\n";
                }
            }
        }
    }
    return kExitOk;
}

struct GenOptions {
    std::uint64_t n = 0;
    unsigned sigma = 26;
    std::uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
    SplitMix64 rng(opt.seed);
    const std::string s = lsskit::random_string(rng, opt.n, opt.sigma);
    std::fwrite(s.data(), 1, s.size(), stdout);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest square subsequence toolkit"};
    app.require_subcommand(1);

    const std::uint64_t seed_default = default_seed();

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand(
        "solve", "compute a longest square subsequence of one input");
    solve->add_option("input", solve_opt.input_path,
                      "input file ('-' or absent reads stdin)");
    solve->add_flag("--json", solve_opt.json, "emit a JSON report");
    solve->add_flag("--length-only", solve_opt.length_only, "omit the witness");
    solve->add_flag("--curve", solve_opt.curve,
                    "include the per-partition LCS curve");
    solve->add_flag("--strip-whitespace", solve_opt.strip_whitespace,
                    "drop all whitespace bytes from the input");
    solve
        ->add_option("--algorithm", solve_opt.algorithm,
                     "lis | dp | exhaustive | auto")
        ->check(CLI::IsMember({"lis", "dp", "exhaustive", "auto"}));
    solve->add_option("--auto-threshold", solve_opt.auto_threshold,
                      "density factor above which auto picks dp");

    VerifyOptions verify_opt;
    verify_opt.seed = seed_default;
    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check solver and oracles on random inputs");
    verify->add_option("--trials", verify_opt.trials, "number of random trials")
        ->check(CLI::PositiveNumber);
    verify->add_option("--n-max", verify_opt.n_max, "maximum string length")
        ->check(CLI::PositiveNumber);
    verify->add_option("--sigma", verify_opt.sigmas, "alphabet sizes to cycle over")
        ->delimiter(',')
        ->check(CLI::Range(1, 256));
    verify->add_option("--seed", verify_opt.seed, "base seed");
    verify
        ->add_flag("--inject-fault", verify_opt.inject_fault,
                   "corrupt the first comparison (exercises the failure path)")
        ->group("");  // hidden

    BenchOptions bench_opt;
    bench_opt.seed = seed_default;
    CLI::App* bench = app.add_subcommand(
        "bench", "time solver and DP oracle on random inputs, CSV output");
    bench->add_option("--sizes", bench_opt.sizes, "input lengths")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--sigma", bench_opt.sigmas, "alphabet sizes")
        ->delimiter(',')
        ->check(CLI::Range(1, 256));
    bench->add_option("--reps", bench_opt.reps, "repetitions per configuration")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_opt.seed, "base seed");
    bench->add_option("--algorithms", bench_opt.algorithms, "subset of lis,dp")
        ->delimiter(',')
        ->check(CLI::IsMember({"lis", "dp"}));

    GenOptions gen_opt;
    gen_opt.seed = seed_default;
    CLI::App* gen = app.add_subcommand("gen", "write a random string to stdout");
    gen->add_option("--n", gen_opt.n, "length")->required();
    gen->add_option("--sigma", gen_opt.sigma, "alphabet size")
        ->check(CLI::Range(1, 256));
    gen->add_option("--seed", gen_opt.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (solve->parsed()) return run_solve(solve_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (bench->parsed()) return run_bench(bench_opt);
    if (gen->parsed()) return run_gen(gen_opt);
    return kExitUsage;
}
