// fiblucas: command-line front end.
//
//   fiblucas verify --from P --to Q [--jobs N] [--format F] [--witnesses]
//   fiblucas witness P [--format F]
//   fiblucas classify P [--format F]
//   fiblucas identities [--max-n N] [--max-m M] [--max-r R] [--max-p P] [--jobs N] [--format F]
//   fiblucas eval fib|lucas N [--mod M] [--format F]
//
// Exit status: 0 success, 1 counterexample or identity failure, 2 usage error.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "fiblucas/arith.hpp"
#include "fiblucas/identities.hpp"
#include "fiblucas/primes.hpp"
#include "fiblucas/report.hpp"
#include "fiblucas/theorem.hpp"

namespace {

using namespace fiblucas;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_word(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw UsageError(what + " must be a nonnegative integer, got '" + text + "'");
    }
    if (value > kMaxWord) throw UsageError(what + " exceeds 2^63 - 1");
    return value;
}

OutputFormat parse_format(const std::string& name) {
    if (auto f = parse_output_format(name)) return *f;
    throw UsageError("unknown format '" + name + "' (expected human, csv or json)");
}

std::uint64_t exact_bound_from_env() {
    const char* env = std::getenv("FIBLUCAS_MAX_EXACT_INDEX");
    if (env == nullptr || *env == '\0') return kDefaultMaxExactIndex;
    return parse_word(env, "FIBLUCAS_MAX_EXACT_INDEX");
}

unsigned capped_jobs(std::uint64_t requested) {
    if (requested < 1) throw UsageError("--jobs must be at least 1");
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(requested, hw));
}

void report_elapsed(std::chrono::nanoseconds ns) {
    std::cerr << "elapsed: " << std::chrono::duration<double>(ns).count() << " s\n";
}

struct Options {
    std::string format = "human";
    std::string from, to, prime, n, modulus, sequence;
    std::uint64_t jobs = 1;
    bool witnesses = false;
    std::uint64_t max_n = 100, max_r = 100, max_p = 0;
    std::optional<std::uint64_t> max_m;
};

int run_verify(const Options& o) {
    const std::uint64_t lo = parse_word(o.from, "--from");
    const std::uint64_t hi = parse_word(o.to, "--to");
    if (lo < 2 || lo > hi) throw UsageError("require 2 <= --from <= --to");
    const auto report = verify_range(PrimeRange{lo, hi}, capped_jobs(o.jobs), o.witnesses);
    std::cout << render_verification(report, parse_format(o.format));
    report_elapsed(report.elapsed);
    return report.counterexamples.empty() ? kExitOk : kExitFailure;
}

int run_witness(const Options& o) {
    const auto format = parse_format(o.format);
    const std::uint64_t p = parse_word(o.prime, "p");
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (p == 2 || p == 5) {
        std::cout << render_witness(exception_witness(p), format);
        return kExitOk;
    }
    try {
        std::cout << render_witness(theorem_witness(p), format);
    } catch (const TheoremViolation& e) {
        std::cerr << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int run_classify(const Options& o) {
    const auto format = parse_format(o.format);
    const std::uint64_t p = parse_word(o.prime, "p");
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    const PrimeClass cls = classify_prime(p);
    std::optional<ApparitionSide> side;
    if (p != 2 && p != 5) {
        try {
            side = expected_apparition_side(p);
        } catch (const TheoremViolation& e) {
            std::cerr << e.what() << '\n';
            return kExitFailure;
        }
    }
    std::cout << render_classification(cls, side, format);
    return kExitOk;
}

int run_identities(const Options& o) {
    const auto format = parse_format(o.format);
    const std::uint64_t bound = exact_bound_from_env();
    IdentityGrid grid{o.max_n, o.max_m.value_or(o.max_n), o.max_r, o.max_p};
    try {
        validate_grid(grid, bound);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    const auto start = std::chrono::steady_clock::now();
    const auto report = sweep_identities(grid, capped_jobs(o.jobs), bound);
    std::cout << render_identities(report, grid, format);
    report_elapsed(std::chrono::steady_clock::now() - start);
    return report.all_passed() ? kExitOk : kExitFailure;
}

int run_eval(const Options& o) {
    const auto format = parse_format(o.format);
    const SequenceKind kind =
        o.sequence == "fib" ? SequenceKind::Fibonacci : SequenceKind::Lucas;
    const Index n = parse_word(o.n, "n");
    if (!o.modulus.empty()) {
        const std::uint64_t m = parse_word(o.modulus, "--mod");
        if (m < 1) throw UsageError("--mod must be at least 1");
        const Modulus mod{m};
        const Residue v = kind == SequenceKind::Fibonacci ? fib_mod(n, mod) : lucas_mod(n, mod);
        std::cout << render_value(kind, n, m, Natural{v}, format);
        return kExitOk;
    }
    const std::uint64_t bound = exact_bound_from_env();
    if (n > bound) {
        throw UsageError("n = " + std::to_string(n) + " exceeds the exact bound " +
                         std::to_string(bound) + " (set FIBLUCAS_MAX_EXACT_INDEX or use --mod)");
    }
    const Natural v = kind == SequenceKind::Fibonacci ? fib(n, bound) : lucas(n, bound);
    std::cout << render_value(kind, n, std::nullopt, v, format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibonacci/Lucas consecutive-product divisibility toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "human, csv or json")->capture_default_str();
    };

    auto* verify = app.add_subcommand("verify", "check every prime in a range");
    verify->add_option("--from", o.from, "lower bound (>= 2)")->required();
    verify->add_option("--to", o.to, "upper bound (inclusive)")->required();
    verify->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    verify->add_flag("--witnesses", o.witnesses, "include one row per prime");
    add_format(verify);

    auto* witness = app.add_subcommand("witness", "divisibility witness for one prime");
    witness->add_option("p", o.prime, "prime")->required();
    add_format(witness);

    auto* classify = app.add_subcommand("classify", "form, residue class and apparition side");
    classify->add_option("p", o.prime, "prime")->required();
    add_format(classify);

    auto* identities = app.add_subcommand("identities", "exact identity sweep");
    identities->add_option("--max-n", o.max_n)->capture_default_str();
    identities->add_option("--max-m", o.max_m, "defaults to --max-n");
    identities->add_option("--max-r", o.max_r)->capture_default_str();
    identities->add_option("--max-p", o.max_p, "Lucas-Fermat over primes <= P; 0 skips")
        ->capture_default_str();
    identities->add_option("--jobs", o.jobs)->capture_default_str();
    add_format(identities);

    auto* eval = app.add_subcommand("eval", "print F_n or L_n");
    eval->add_option("sequence", o.sequence, "fib or lucas")
        ->required()
        ->check(CLI::IsMember({"fib", "lucas"}));
    eval->add_option("n", o.n, "index")->required();
    eval->add_option("--mod", o.modulus, "reduce modulo m");
    add_format(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return run_verify(o);
        if (*witness) return run_witness(o);
        if (*classify) return run_classify(o);
        if (*identities) return run_identities(o);
        if (*eval) return run_eval(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
