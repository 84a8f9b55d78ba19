#pragma once

// Per-prime step shared by the serial and OpenMP range verifiers.

#include "fiblucas/theorem.hpp"

namespace fiblucas::detail {

inline void inspect_prime(std::uint64_t p, bool keep_witnesses, VerificationReport& out) {
    if (p == 2) {
        out.exceptions_seen.push_back(p);
        return;
    }
    if (p == 5) {
        out.exceptions_seen.push_back(p);
        // 5 must divide neither F_2 nor F_3
        auto w = exception_witness(5);
        if (w.residue_lo == 0 || w.residue_hi == 0) {
            out.counterexamples.push_back({std::move(w), "5 divides F_2 * F_3"});
        }
        return;
    }

    ++out.primes_checked;
    auto eval = evaluate_witness(classify_prime(p));
    if (!eval.ok()) {
        out.counterexamples.push_back({std::move(eval.witness), std::move(eval.violation)});
        return;
    }
    const auto& w = eval.witness;
    const bool lo = *w.divisible_index == w.index_lo;
    if (w.product_kind == ProductKind::FibonacciProduct) {
        ++(lo ? out.count_fib_lo : out.count_fib_hi);
    } else {
        ++(lo ? out.count_lucas_lo : out.count_lucas_hi);
    }
    if (keep_witnesses) out.witnesses.push_back(w);
}

}  // namespace fiblucas::detail
