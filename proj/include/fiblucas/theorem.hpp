#pragma once

// Consecutive-product divisibility: every prime p = 4r+1 other than 5
// divides F_{2r} F_{2r+1}, and every prime p = 4r+3 divides
// L_{2r+1} L_{2r+2}. Exactly one factor is divisible, and which one is
// fixed by p mod 5.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiblucas/arith.hpp"
#include "fiblucas/primes.hpp"

namespace fiblucas {

enum class PrimeForm { FourRPlus1, FourRPlus3, SpecialTwo, SpecialFive };
enum class FiveResidue { PlusMinusOne, PlusMinusTwo, Zero, NotApplicable };
enum class ProductKind { FibonacciProduct, LucasProduct, ExceptionFive, ExceptionTwo };
enum class ApparitionSide { DividesFpMinus1, DividesFpPlus1 };

std::string_view to_string(PrimeForm f);
std::string_view to_string(FiveResidue f);
std::string_view to_string(ProductKind k);
std::string_view to_string(ApparitionSide s);

struct PrimeClass {
    std::uint64_t p = 0;
    PrimeForm form = PrimeForm::SpecialTwo;
    std::optional<Index> r;  ///< set for the two 4r+k forms
    FiveResidue five_residue = FiveResidue::NotApplicable;

    friend bool operator==(const PrimeClass&, const PrimeClass&) = default;
};

struct DivisibilityWitness {
    PrimeClass prime_class;
    ProductKind product_kind = ProductKind::ExceptionTwo;
    Index index_lo = 0;  ///< 2r (Fibonacci) or 2r+1 (Lucas); 2 for the p = 5 exception
    Index index_hi = 0;  ///< index_lo + 1
    std::optional<Index> divisible_index;
    Residue residue_lo = 0;
    Residue residue_hi = 0;

    friend bool operator==(const DivisibilityWitness&, const DivisibilityWitness&) = default;
};

/// Throws NotPrime.
PrimeClass classify_prime(std::uint64_t p);

/// Residues of the predicted product for a 4r+1 / 4r+3 class, together with
/// a description of any way they contradict the theorem (empty when fine).
struct WitnessEvaluation {
    DivisibilityWitness witness;
    std::string violation;

    bool ok() const { return violation.empty(); }
};

WitnessEvaluation evaluate_witness(const PrimeClass& cls);

/// Throws NotPrime, ExceptionPrime for p in {2, 5}, and TheoremViolation.
DivisibilityWitness theorem_witness(std::uint64_t p);

/// The exclusion record for p = 5 (F_2 F_3 mod 5) or p = 2. Throws
/// std::invalid_argument for any other p.
DivisibilityWitness exception_witness(std::uint64_t p);

/// Smallest n >= 1 with p | F_n, by scanning F_n mod p. O(p) time.
Index rank_of_apparition(std::uint64_t p);

/// Which of F_{p-1}, F_{p+1} p divides, confirmed by a modular evaluation.
/// Throws NotPrime, ExceptionPrime, TheoremViolation.
ApparitionSide expected_apparition_side(std::uint64_t p);

struct Counterexample {
    DivisibilityWitness witness;
    std::string reason;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    explicit VerificationReport(PrimeRange r) : range(r) {}

    PrimeRange range;
    std::uint64_t primes_checked = 0;   ///< odd primes other than 5
    std::uint64_t count_fib_lo = 0;     ///< divides F_{2r}
    std::uint64_t count_fib_hi = 0;     ///< divides F_{2r+1}
    std::uint64_t count_lucas_lo = 0;   ///< divides L_{2r+1}
    std::uint64_t count_lucas_hi = 0;   ///< divides L_{2r+2}
    std::vector<std::uint64_t> exceptions_seen;
    std::vector<Counterexample> counterexamples;
    std::vector<DivisibilityWitness> witnesses;  ///< filled only when requested
    std::chrono::nanoseconds elapsed{0};

    std::uint64_t witness_total() const {
        return count_fib_lo + count_fib_hi + count_lucas_lo + count_lucas_hi;
    }

    /// Associative and commutative: tallies add, the range becomes the hull,
    /// lists are concatenated and kept sorted by p.
    void merge(VerificationReport other);

    /// Equality of everything except elapsed.
    bool same_content(const VerificationReport& other) const;
};

/// OpenMP kernel over disjoint sub-ranges. Never throws on a violation; the
/// failures land in counterexamples. Content is independent of parallelism.
VerificationReport verify_range(PrimeRange range, unsigned parallelism,
                                bool keep_witnesses = false);

/// Single-threaded reference for verify_range.
VerificationReport verify_range_serial(PrimeRange range, bool keep_witnesses = false);

}  // namespace fiblucas
