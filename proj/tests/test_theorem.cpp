#include <gtest/gtest.h>

#include <numeric>

#include "fiblucas/theorem.hpp"
#include "oracles.hpp"

using namespace fiblucas;

TEST(ClassifyPrime, Examples) {
    const auto c13 = classify_prime(13);
    EXPECT_EQ(c13.form, PrimeForm::FourRPlus1);
    EXPECT_EQ(c13.r, 3u);
    EXPECT_EQ(c13.five_residue, FiveResidue::PlusMinusTwo);

    const auto c5 = classify_prime(5);
    EXPECT_EQ(c5.form, PrimeForm::SpecialFive);
    EXPECT_EQ(c5.five_residue, FiveResidue::Zero);
    EXPECT_FALSE(c5.r.has_value());

    const auto c3 = classify_prime(3);
    EXPECT_EQ(c3.form, PrimeForm::FourRPlus3);
    EXPECT_EQ(c3.r, 0u);
    EXPECT_EQ(c3.five_residue, FiveResidue::PlusMinusTwo);

    const auto c2 = classify_prime(2);
    EXPECT_EQ(c2.form, PrimeForm::SpecialTwo);
    EXPECT_EQ(c2.five_residue, FiveResidue::NotApplicable);

    const auto c97 = classify_prime(97);
    EXPECT_EQ(c97.form, PrimeForm::FourRPlus1);
    EXPECT_EQ(c97.r, 24u);
    EXPECT_EQ(c97.five_residue, FiveResidue::PlusMinusTwo);

    EXPECT_THROW(classify_prime(15), NotPrime);
    EXPECT_THROW(classify_prime(1), NotPrime);
}

TEST(ClassifyPrime, InvariantsOverRange) {
    for (std::uint64_t p : collect_primes({2, 50'000})) {
        const auto c = classify_prime(p);
        switch (c.form) {
            case PrimeForm::FourRPlus1:
                ASSERT_EQ(p, 4 * *c.r + 1);
                ASSERT_GE(*c.r, 1u);
                ASSERT_NE(p, 5u);
                break;
            case PrimeForm::FourRPlus3: ASSERT_EQ(p, 4 * *c.r + 3); break;
            case PrimeForm::SpecialTwo: ASSERT_EQ(p, 2u); break;
            case PrimeForm::SpecialFive: ASSERT_EQ(p, 5u); break;
        }
        const auto m5 = p % 5;
        const FiveResidue expected = p == 2   ? FiveResidue::NotApplicable
                                     : p == 5 ? FiveResidue::Zero
                                     : (m5 == 1 || m5 == 4) ? FiveResidue::PlusMinusOne
                                                            : FiveResidue::PlusMinusTwo;
        ASSERT_EQ(c.five_residue, expected) << p;
    }
}

TEST(TheoremWitness, Examples) {
    const auto w29 = theorem_witness(29);
    EXPECT_EQ(w29.product_kind, ProductKind::FibonacciProduct);
    EXPECT_EQ(w29.index_lo, 14u);
    EXPECT_EQ(w29.index_hi, 15u);
    EXPECT_EQ(w29.divisible_index, 14u);
    EXPECT_EQ(w29.residue_lo, 0u);
    EXPECT_NE(w29.residue_hi, 0u);

    const auto w11 = theorem_witness(11);
    EXPECT_EQ(w11.product_kind, ProductKind::LucasProduct);
    EXPECT_EQ(w11.index_lo, 5u);
    EXPECT_EQ(w11.index_hi, 6u);
    EXPECT_EQ(w11.divisible_index, 5u);
    EXPECT_EQ(w11.residue_hi, 18u % 11);

    const auto w7 = theorem_witness(7);
    EXPECT_EQ(w7.product_kind, ProductKind::LucasProduct);
    EXPECT_EQ(w7.index_lo, 3u);
    EXPECT_EQ(w7.index_hi, 4u);
    EXPECT_EQ(w7.divisible_index, 4u);
    EXPECT_EQ(w7.residue_lo, 4u);  // L_3 = 4

    const auto w13 = theorem_witness(13);
    EXPECT_EQ(w13.product_kind, ProductKind::FibonacciProduct);
    EXPECT_EQ(w13.index_lo, 6u);
    EXPECT_EQ(w13.divisible_index, 7u);
    EXPECT_EQ(w13.residue_lo, 8u);  // F_6 = 8
}

TEST(TheoremWitness, ErrorPaths) {
    EXPECT_THROW(theorem_witness(15), NotPrime);
    EXPECT_THROW(theorem_witness(5), ExceptionPrime);
    EXPECT_THROW(theorem_witness(2), ExceptionPrime);
    try {
        theorem_witness(5);
    } catch (const ExceptionPrime& e) {
        EXPECT_EQ(e.prime(), 5u);
    }
}

TEST(TheoremWitness, LargestPrimeBelowTwoTo63) {
    const std::uint64_t p = 9223372036854775783u;
    const auto w = theorem_witness(p);
    // p = 3 (mod 4), p = 3 (mod 5)
    EXPECT_EQ(w.product_kind, ProductKind::LucasProduct);
    EXPECT_EQ(w.prime_class.r, 2305843009213693945u);
    EXPECT_EQ(w.divisible_index, w.index_hi);
}

TEST(ExceptionWitness, FiveAndTwo) {
    const auto w5 = exception_witness(5);
    EXPECT_EQ(w5.product_kind, ProductKind::ExceptionFive);
    EXPECT_EQ(w5.index_lo, 2u);
    EXPECT_EQ(w5.index_hi, 3u);
    EXPECT_EQ(w5.residue_lo, 1u);
    EXPECT_EQ(w5.residue_hi, 2u);
    EXPECT_FALSE(w5.divisible_index.has_value());
    // F_2 * F_3 = 2 is not a multiple of 5
    EXPECT_NE((fib(2) * fib(3)).mod(5), 0u);
    EXPECT_EQ(lucas(5).mod(5), 1u);

    EXPECT_EQ(exception_witness(2).product_kind, ProductKind::ExceptionTwo);
    EXPECT_THROW(exception_witness(7), std::invalid_argument);
}

TEST(EvaluateWitness, RejectsSpecialClasses) {
    EXPECT_THROW(evaluate_witness(classify_prime(5)), std::invalid_argument);
    EXPECT_THROW(evaluate_witness(classify_prime(2)), std::invalid_argument);
}

TEST(EvaluateWitness, ReportsForgedViolation) {
    // A class with a wrong residue label must come back as a violation, not a witness.
    PrimeClass forged = classify_prime(29);
    forged.five_residue = FiveResidue::PlusMinusTwo;
    const auto eval = evaluate_witness(forged);
    EXPECT_FALSE(eval.ok());
    EXPECT_NE(eval.violation.find("predicts"), std::string::npos);
}

TEST(TheoremWitness, ModularResiduesMatchExactOracle) {
    const auto F = oracle::fibonacci(5010);
    const auto L = oracle::lucas(5010);
    for (std::uint64_t p : collect_primes({3, 10'000})) {
        if (p == 5) continue;
        const auto w = theorem_witness(p);
        const auto& seq = w.product_kind == ProductKind::FibonacciProduct ? F : L;
        ASSERT_EQ(w.residue_lo, seq[w.index_lo].mod(p)) << p;
        ASSERT_EQ(w.residue_hi, seq[w.index_hi].mod(p)) << p;
    }
}

TEST(TheoremWitness, ExactlyOneFactorAndPredictedSide) {
    for (std::uint64_t p : collect_primes({3, 200'000})) {
        if (p == 5) continue;
        const auto w = theorem_witness(p);
        ASSERT_NE(w.residue_lo == 0, w.residue_hi == 0) << p;
        const bool plus_minus_one = w.prime_class.five_residue == FiveResidue::PlusMinusOne;
        ASSERT_EQ(*w.divisible_index, plus_minus_one ? w.index_lo : w.index_hi) << p;
        ASSERT_EQ(w.index_hi, w.index_lo + 1);
    }
}

TEST(RankOfApparition, Examples) {
    EXPECT_EQ(rank_of_apparition(5), 5u);
    EXPECT_EQ(rank_of_apparition(11), 10u);
    EXPECT_EQ(rank_of_apparition(2), 3u);
    EXPECT_EQ(rank_of_apparition(29), 14u);
    EXPECT_EQ(rank_of_apparition(13), 7u);
    EXPECT_THROW(rank_of_apparition(9), NotPrime);
}

TEST(RankOfApparition, BruteForceOracle) {
    for (std::uint64_t p : collect_primes({2, 2000})) {
        Index n = 1;
        while (oracle::sequence_mod(0, 1, n, p) != 0) ++n;
        ASSERT_EQ(rank_of_apparition(p), n) << p;
    }
}

TEST(ExpectedApparitionSide, Examples) {
    EXPECT_EQ(expected_apparition_side(29), ApparitionSide::DividesFpMinus1);
    EXPECT_EQ(fib_mod(28, Modulus{29}), 0u);
    EXPECT_EQ(expected_apparition_side(13), ApparitionSide::DividesFpPlus1);
    EXPECT_EQ(fib_mod(14, Modulus{13}), 0u);
    EXPECT_EQ(expected_apparition_side(3), ApparitionSide::DividesFpPlus1);
    EXPECT_EQ(fib(4), Natural{3});
    EXPECT_THROW(expected_apparition_side(5), ExceptionPrime);
    EXPECT_THROW(expected_apparition_side(2), ExceptionPrime);
    EXPECT_THROW(expected_apparition_side(21), NotPrime);
}

TEST(ExpectedApparitionSide, RankDividesPredictedIndex) {
    for (std::uint64_t p : collect_primes({3, 10'000})) {
        if (p == 5) continue;
        const auto side = expected_apparition_side(p);
        const Index n = side == ApparitionSide::DividesFpMinus1 ? p - 1 : p + 1;
        ASSERT_EQ(n % rank_of_apparition(p), 0u) << p;
    }
}

TEST(VerifyRange, Examples) {
    const auto r = verify_range_serial({3, 100});
    EXPECT_EQ(r.count_fib_lo + r.count_fib_hi, 10u);
    EXPECT_EQ(r.count_lucas_lo + r.count_lucas_hi, 13u);
    // sides: fib_lo {29,41,61,89}, lucas_hi {3,7,23,43,47,67,83}
    EXPECT_EQ(r.count_fib_lo, 4u);
    EXPECT_EQ(r.count_fib_hi, 6u);
    EXPECT_EQ(r.count_lucas_lo, 6u);
    EXPECT_EQ(r.count_lucas_hi, 7u);
    EXPECT_EQ(r.primes_checked, 23u);
    EXPECT_EQ(r.exceptions_seen, (std::vector<std::uint64_t>{5}));
    EXPECT_TRUE(r.counterexamples.empty());

    const auto five = verify_range_serial({5, 5});
    EXPECT_EQ(five.witness_total(), 0u);
    EXPECT_EQ(five.exceptions_seen, (std::vector<std::uint64_t>{5}));
    EXPECT_TRUE(five.counterexamples.empty());

    const auto gap = verify_range_serial({14, 16});
    EXPECT_EQ(gap.primes_checked, 0u);
    EXPECT_TRUE(gap.exceptions_seen.empty());
    EXPECT_TRUE(gap.counterexamples.empty());

    const auto two = verify_range_serial({2, 3});
    EXPECT_EQ(two.exceptions_seen, (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(two.count_lucas_hi, 1u);
}

TEST(VerifyRange, TalliesSumToOddPrimesOtherThanFive) {
    const auto r = verify_range_serial({2, 30'000}, true);
    const auto primes = oracle::primes_trial(3, 30'000);
    EXPECT_EQ(r.witness_total(), primes.size() - 1);
    EXPECT_EQ(r.witnesses.size(), primes.size() - 1);
    EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end(),
                               [](const auto& a, const auto& b) {
                                   return a.prime_class.p < b.prime_class.p;
                               }));
}

TEST(VerificationReport, MergeIsAssociativeAndCommutative) {
    auto a = [] { return verify_range_serial({2, 999}, true); };
    auto b = [] { return verify_range_serial({1000, 4999}, true); };
    auto c = [] { return verify_range_serial({5000, 9000}, true); };

    auto ab_c = a();
    ab_c.merge(b());
    ab_c.merge(c());

    auto bc = b();
    bc.merge(c());
    auto a_bc = a();
    a_bc.merge(std::move(bc));

    auto cba = c();
    cba.merge(b());
    cba.merge(a());

    const auto whole = verify_range_serial({2, 9000}, true);
    EXPECT_TRUE(ab_c.same_content(a_bc));
    EXPECT_TRUE(ab_c.same_content(cba));
    EXPECT_TRUE(ab_c.same_content(whole));
}

// Side counts below 10^6, frozen from an independent sympy enumeration
// classifying each prime by p mod 4 and p mod 5.
TEST(VerifyRange, SideCountsToOneMillion) {
    const auto r = verify_range(PrimeRange{3, 1'000'000}, 2);
    EXPECT_EQ(r.count_fib_lo, 19514u);
    EXPECT_EQ(r.count_fib_hi, 19660u);
    EXPECT_EQ(r.count_lucas_lo, 19696u);
    EXPECT_EQ(r.count_lucas_hi, 19626u);
    EXPECT_TRUE(r.counterexamples.empty());
}
