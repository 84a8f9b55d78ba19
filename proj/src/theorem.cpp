#include "fiblucas/theorem.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace fiblucas {

std::string_view to_string(PrimeForm f) {
    switch (f) {
        case PrimeForm::FourRPlus1: return "four_r_plus_1";
        case PrimeForm::FourRPlus3: return "four_r_plus_3";
        case PrimeForm::SpecialTwo: return "special_two";
        case PrimeForm::SpecialFive: return "special_five";
    }
    return "?";
}

std::string_view to_string(FiveResidue f) {
    switch (f) {
        case FiveResidue::PlusMinusOne: return "plus_minus_one";
        case FiveResidue::PlusMinusTwo: return "plus_minus_two";
        case FiveResidue::Zero: return "zero";
        case FiveResidue::NotApplicable: return "not_applicable";
    }
    return "?";
}

std::string_view to_string(ProductKind k) {
    switch (k) {
        case ProductKind::FibonacciProduct: return "fibonacci_product";
        case ProductKind::LucasProduct: return "lucas_product";
        case ProductKind::ExceptionFive: return "exception_five";
        case ProductKind::ExceptionTwo: return "exception_two";
    }
    return "?";
}

std::string_view to_string(ApparitionSide s) {
    return s == ApparitionSide::DividesFpMinus1 ? "divides_f_p_minus_1" : "divides_f_p_plus_1";
}

PrimeClass classify_prime(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    if (p == 2) return {p, PrimeForm::SpecialTwo, std::nullopt, FiveResidue::NotApplicable};
    if (p == 5) return {p, PrimeForm::SpecialFive, std::nullopt, FiveResidue::Zero};

    const std::uint64_t mod5 = p % 5;
    const FiveResidue five =
        (mod5 == 1 || mod5 == 4) ? FiveResidue::PlusMinusOne : FiveResidue::PlusMinusTwo;
    if (p % 4 == 1) return {p, PrimeForm::FourRPlus1, (p - 1) / 4, five};
    return {p, PrimeForm::FourRPlus3, (p - 3) / 4, five};
}

WitnessEvaluation evaluate_witness(const PrimeClass& cls) {
    if (cls.form != PrimeForm::FourRPlus1 && cls.form != PrimeForm::FourRPlus3) {
        throw std::invalid_argument("witness evaluation needs a 4r+1 or 4r+3 prime");
    }
    const Modulus mod{cls.p};
    const Index r = *cls.r;
    DivisibilityWitness w;
    w.prime_class = cls;
    if (cls.form == PrimeForm::FourRPlus1) {
        const auto pair = fib_pair_mod(2 * r, mod);
        w.product_kind = ProductKind::FibonacciProduct;
        w.index_lo = 2 * r;
        w.residue_lo = pair.first;
        w.residue_hi = pair.second;
    } else {
        const auto pair = lucas_pair_mod(2 * r + 1, mod);
        w.product_kind = ProductKind::LucasProduct;
        w.index_lo = 2 * r + 1;
        w.residue_lo = pair.first;
        w.residue_hi = pair.second;
    }
    w.index_hi = w.index_lo + 1;

    const bool lo_zero = w.residue_lo == 0;
    const bool hi_zero = w.residue_hi == 0;
    WitnessEvaluation out{w, {}};
    if (lo_zero && hi_zero) {
        out.violation = "p divides both consecutive factors";
        return out;
    }
    if (!lo_zero && !hi_zero) {
        out.violation = "p divides neither factor";
        return out;
    }
    out.witness.divisible_index = lo_zero ? w.index_lo : w.index_hi;
    const Index predicted =
        cls.five_residue == FiveResidue::PlusMinusOne ? w.index_lo : w.index_hi;
    if (*out.witness.divisible_index != predicted) {
        out.violation = "zero factor at index " + std::to_string(*out.witness.divisible_index) +
                        ", residue class mod 5 predicts " + std::to_string(predicted);
    }
    return out;
}

DivisibilityWitness theorem_witness(std::uint64_t p) {
    const PrimeClass cls = classify_prime(p);
    if (cls.form == PrimeForm::SpecialTwo) {
        throw ExceptionPrime(p, "p = 2 is neither 4r+1 nor 4r+3");
    }
    if (cls.form == PrimeForm::SpecialFive) {
        throw ExceptionPrime(p, "p = 5 is excluded: it divides neither F_2 = 1 nor F_3 = 2");
    }
    auto eval = evaluate_witness(cls);
    if (!eval.ok()) {
        throw TheoremViolation("theorem violated at p = " + std::to_string(p) + ": " +
                               eval.violation);
    }
    return eval.witness;
}

DivisibilityWitness exception_witness(std::uint64_t p) {
    DivisibilityWitness w;
    if (p == 5) {
        const auto pair = fib_pair_mod(2, Modulus{5});
        w.prime_class = classify_prime(5);
        w.product_kind = ProductKind::ExceptionFive;
        w.index_lo = 2;
        w.index_hi = 3;
        w.residue_lo = pair.first;
        w.residue_hi = pair.second;
        return w;
    }
    if (p == 2) {
        w.prime_class = classify_prime(2);
        w.product_kind = ProductKind::ExceptionTwo;
        return w;
    }
    throw std::invalid_argument(std::to_string(p) + " is not an exception prime");
}

Index rank_of_apparition(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    // alpha(p) <= p + 1 for every prime
    Residue a = 1;  // F_1
    Residue b = 1;  // F_2
    for (Index n = 1; n <= p + 1; ++n) {
        if (a == 0) return n;
        const Residue next = add_mod(a, b, p);
        a = b;
        b = next;
    }
    throw std::logic_error("no Fibonacci zero mod " + std::to_string(p) + " within p + 1 terms");
}

ApparitionSide expected_apparition_side(std::uint64_t p) {
    const PrimeClass cls = classify_prime(p);
    if (cls.form == PrimeForm::SpecialTwo || cls.form == PrimeForm::SpecialFive) {
        throw ExceptionPrime(p, "apparition side is undefined for p = " + std::to_string(p));
    }
    const bool minus = cls.five_residue == FiveResidue::PlusMinusOne;
    const Index n = minus ? p - 1 : p + 1;
    if (fib_mod(n, Modulus{p}) != 0) {
        throw TheoremViolation("F_" + std::to_string(n) + " is not divisible by " +
                               std::to_string(p));
    }
    return minus ? ApparitionSide::DividesFpMinus1 : ApparitionSide::DividesFpPlus1;
}

void VerificationReport::merge(VerificationReport other) {
    range = PrimeRange{std::min(range.lo(), other.range.lo()),
                       std::max(range.hi(), other.range.hi())};
    primes_checked += other.primes_checked;
    count_fib_lo += other.count_fib_lo;
    count_fib_hi += other.count_fib_hi;
    count_lucas_lo += other.count_lucas_lo;
    count_lucas_hi += other.count_lucas_hi;
    elapsed += other.elapsed;

    auto splice = [](auto& into, auto& from, auto key) {
        const auto mid = static_cast<std::ptrdiff_t>(into.size());
        into.insert(into.end(), std::make_move_iterator(from.begin()),
                    std::make_move_iterator(from.end()));
        std::inplace_merge(into.begin(), into.begin() + mid, into.end(),
                           [&](const auto& a, const auto& b) { return key(a) < key(b); });
    };
    splice(exceptions_seen, other.exceptions_seen, [](std::uint64_t p) { return p; });
    splice(counterexamples, other.counterexamples,
           [](const Counterexample& c) { return c.witness.prime_class.p; });
    splice(witnesses, other.witnesses,
           [](const DivisibilityWitness& w) { return w.prime_class.p; });
}

bool VerificationReport::same_content(const VerificationReport& o) const {
    return range == o.range && primes_checked == o.primes_checked &&
           count_fib_lo == o.count_fib_lo && count_fib_hi == o.count_fib_hi &&
           count_lucas_lo == o.count_lucas_lo && count_lucas_hi == o.count_lucas_hi &&
           exceptions_seen == o.exceptions_seen && counterexamples == o.counterexamples &&
           witnesses == o.witnesses;
}

}  // namespace fiblucas
