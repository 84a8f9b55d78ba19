#include "verify_units.hpp"

namespace fiblucas {

VerificationReport verify_range_serial(PrimeRange range, bool keep_witnesses) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report(range);
    for (std::uint64_t p : primes_in(range)) detail::inspect_prime(p, keep_witnesses, report);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace fiblucas
