#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "verify_units.hpp"

namespace fiblucas {

namespace {

constexpr std::uint64_t kMinChunk = std::uint64_t{1} << 16;
constexpr std::uint64_t kTargetChunks = 256;

// Fixed partition of the range; depends only on the range, never on the
// thread count, so per-chunk results are reproducible.
std::vector<PrimeRange> partition(PrimeRange range) {
    const std::uint64_t span = range.hi() - range.lo();
    const std::uint64_t width = std::max(kMinChunk, span / kTargetChunks + 1);
    std::vector<PrimeRange> chunks;
    for (std::uint64_t lo = range.lo();;) {
        const std::uint64_t hi = range.hi() - lo < width ? range.hi() : lo + (width - 1);
        chunks.emplace_back(lo, hi);
        if (hi == range.hi()) break;
        lo = hi + 1;
    }
    return chunks;
}

}  // namespace

VerificationReport verify_range(PrimeRange range, unsigned parallelism, bool keep_witnesses) {
    const auto start = std::chrono::steady_clock::now();
    const auto chunks = partition(range);
    std::vector<VerificationReport> partial;
    partial.reserve(chunks.size());
    for (const auto& c : chunks) partial.emplace_back(c);

    const auto count = static_cast<std::int64_t>(chunks.size());
    const int threads = static_cast<int>(parallelism == 0 ? 1 : parallelism);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        auto& out = partial[static_cast<std::size_t>(i)];
        const auto& chunk = chunks[static_cast<std::size_t>(i)];
        const auto segment = static_cast<std::size_t>(
            std::min<std::uint64_t>(kDefaultSegmentSize, chunk.hi() - chunk.lo() + 1));
        for (std::uint64_t p : primes_in(chunk, segment)) {
            detail::inspect_prime(p, keep_witnesses, out);
        }
    }

    VerificationReport report = std::move(partial.front());
    for (std::size_t i = 1; i < partial.size(); ++i) report.merge(std::move(partial[i]));
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace fiblucas
