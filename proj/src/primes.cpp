#include "fiblucas/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fiblucas/errors.hpp"
#include "fiblucas/modmath.hpp"

namespace fiblucas {

namespace {

// Base primes are kept below this; larger sqrt bounds fall back to
// is_prime on the survivors.
constexpr std::uint32_t kBasePrimeCap = 1u << 20;

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) noexcept {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_prime(std::uint64_t n) noexcept {
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t p : bases) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    return std::all_of(bases.begin(), bases.end(),
                       [&](std::uint64_t a) { return miller_rabin_round(n, a, d, s); });
}

PrimeRange::PrimeRange(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {
    if (lo < 2 || lo > hi || hi > kMaxWord) {
        throw std::invalid_argument("prime range requires 2 <= lo <= hi <= 2^63 - 1, got [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

std::vector<std::uint32_t> small_primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

PrimeStream::PrimeStream(PrimeRange range, std::size_t segment_size)
    : range_(range), segment_size_(segment_size), segment_lo_(range.lo()) {
    if (segment_size_ == 0) throw std::invalid_argument("segment size must be positive");
    const std::uint64_t root = isqrt(range.hi());
    needs_confirmation_ = root > kBasePrimeCap;
    base_primes_ = small_primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(root, kBasePrimeCap)));
}

bool PrimeStream::fill_next_segment() {
    if (exhausted_) return false;
    const std::uint64_t lo = segment_lo_;
    const std::uint64_t hi = std::min<std::uint64_t>(range_.hi(), lo + (segment_size_ - 1));
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);

    composite_.assign(width, 0);
    for (std::uint32_t p : base_primes_) {
        const std::uint64_t pp = std::uint64_t{p} * p;
        if (pp > hi) break;
        std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
        for (std::uint64_t j = start; j <= hi; j += p) composite_[j - lo] = 1;
    }
    if (needs_confirmation_) {
        for (std::size_t i = 0; i < width; ++i) {
            if (!composite_[i] && !is_prime(lo + i)) composite_[i] = 1;
        }
    }

    segment_base_ = lo;
    cursor_ = 0;
    if (hi == range_.hi()) {
        exhausted_ = true;
    } else {
        segment_lo_ = hi + 1;
    }
    return true;
}

std::optional<std::uint64_t> PrimeStream::next() {
    for (;;) {
        while (cursor_ < composite_.size()) {
            const std::size_t i = cursor_++;
            if (!composite_[i]) return segment_base_ + i;
        }
        if (!fill_next_segment()) return std::nullopt;
    }
}

PrimeStream primes_in(PrimeRange range, std::size_t segment_size) {
    return PrimeStream(range, segment_size);
}

std::vector<std::uint64_t> collect_primes(PrimeRange range) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : primes_in(range)) out.push_back(p);
    return out;
}

}  // namespace fiblucas
