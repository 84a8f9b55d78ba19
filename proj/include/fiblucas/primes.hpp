#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

namespace fiblucas {

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 20;

/// Deterministic for every n <= 2^63 - 1 (Miller-Rabin over the first twelve
/// prime bases, which is exact below 3.3e24).
bool is_prime(std::uint64_t n) noexcept;

/// Inclusive range [lo, hi] with 2 <= lo <= hi <= 2^63 - 1.
class PrimeRange {
public:
    PrimeRange(std::uint64_t lo, std::uint64_t hi);

    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t hi() const noexcept { return hi_; }

    friend bool operator==(const PrimeRange&, const PrimeRange&) = default;

private:
    std::uint64_t lo_;
    std::uint64_t hi_;
};

/// Increasing stream of the primes in a range, sieved one segment at a time.
/// Memory stays O(segment_size + sqrt-bound base primes). When sqrt(hi)
/// exceeds the base-prime cap, sieve survivors are confirmed with is_prime.
class PrimeStream {
public:
    explicit PrimeStream(PrimeRange range, std::size_t segment_size = kDefaultSegmentSize);

    std::optional<std::uint64_t> next();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::uint64_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::uint64_t*;
        using reference = const std::uint64_t&;

        iterator() = default;
        explicit iterator(PrimeStream* s) : stream_(s) { ++*this; }

        reference operator*() const { return current_; }
        iterator& operator++() {
            if (auto p = stream_->next()) {
                current_ = *p;
            } else {
                stream_ = nullptr;
            }
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.stream_ == b.stream_;
        }

    private:
        PrimeStream* stream_ = nullptr;
        std::uint64_t current_ = 0;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    bool fill_next_segment();

    PrimeRange range_;
    std::size_t segment_size_;
    std::vector<std::uint32_t> base_primes_;
    bool needs_confirmation_ = false;

    std::uint64_t segment_lo_;
    std::uint64_t segment_base_ = 0;
    bool exhausted_ = false;
    std::vector<std::uint8_t> composite_;
    std::size_t cursor_ = 0;
};

PrimeStream primes_in(PrimeRange range, std::size_t segment_size = kDefaultSegmentSize);

/// Materialised primes_in, for small ranges.
std::vector<std::uint64_t> collect_primes(PrimeRange range);

/// Primes <= limit by a plain sieve.
std::vector<std::uint32_t> small_primes_up_to(std::uint32_t limit);

std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace fiblucas
