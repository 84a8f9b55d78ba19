#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fiblucas {

/// Largest index or modulus accepted anywhere: 2^63 - 1.
inline constexpr std::uint64_t kMaxWord = (std::uint64_t{1} << 63) - 1;

/// Default cap on indices for exact (arbitrary-precision) evaluation.
inline constexpr std::uint64_t kDefaultMaxExactIndex = 1'000'000;

class IndexTooLarge : public std::out_of_range {
public:
    IndexTooLarge(std::uint64_t index, std::uint64_t bound)
        : std::out_of_range("index " + std::to_string(index) +
                            " exceeds bound " + std::to_string(bound)),
          index_(index), bound_(bound) {}

    std::uint64_t index() const noexcept { return index_; }
    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t index_;
    std::uint64_t bound_;
};

class InvalidIndices : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotPrime : public std::invalid_argument {
public:
    explicit NotPrime(std::uint64_t n)
        : std::invalid_argument(std::to_string(n) + " is not prime"), value_(n) {}

    std::uint64_t value() const noexcept { return value_; }

private:
    std::uint64_t value_;
};

/// Raised for p = 2 and p = 5, which sit outside both product forms.
class ExceptionPrime : public std::domain_error {
public:
    ExceptionPrime(std::uint64_t p, const std::string& why)
        : std::domain_error(why), prime_(p) {}

    std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

/// A computed witness contradicts the divisibility theorem. Only an
/// arithmetic bug can produce this.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fiblucas
