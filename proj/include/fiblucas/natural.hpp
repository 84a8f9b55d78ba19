#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace fiblucas {

/// Arbitrary-precision nonnegative integer. Subtraction refuses to go below
/// zero, so every value ever held satisfies value >= 0.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v);  // NOLINT: implicit widening from machine words is intended

    static Natural from_decimal(const std::string& digits);

    Natural& operator+=(const Natural& rhs);
    Natural& operator*=(const Natural& rhs);
    /// Throws std::domain_error when rhs > *this.
    Natural& operator-=(const Natural& rhs);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

    friend bool operator==(const Natural& a, const Natural& b);
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

    /// this mod m, m >= 1.
    std::uint64_t mod(std::uint64_t m) const;

    bool fits_u64() const;
    /// Requires fits_u64().
    std::uint64_t to_u64() const;
    bool is_zero() const { return sgn(v_) == 0; }

    std::string to_string() const;

private:
    explicit Natural(mpz_class v) : v_(std::move(v)) {}

    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

}  // namespace fiblucas
