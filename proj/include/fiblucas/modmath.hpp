#pragma once

// 64-bit modular arithmetic for moduli up to 2^63 - 1. Products are formed
// in 128 bits, so no intermediate ever wraps.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fiblucas/errors.hpp"

namespace fiblucas {

using Residue = std::uint64_t;

__extension__ using WideWord = unsigned __int128;

class Modulus {
public:
    explicit Modulus(std::uint64_t m) : m_(m) {
        if (m < 1 || m > kMaxWord) {
            throw std::invalid_argument("modulus must lie in [1, 2^63 - 1], got " +
                                        std::to_string(m));
        }
    }

    constexpr std::uint64_t value() const noexcept { return m_; }

    friend constexpr bool operator==(Modulus, Modulus) = default;

private:
    std::uint64_t m_;
};

// Operands are assumed already reduced into [0, m).

constexpr Residue add_mod(Residue a, Residue b, std::uint64_t m) noexcept {
    // a + b < 2^64 because m <= 2^63 - 1
    const std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

constexpr Residue sub_mod(Residue a, Residue b, std::uint64_t m) noexcept {
    return a >= b ? a - b : a + (m - b);
}

constexpr Residue mul_mod(Residue a, Residue b, std::uint64_t m) noexcept {
    return static_cast<Residue>(static_cast<WideWord>(a) * b % m);
}

constexpr Residue pow_mod(Residue base, std::uint64_t exp, std::uint64_t m) noexcept {
    Residue result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace fiblucas
