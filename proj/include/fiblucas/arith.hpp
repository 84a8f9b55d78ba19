#pragma once

// Fibonacci and Lucas evaluation by index doubling. Exact results use
// arbitrary precision; modular results use 64-bit residues. Every function
// here is pure and safe to call from any number of threads.

#include <cstdint>
#include <optional>

#include "fiblucas/errors.hpp"
#include "fiblucas/modmath.hpp"
#include "fiblucas/natural.hpp"

namespace fiblucas {

using Index = std::uint64_t;

enum class SequenceKind { Fibonacci, Lucas };

/// (X_n, X_{n+1}) computed exactly.
struct ExactPair {
    SequenceKind kind;
    Index index;
    Natural first;
    Natural second;
};

/// (X_n mod m, X_{n+1} mod m).
struct ModPair {
    SequenceKind kind;
    Index index;
    Residue first;
    Residue second;
    Modulus modulus;
};

/// Throws IndexTooLarge when n > max_index.
ExactPair fib_pair(Index n, std::uint64_t max_index = kDefaultMaxExactIndex);
ExactPair lucas_pair(Index n, std::uint64_t max_index = kDefaultMaxExactIndex);

/// Accepts any n <= 2^63 - 1; throws IndexTooLarge above that.
ModPair fib_pair_mod(Index n, Modulus m);
ModPair lucas_pair_mod(Index n, Modulus m);

// Single-value shorthands.
inline Natural fib(Index n, std::uint64_t max_index = kDefaultMaxExactIndex) {
    return fib_pair(n, max_index).first;
}
inline Natural lucas(Index n, std::uint64_t max_index = kDefaultMaxExactIndex) {
    return lucas_pair(n, max_index).first;
}
inline Residue fib_mod(Index n, Modulus m) { return fib_pair_mod(n, m).first; }
inline Residue lucas_mod(Index n, Modulus m) { return lucas_pair_mod(n, m).first; }

}  // namespace fiblucas
