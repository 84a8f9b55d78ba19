#pragma once

// Exact checks of the Fibonacci/Lucas identity family behind the
// consecutive-product theorem, plus the Lucas-Fermat congruence.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fiblucas/arith.hpp"
#include "fiblucas/natural.hpp"

namespace fiblucas {

enum class IdentityId {
    Sum,              ///< L_{n+m} - (-1)^m L_{n-m} = 5 F_m F_n
    Product,          ///< L_{n+m} + (-1)^m L_{n-m} = L_m L_n
    Doubling,         ///< F_{2n} = F_n L_n
    FibProduct4r1,    ///< L_{4r+1} - 1 = 5 F_{2r} F_{2r+1}
    LucasProduct4r1,  ///< L_{4r+1} + 1 = L_{2r} L_{2r+1}
    FibProduct4r3,    ///< L_{4r+3} + 1 = 5 F_{2r+1} F_{2r+2}
    LucasProduct4r3,  ///< L_{4r+3} - 1 = L_{2r+1} L_{2r+2}
    LucasFermat,      ///< L_p = 1 (mod p)
};

inline constexpr std::size_t kIdentityCount = 8;

inline constexpr std::array<IdentityId, kIdentityCount> kAllIdentities{
    IdentityId::Sum,           IdentityId::Product,         IdentityId::Doubling,
    IdentityId::FibProduct4r1, IdentityId::LucasProduct4r1, IdentityId::FibProduct4r3,
    IdentityId::LucasProduct4r3, IdentityId::LucasFermat,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

struct IdentityCheckResult {
    IdentityId identity;
    std::vector<Index> indices;  ///< (n, m), (n), (r) or (p)
    Natural lhs;
    Natural rhs;
    bool pass;
};

/// Requires n >= m (InvalidIndices) and n + m <= max_index (IndexTooLarge).
IdentityCheckResult check_sum_identity(Index n, Index m,
                                       std::uint64_t max_index = kDefaultMaxExactIndex);
IdentityCheckResult check_product_identity(Index n, Index m,
                                           std::uint64_t max_index = kDefaultMaxExactIndex);

/// Requires 2n <= max_index.
IdentityCheckResult check_doubling_identity(Index n,
                                            std::uint64_t max_index = kDefaultMaxExactIndex);

/// The four instances at m = 2r, n = 2r+1 and m = 2r+1, n = 2r+2, written in
/// their L_1 = 1 form. Requires 4r + 3 <= max_index.
std::array<IdentityCheckResult, 4> check_theorem_identities(
    Index r, std::uint64_t max_index = kDefaultMaxExactIndex);

/// Modular: L_p mod p against 1. Throws NotPrime.
IdentityCheckResult check_lucas_fermat(std::uint64_t p);

// ---------------------------------------------------------------------------
// Grid sweeps

struct IdentityGrid {
    Index max_n = 0;  ///< sum/product over 0 <= m <= n <= max_n, m <= max_m; doubling over n <= max_n
    Index max_m = 0;
    Index max_r = 0;
    std::uint64_t max_p = 0;  ///< Lucas-Fermat over primes <= max_p; 0 skips
};

struct IdentityTally {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
};

struct IdentitySweepReport {
    std::array<IdentityTally, kIdentityCount> tallies{};
    std::vector<IdentityCheckResult> failures;

    const IdentityTally& tally(IdentityId id) const {
        return tallies[static_cast<std::size_t>(id)];
    }
    bool all_passed() const { return failures.empty(); }

    void record(IdentityCheckResult result);
    /// Tallies add; failures concatenate, then sort by identity and indices.
    void merge(IdentitySweepReport other);
};

/// Throws InvalidIndices when max_m > max_n and IndexTooLarge when the grid
/// leaves the exact bound.
void validate_grid(const IdentityGrid& grid, std::uint64_t max_index);

/// OpenMP kernel. Output is independent of parallelism.
IdentitySweepReport sweep_identities(const IdentityGrid& grid, unsigned parallelism,
                                     std::uint64_t max_index = kDefaultMaxExactIndex);

/// Single-threaded reference for sweep_identities.
IdentitySweepReport sweep_identities_serial(const IdentityGrid& grid,
                                            std::uint64_t max_index = kDefaultMaxExactIndex);

}  // namespace fiblucas
