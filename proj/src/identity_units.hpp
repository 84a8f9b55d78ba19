#pragma once

// Work units shared by the serial and OpenMP identity sweeps.

#include <algorithm>

#include "fiblucas/identities.hpp"
#include "fiblucas/primes.hpp"

namespace fiblucas::detail {

inline void sweep_pair_row(Index n, const IdentityGrid& grid, std::uint64_t max_index,
                           IdentitySweepReport& out) {
    const Index top = std::min(n, grid.max_m);
    for (Index m = 0; m <= top; ++m) {
        out.record(check_sum_identity(n, m, max_index));
        out.record(check_product_identity(n, m, max_index));
    }
}

inline void sweep_doubling(Index n, std::uint64_t max_index, IdentitySweepReport& out) {
    out.record(check_doubling_identity(n, max_index));
}

inline void sweep_theorem(Index r, std::uint64_t max_index, IdentitySweepReport& out) {
    for (auto& result : check_theorem_identities(r, max_index)) out.record(std::move(result));
}

inline std::vector<std::uint64_t> lucas_fermat_primes(const IdentityGrid& grid) {
    if (grid.max_p < 2) return {};
    return collect_primes(PrimeRange{2, grid.max_p});
}

}  // namespace fiblucas::detail
