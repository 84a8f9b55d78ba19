#include <omp.h>

#include <cstdint>

#include "identity_units.hpp"

namespace fiblucas {

IdentitySweepReport sweep_identities(const IdentityGrid& grid, unsigned parallelism,
                                     std::uint64_t max_index) {
    validate_grid(grid, max_index);
    const auto primes = detail::lucas_fermat_primes(grid);
    const auto rows = static_cast<std::int64_t>(grid.max_n) + 1;
    const auto rs = static_cast<std::int64_t>(grid.max_r) + 1;
    const auto np = static_cast<std::int64_t>(primes.size());
    const int threads = static_cast<int>(parallelism == 0 ? 1 : parallelism);

    IdentitySweepReport report;
#pragma omp parallel num_threads(threads)
    {
        IdentitySweepReport local;
        // Row n costs O(n) checks; hand rows out dynamically from the far end.
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < rows; ++i) {
            detail::sweep_pair_row(static_cast<Index>(rows - 1 - i), grid, max_index, local);
        }
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t n = 0; n < rows; ++n) {
            detail::sweep_doubling(static_cast<Index>(n), max_index, local);
        }
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t r = 0; r < rs; ++r) {
            detail::sweep_theorem(static_cast<Index>(r), max_index, local);
        }
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t i = 0; i < np; ++i) {
            local.record(check_lucas_fermat(primes[static_cast<std::size_t>(i)]));
        }
#pragma omp critical(fiblucas_identity_merge)
        report.merge(std::move(local));
    }
    return report;
}

}  // namespace fiblucas
