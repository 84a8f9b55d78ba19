#include "identity_units.hpp"

namespace fiblucas {

IdentitySweepReport sweep_identities_serial(const IdentityGrid& grid, std::uint64_t max_index) {
    validate_grid(grid, max_index);
    IdentitySweepReport report;
    for (Index n = 0; n <= grid.max_n; ++n) detail::sweep_pair_row(n, grid, max_index, report);
    for (Index n = 0; n <= grid.max_n; ++n) detail::sweep_doubling(n, max_index, report);
    for (Index r = 0; r <= grid.max_r; ++r) detail::sweep_theorem(r, max_index, report);
    for (std::uint64_t p : detail::lucas_fermat_primes(grid)) {
        report.record(check_lucas_fermat(p));
    }
    report.merge({});
    return report;
}

}  // namespace fiblucas
