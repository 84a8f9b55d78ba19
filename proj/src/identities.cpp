#include "fiblucas/identities.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "fiblucas/primes.hpp"

namespace fiblucas {

namespace {

constexpr std::array<std::string_view, kIdentityCount> kNames{
    "sum", "product", "doubling", "fib_product_4r1", "lucas_product_4r1",
    "fib_product_4r3", "lucas_product_4r3", "lucas_fermat",
};

void require_pair_indices(Index n, Index m, std::uint64_t max_index) {
    if (n < m) {
        throw InvalidIndices("identity requires n >= m, got n=" + std::to_string(n) +
                             " m=" + std::to_string(m));
    }
    if (n > max_index || m > max_index - n) throw IndexTooLarge(n + m, max_index);
}

IdentityCheckResult make_result(IdentityId id, std::vector<Index> indices, Natural lhs,
                                Natural rhs) {
    const bool pass = lhs == rhs;
    return {id, std::move(indices), std::move(lhs), std::move(rhs), pass};
}

// big -/+ small == rhs, without ever forming a negative value. If big < small
// the difference would be negative, so the comparison becomes big == rhs + small.
IdentityCheckResult signed_combination(IdentityId id, std::vector<Index> indices,
                                       const Natural& big, const Natural& small, bool subtract,
                                       Natural rhs) {
    if (!subtract) return make_result(id, std::move(indices), big + small, std::move(rhs));
    if (big >= small) return make_result(id, std::move(indices), big - small, std::move(rhs));
    return make_result(id, std::move(indices), big, rhs + small);
}

}  // namespace

std::string_view identity_name(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (IdentityId id : kAllIdentities) {
        if (identity_name(id) == name) return id;
    }
    return std::nullopt;
}

IdentityCheckResult check_sum_identity(Index n, Index m, std::uint64_t max_index) {
    require_pair_indices(n, m, max_index);
    const Natural rhs = Natural{5} * fib(m, max_index) * fib(n, max_index);
    return signed_combination(IdentityId::Sum, {n, m}, lucas(n + m, max_index),
                              lucas(n - m, max_index), m % 2 == 0, rhs);
}

IdentityCheckResult check_product_identity(Index n, Index m, std::uint64_t max_index) {
    require_pair_indices(n, m, max_index);
    const Natural rhs = lucas(m, max_index) * lucas(n, max_index);
    return signed_combination(IdentityId::Product, {n, m}, lucas(n + m, max_index),
                              lucas(n - m, max_index), m % 2 == 1, rhs);
}

IdentityCheckResult check_doubling_identity(Index n, std::uint64_t max_index) {
    if (n > max_index / 2) throw IndexTooLarge(n > kMaxWord ? n : 2 * n, max_index);
    return make_result(IdentityId::Doubling, {n}, fib(2 * n, max_index),
                       fib(n, max_index) * lucas(n, max_index));
}

std::array<IdentityCheckResult, 4> check_theorem_identities(Index r, std::uint64_t max_index) {
    if (max_index < 3 || r > (max_index - 3) / 4) {
        throw IndexTooLarge(r > kMaxWord / 4 ? r : 4 * r + 3, max_index);
    }
    const Index even = 2 * r;
    const auto f_even = fib_pair(even, max_index);     // F_{2r}, F_{2r+1}
    const auto f_odd = fib_pair(even + 1, max_index);  // F_{2r+1}, F_{2r+2}
    const auto l_even = lucas_pair(even, max_index);   // L_{2r}, L_{2r+1}
    const auto l_odd = lucas_pair(even + 1, max_index);
    const Natural l_4r1 = lucas(4 * r + 1, max_index);
    const Natural l_4r3 = lucas(4 * r + 3, max_index);
    const Natural one{1};

    return {
        // L_{4r+1} >= 1 and L_{4r+3} >= 4, so both subtractions stay in range.
        make_result(IdentityId::FibProduct4r1, {r}, l_4r1 - one,
                    Natural{5} * f_even.first * f_even.second),
        make_result(IdentityId::LucasProduct4r1, {r}, l_4r1 + one,
                    l_even.first * l_even.second),
        make_result(IdentityId::FibProduct4r3, {r}, l_4r3 + one,
                    Natural{5} * f_odd.first * f_odd.second),
        make_result(IdentityId::LucasProduct4r3, {r}, l_4r3 - one, l_odd.first * l_odd.second),
    };
}

IdentityCheckResult check_lucas_fermat(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    return make_result(IdentityId::LucasFermat, {p}, Natural{lucas_mod(p, Modulus{p})},
                       Natural{1 % p});
}

void IdentitySweepReport::record(IdentityCheckResult result) {
    auto& t = tallies[static_cast<std::size_t>(result.identity)];
    ++t.checked;
    if (result.pass) {
        ++t.passed;
    } else {
        failures.push_back(std::move(result));
    }
}

void IdentitySweepReport::merge(IdentitySweepReport other) {
    for (std::size_t i = 0; i < kIdentityCount; ++i) {
        tallies[i].checked += other.tallies[i].checked;
        tallies[i].passed += other.tallies[i].passed;
    }
    failures.insert(failures.end(), std::make_move_iterator(other.failures.begin()),
                    std::make_move_iterator(other.failures.end()));
    std::sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) {
        return std::tie(a.identity, a.indices) < std::tie(b.identity, b.indices);
    });
}

void validate_grid(const IdentityGrid& grid, std::uint64_t max_index) {
    if (grid.max_m > grid.max_n) {
        throw InvalidIndices("max-m (" + std::to_string(grid.max_m) +
                             ") must not exceed max-n (" + std::to_string(grid.max_n) + ")");
    }
    if (grid.max_n > max_index / 2) throw IndexTooLarge(grid.max_n, max_index / 2);
    if (max_index < 3 || grid.max_r > (max_index - 3) / 4) {
        throw IndexTooLarge(grid.max_r, max_index < 3 ? 0 : (max_index - 3) / 4);
    }
    if (grid.max_p > kMaxWord) throw IndexTooLarge(grid.max_p, kMaxWord);
}

}  // namespace fiblucas
