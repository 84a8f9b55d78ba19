#include "fiblucas/arith.hpp"

#include <bit>

namespace fiblucas {

namespace {

void require_modular_index(Index n) {
    if (n > kMaxWord) throw IndexTooLarge(n, kMaxWord);
}

// Walks the bits of n from the top, keeping (F_k, F_{k+1}) and using
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
template <typename Ops>
auto fib_doubling(Index n, const Ops& ops) {
    auto a = ops.zero();
    auto b = ops.one();
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        auto c = ops.mul(a, ops.sub(ops.add(b, b), a));
        auto d = ops.add(ops.mul(a, a), ops.mul(b, b));
        if ((n >> bit) & 1) {
            a = d;
            b = ops.add(c, d);
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return std::pair{std::move(a), std::move(b)};
}

struct ExactOps {
    Natural zero() const { return Natural{0}; }
    Natural one() const { return Natural{1}; }
    Natural add(const Natural& x, const Natural& y) const { return x + y; }
    Natural sub(const Natural& x, const Natural& y) const { return x - y; }
    Natural mul(const Natural& x, const Natural& y) const { return x * y; }
};

struct ModOps {
    std::uint64_t m;
    Residue zero() const { return 0; }
    Residue one() const { return 1 % m; }
    Residue add(Residue x, Residue y) const { return add_mod(x, y, m); }
    Residue sub(Residue x, Residue y) const { return sub_mod(x, y, m); }
    Residue mul(Residue x, Residue y) const { return mul_mod(x, y, m); }
};

// (L_n, L_{n+1}) = (2 F_{n+1} - F_n, 2 F_n + F_{n+1})
template <typename Ops, typename T>
std::pair<T, T> lucas_from_fib(const T& f0, const T& f1, const Ops& ops) {
    return {ops.sub(ops.add(f1, f1), f0), ops.add(ops.add(f0, f0), f1)};
}

}  // namespace

ExactPair fib_pair(Index n, std::uint64_t max_index) {
    if (n > max_index) throw IndexTooLarge(n, max_index);
    auto [f0, f1] = fib_doubling(n, ExactOps{});
    return {SequenceKind::Fibonacci, n, std::move(f0), std::move(f1)};
}

ExactPair lucas_pair(Index n, std::uint64_t max_index) {
    if (n > max_index) throw IndexTooLarge(n, max_index);
    const ExactOps ops;
    auto [f0, f1] = fib_doubling(n, ops);
    auto [l0, l1] = lucas_from_fib(f0, f1, ops);
    return {SequenceKind::Lucas, n, std::move(l0), std::move(l1)};
}

ModPair fib_pair_mod(Index n, Modulus m) {
    require_modular_index(n);
    auto [f0, f1] = fib_doubling(n, ModOps{m.value()});
    return {SequenceKind::Fibonacci, n, f0, f1, m};
}

ModPair lucas_pair_mod(Index n, Modulus m) {
    require_modular_index(n);
    const ModOps ops{m.value()};
    auto [f0, f1] = fib_doubling(n, ops);
    auto [l0, l1] = lucas_from_fib(f0, f1, ops);
    return {SequenceKind::Lucas, n, l0, l1, m};
}

}  // namespace fiblucas
