#include <gtest/gtest.h>

#include <random>

#include "fiblucas/modmath.hpp"

using namespace fiblucas;

TEST(Modulus, RejectsOutOfRange) {
    EXPECT_THROW(Modulus{0}, std::invalid_argument);
    EXPECT_THROW(Modulus{kMaxWord + 1}, std::invalid_argument);
    EXPECT_EQ(Modulus{kMaxWord}.value(), kMaxWord);
    EXPECT_EQ(Modulus{1}.value(), 1u);
}

TEST(ModMath, NearTopOfRange) {
    const std::uint64_t m = kMaxWord;
    // (m-1)^2 = 1 (mod m)
    EXPECT_EQ(mul_mod(m - 1, m - 1, m), 1u);
    EXPECT_EQ(add_mod(m - 1, m - 1, m), m - 2);
    EXPECT_EQ(sub_mod(0, m - 1, m), 1u);
    EXPECT_EQ(pow_mod(2, 63, m), 1u);  // 2^63 = 2^63 - 1 + 1
}

TEST(ModMath, MulModMatchesSplitMultiply) {
    // Russian-peasant multiply uses only additions, so it cannot overflow for m < 2^63.
    auto slow = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        std::uint64_t r = 0;
        for (; b; b >>= 1) {
            if (b & 1) r = (r + a) % m;
            a = (a + a) % m;
        }
        return r;
    };
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t m = (rng() & kMaxWord) | 1;
        const std::uint64_t a = rng() % m, b = rng() % m;
        ASSERT_EQ(mul_mod(a, b, m), slow(a, b, m)) << a << ' ' << b << ' ' << m;
    }
}

TEST(ModMath, ModulusOneIsZeroRing) {
    EXPECT_EQ(pow_mod(5, 0, 1), 0u);
    EXPECT_EQ(mul_mod(0, 0, 1), 0u);
}
