#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctd {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxPoints = 64;

namespace detail {

struct BinomTable {
    // C(n,k) for 0 <= k <= n <= 64. C(64,32) < 2^63, so uint64 is exact.
    std::uint64_t c[kMaxPoints + 1][kMaxPoints + 1] = {};

    constexpr BinomTable() {
        for (int n = 0; n <= kMaxPoints; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

inline constexpr BinomTable kBinom{};

} // namespace detail

// C(n,k) as a machine word; valid for 0 <= n <= 64.
inline std::uint64_t binom(int n, int k) {
    if (n < 0 || n > kMaxPoints)
        throw std::invalid_argument("binom: n out of range");
    if (k < 0 || k > n)
        return 0;
    return detail::kBinom.c[n][k];
}

// exact C(n,k) for arbitrary n (screening arithmetic)
inline BigInt binom_big(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace ctd
