#pragma once

/**
 * @file three_squares.hpp
 * @brief Legendre three-square classification and constructive decomposition.
 *
 * N >= 0 is a sum of three integer squares iff N is not of the form
 * 4^k (8t + 7). classify() strips factors of 4 and tests the residue;
 * decompose() finds the lexicographically smallest (a, b, c) with
 * a <= b <= c and a^2 + b^2 + c^2 = N.
 */

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ratsum {

struct LegendreClass {
    long long N = 0;
    bool representable = false;
    // Valid only when !representable: N = 4^k (8t + 7).
    int k = 0;
    long long t = 0;
};

struct ThreeSquares {
    long long N = 0;
    long long a = 0, b = 0, c = 0; // a <= b <= c, a^2 + b^2 + c^2 = N
};

inline long long isqrt_ll(long long n) {
    if (n < 0) throw std::domain_error("isqrt_ll: negative argument");
    if (n == 0) return 0;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline LegendreClass classify(long long N) {
    if (N < 0) throw std::invalid_argument("classify: N must be nonnegative");
    LegendreClass out;
    out.N = N;
    long long rest = N;
    int k = 0;
    while (rest > 0 && rest % 4 == 0) {
        rest /= 4;
        ++k;
    }
    if (rest % 8 == 7) {
        out.representable = false;
        out.k = k;
        out.t = rest / 8;
    } else {
        out.representable = true;
    }
    return out;
}

/// Lexicographically smallest decomposition: the first (a, b) in row-major
/// order (a ascending, then b) whose remainder is a perfect square >= b^2.
inline ThreeSquares decompose(long long N) {
    const LegendreClass cls = classify(N);
    if (!cls.representable)
        throw not_representable_error("decompose: " + std::to_string(N) +
                                      " = 4^" + std::to_string(cls.k) + " (8*" +
                                      std::to_string(cls.t) + " + 7) has no three-square form");
    for (long long a = 0; 3 * a * a <= N; ++a) {
        const long long ra = N - a * a;
        for (long long b = a; 2 * b * b <= ra; ++b) {
            const long long rb = ra - b * b;
            const long long c = isqrt_ll(rb);
            if (c * c == rb) return {N, a, b, c};
        }
    }
    throw std::logic_error("decompose: classify said representable but no decomposition found for " +
                           std::to_string(N)); // unreachable
}

enum class ParityBranch {
    minus15,      // M - 15 is a sum of three squares
    twice_minus99 // 2M - 99 is a sum of three squares
};

/// For M >= 50 at least one branch applies: if M - 15 is excluded then
/// M - 15 = 4^k (8t + 7) with k >= 1 (odd values 7 mod 8 would force
/// 2M - 99 even), so M - 15 is divisible by 4; then 2M - 99 is odd and
/// 2M - 99 = 2(M - 15) - 69 = 8u - 69 = 8(u - 9) + 3, never 7 mod 8.
inline ParityBranch parity_coverage(long long M) {
    if (M < 50) throw std::invalid_argument("parity_coverage: requires M >= 50");
    if (classify(M - 15).representable) return ParityBranch::minus15;
    if (classify(2 * M - 99).representable) return ParityBranch::twice_minus99;
    throw std::logic_error("parity_coverage: both branches excluded at M = " +
                           std::to_string(M)); // unreachable by the parity argument
}

} // namespace ratsum
