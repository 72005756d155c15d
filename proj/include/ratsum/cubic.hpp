#pragma once

/**
 * @file cubic.hpp
 * @brief Positive rational solutions of x^3 + y^3 + z^3 = m x y z.
 *
 * Two closed-form one-parameter families, the transform sending a solution
 * to a product-1 triple with sum m, an exhaustive integer search with
 * divisor pruning, and the non-membership criterion for A_3.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rat.hpp"
#include "three_squares.hpp"
#include "witness.hpp"

namespace ratsum {

enum class CubicSource { family_f1, family_f2, search, registry };

struct CubicProvenance {
    CubicSource source = CubicSource::registry;
    long long param = -1; // family parameter; meaningless for search/registry
};

struct CubicSolution {
    Rat x, y, z;
    Rat m;
    CubicProvenance provenance;
};

inline bool satisfies_cubic(const CubicSolution& s) {
    if (!s.x.is_positive() || !s.y.is_positive() || !s.z.is_positive()) return false;
    const Rat lhs = s.x * s.x * s.x + s.y * s.y * s.y + s.z * s.z * s.z;
    const Rat rhs = s.m * s.x * s.y * s.z;
    return lhs == rhs;
}

namespace detail {

inline CubicSolution checked(CubicSolution s, const char* who) {
    if (!satisfies_cubic(s))
        throw std::logic_error(std::string(who) + ": constructed triple fails the cubic");
    return s;
}

} // namespace detail

/// (2, a^2 + a + 1, a^2 - a + 1) solves the cubic with m = a^2 + 5.
inline CubicSolution family_f1(long long a) {
    if (a < 0) throw std::invalid_argument("family_f1: a must be nonnegative");
    const mpz_class A(static_cast<long>(a));
    CubicSolution s;
    s.x = Rat(2);
    s.y = Rat(mpz_class(A * A + A + 1));
    s.z = Rat(mpz_class(A * A - A + 1));
    s.m = Rat(mpz_class(A * A + 5));
    s.provenance = {CubicSource::family_f1, a};
    return detail::checked(std::move(s), "family_f1");
}

/// ((a^2 + 147)/4, (a^4 + 6a^3 + 36a^2 + 98a + 147)/16,
///  (a^4 - 6a^3 + 36a^2 - 98a + 147)/16) solves the cubic with
/// m = (a^2 + 33)/2. Positivity of the minus-branch quartic follows from
/// a^4 - 6a^3 + 36a^2 - 98a + 147 = (a^2 - 3a)^2 + 27(a - 2)^2 + (10a + 39).
inline CubicSolution family_f2(long long a) {
    if (a < 0) throw std::invalid_argument("family_f2: a must be nonnegative");
    const mpz_class A(static_cast<long>(a));
    const mpz_class A2 = A * A, A3 = A2 * A, A4 = A2 * A2;
    CubicSolution s;
    s.x = Rat(mpz_class(A2 + 147), mpz_class(4));
    s.y = Rat(mpz_class(A4 + 6 * A3 + 36 * A2 + 98 * A + 147), mpz_class(16));
    s.z = Rat(mpz_class(A4 - 6 * A3 + 36 * A2 - 98 * A + 147), mpz_class(16));
    s.m = Rat(mpz_class(A2 + 33), mpz_class(2));
    s.provenance = {CubicSource::family_f2, a};
    return detail::checked(std::move(s), "family_f2");
}

/// Verifies the positivity identity behind family_f2 exactly for all
/// 0 <= a <= a_max. Returns true iff every instance matches.
inline bool positivity_identity_check(long long a_max) {
    if (a_max < 0) throw std::invalid_argument("positivity_identity_check: a_max must be >= 0");
    for (long long a = 0; a <= a_max; ++a) {
        const mpz_class A(static_cast<long>(a));
        const mpz_class quartic = A * A * A * A - 6 * A * A * A + 36 * A * A - 98 * A + 147;
        const mpz_class s1 = A * A - 3 * A;
        const mpz_class s2 = A - 2;
        const mpz_class decomposed = s1 * s1 + 27 * s2 * s2 + (10 * A + 39);
        if (quartic != decomposed) return false;
        if (quartic <= 0) return false;
    }
    return true;
}

/// Maps a cubic solution (x, y, z; m) to the witness
/// (x^2/(yz), y^2/(xz), z^2/(xy)): product telescopes to 1 and the sum is
/// (x^3 + y^3 + z^3)/(xyz) = m by the defining equation.
inline Witness lemma_transform(const CubicSolution& s) {
    if (!satisfies_cubic(s))
        throw std::invalid_argument("lemma_transform: input does not solve the cubic");
    Witness w;
    w.n = 3;
    w.m = s.m;
    w.values = {square(s.x) / (s.y * s.z), square(s.y) / (s.x * s.z), square(s.z) / (s.x * s.y)};
    return w;
}

/// Clears denominators: scales (x, y, z) by the lcm of their denominators.
/// The cubic is homogeneous, so the scaled triple solves it for the same m.
inline CubicSolution normalize_to_integers(const CubicSolution& s) {
    if (!satisfies_cubic(s))
        throw std::invalid_argument("normalize_to_integers: input does not solve the cubic");
    const mpz_class l = lcm(lcm(s.x.denominator(), s.y.denominator()), s.z.denominator());
    const Rat scale{l};
    CubicSolution out;
    out.x = s.x * scale;
    out.y = s.y * scale;
    out.z = s.z * scale;
    out.m = s.m;
    out.provenance = s.provenance;
    return detail::checked(std::move(out), "normalize_to_integers");
}

namespace detail {

using i128 = __int128;

inline i128 isqrt_i128(i128 n) {
    if (n < 0) throw std::domain_error("isqrt_i128: negative argument");
    if (n == 0) return 0;
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// One stripe of the integer search: x in [x_lo, x_hi] stepping by stride.
/// Any solution with x <= y has z^3 < m x y z, i.e. z^2 < m x y, and z must
/// divide x^3 + y^3; both facts prune the z-loop to divisors below sqrt(mxy).
inline void search_cubic_stripe(long long m, long long y_max, long long x_lo, long long stride,
                                std::vector<std::array<long long, 3>>& out) {
    for (long long x = x_lo; x <= y_max; x += stride) {
        const i128 x3 = static_cast<i128>(x) * x * x;
        for (long long y = x; y <= y_max; ++y) {
            const i128 s = x3 + static_cast<i128>(y) * y * y;
            const i128 zcap2 = static_cast<i128>(m) * x * y; // z^2 < m x y
            const i128 zcap = isqrt_i128(zcap2);
            for (i128 d = 1; d * d <= s; ++d) {
                if (s % d != 0) continue;
                const i128 cand[2] = {d, s / d};
                for (const i128 z : cand) {
                    if (z > zcap) continue;
                    if (z * z * z + s == static_cast<i128>(m) * x * y * z)
                        out.push_back({x, y, static_cast<long long>(z)});
                }
            }
        }
    }
}

} // namespace detail

/// All positive integer solutions of x^3 + y^3 + z^3 = m x y z with
/// x <= y <= y_max (z unbounded; any solution forces z < sqrt(mxy)).
/// Triples are reported sorted ascending componentwise (x <= y <= z after
/// per-triple sort), deduplicated, in lexicographic order. Deterministic
/// for any worker count.
inline std::vector<CubicSolution> search_cubic(long long m, long long y_max, int workers = 1) {
    if (m < 1) throw std::invalid_argument("search_cubic: m must be positive");
    if (y_max < 1) throw std::invalid_argument("search_cubic: y_max must be positive");
    if (y_max > 200000)
        throw std::invalid_argument("search_cubic: y_max beyond supported scale (2e5)");
    if (workers < 1) workers = 1;
    const int w = static_cast<int>(std::min<long long>(workers, y_max));

    std::vector<std::vector<std::array<long long, 3>>> parts(static_cast<std::size_t>(w));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i)
        pool.emplace_back(detail::search_cubic_stripe, m, y_max, static_cast<long long>(i + 1),
                          static_cast<long long>(w), std::ref(parts[static_cast<std::size_t>(i)]));
    for (auto& th : pool) th.join();

    std::vector<std::array<long long, 3>> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    for (auto& t : all) std::sort(t.begin(), t.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<CubicSolution> out;
    out.reserve(all.size());
    for (const auto& t : all) {
        CubicSolution s;
        s.x = Rat(static_cast<long>(t[0]));
        s.y = Rat(static_cast<long>(t[1]));
        s.z = Rat(static_cast<long>(t[2]));
        s.m = Rat(static_cast<long>(m));
        s.provenance = {CubicSource::search, -1};
        if (!satisfies_cubic(s))
            throw std::logic_error("search_cubic: candidate failed exact recheck"); // unreachable
        out.push_back(std::move(s));
    }
    return out;
}

/// m = 4k^2 with 3 not dividing k implies m is not in A_3.
inline bool a3_nonmember(long long m) {
    if (m < 1) throw std::invalid_argument("a3_nonmember: m must be positive");
    if (m % 4 != 0) return false;
    const long long q = m / 4;
    const long long k = isqrt_ll(q);
    if (k * k != q) return false;
    return k % 3 != 0;
}

} // namespace ratsum
