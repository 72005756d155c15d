#pragma once

/**
 * @file cycle.hpp
 * @brief Cyclic ratio witnesses and exhaustive k-cycle searches (k = 4, 5).
 *
 * A tuple (b_1, ..., b_k) of positive integers induces the witness
 * (b_2/b_1, b_3/b_2, ..., b_1/b_k): the product telescopes to 1, so the
 * tuple certifies n in A_k exactly when the ratio sum equals n.
 *
 * Searches fix the prefix (b_1, ..., b_{k-1}) and solve for the last entry:
 * clearing denominators makes the identity a quadratic in b_k,
 *   k = 4:  (b1 b2) b4^2 - b3 (n b1 b2 - b2^2 - b1 b3) b4 + b1^2 b2 b3 = 0
 *   k = 5:  (b1 b2 b3) b5^2 - b4 (n b1 b2 b3 - b2^2 b3 - b1 b3^2 - b1 b2 b4) b5
 *            + b1^2 b2 b3 b4 = 0
 * so only integer roots are accepted, never enumerated. Both roots are
 * positive exactly when the linear coefficient's bracket t is positive, and
 * t is strictly decreasing in the last prefix entry, which bounds that loop.
 * Partial prefix sums must stay below n, which bounds the earlier loops.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "rat.hpp"
#include "witness.hpp"

namespace ratsum {

struct CycleTuple {
    int k = 0;                // cycle length
    long long n = 0;          // target sum
    std::vector<long long> b; // k positive integers
};

inline bool cycle_identity_holds(const CycleTuple& t) {
    if (t.k < 1 || static_cast<std::size_t>(t.k) != t.b.size()) return false;
    if (t.n < 1) return false;
    for (long long e : t.b)
        if (e < 1) return false;
    Rat sum(0);
    for (int i = 0; i < t.k; ++i)
        sum += Rat(static_cast<long>(t.b[static_cast<std::size_t>((i + 1) % t.k)]),
                   static_cast<long>(t.b[static_cast<std::size_t>(i)]));
    return sum == Rat(static_cast<long>(t.n));
}

/// (b_2/b_1, ..., b_1/b_k). Pre: the identity holds (throws otherwise).
inline Witness cycle_to_witness(const CycleTuple& t) {
    if (!cycle_identity_holds(t))
        throw std::invalid_argument("cycle_to_witness: ratio sum does not equal the target");
    Witness w;
    w.n = t.k;
    w.m = Rat(static_cast<long>(t.n));
    w.values.reserve(static_cast<std::size_t>(t.k));
    for (int i = 0; i < t.k; ++i)
        w.values.emplace_back(static_cast<long>(t.b[static_cast<std::size_t>((i + 1) % t.k)]),
                              static_cast<long>(t.b[static_cast<std::size_t>(i)]));
    return w;
}

/// Lexicographically minimal rotation; the representative used for dedup.
inline std::vector<long long> canonical_rotation(const std::vector<long long>& b) {
    std::vector<long long> best = b;
    std::vector<long long> cur = b;
    for (std::size_t i = 1; i < b.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

inline bool is_primitive_tuple(const std::vector<long long>& b) {
    long long g = 0;
    for (long long e : b) g = std::gcd(g, e);
    return g == 1;
}

struct ScanOptions {
    int workers = 1;
    std::string checkpoint_path; // empty: no checkpointing
};

struct CycleScanResult {
    std::vector<CycleTuple> solutions; // primitive, canonical rotation, sorted
    unsigned long long scanned = 0;    // number of prefixes whose quadratic was solved
    bool resumed = false;
};

namespace detail {

using i128 = __int128;

inline mpz_class mpz_from_i128(i128 v) {
    const bool neg = v < 0;
    auto u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? mpz_class(-r) : r;
}

inline i128 isqrt_i128_c(i128 n) {
    if (n <= 0) return 0;
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Positive integer roots of A x^2 - S x + C = 0 given S, C > 0, capped at
/// `cap` when cap >= 0. Exact 128-bit arithmetic; caller guarantees S^2 fits.
inline void quad_roots_i128(i128 A, i128 S, i128 C, long long cap,
                            std::vector<long long>& roots) {
    const i128 disc = S * S - 4 * A * C;
    if (disc < 0) return;
    const i128 r = isqrt_i128_c(disc);
    if (r * r != disc) return;
    for (int sign = 0; sign < 2; ++sign) {
        const i128 num = sign == 0 ? S - r : S + r;
        if (num <= 0 || num % (2 * A) != 0) continue;
        const i128 x = num / (2 * A);
        if (cap >= 0 && x > cap) continue;
        roots.push_back(static_cast<long long>(x));
        if (r == 0) break; // double root
    }
}

/// mpz fallback for scans whose discriminant may exceed 128 bits.
inline void quad_roots_mpz(const mpz_class& A, const mpz_class& S, const mpz_class& C,
                           long long cap, std::vector<long long>& roots) {
    const mpz_class disc = S * S - 4 * A * C;
    if (disc < 0) return;
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
    const mpz_class twoA = 2 * A;
    for (int sign = 0; sign < 2; ++sign) {
        mpz_class num;
        if (sign == 0)
            num = S - r;
        else
            num = S + r;
        if (num <= 0 || num % twoA != 0) continue;
        const mpz_class x = num / twoA;
        if (cap >= 0 && x > static_cast<long>(cap)) continue;
        if (!x.fits_slong_p())
            throw std::overflow_error("cycle search: root exceeds long long");
        roots.push_back(x.get_si());
        if (r == 0) break;
    }
}

/// True when every discriminant the (k, n, b1_max, b_max) scan can produce
/// fits __int128: S <= n * b1_max * b_max^(k-2), and S^2 must stay below 2^126.
inline bool scan_fits_i128(int k, long long n, long long b1_max, long long b_max) {
    const long double cap = 8.0e37L; // < 2^126, with margin
    long double s = static_cast<long double>(n) * b1_max;
    for (int i = 0; i < k - 2; ++i) s *= static_cast<long double>(b_max);
    return s < 4.0e18L && s * s < cap;
}

struct StripeOut {
    std::vector<std::array<long long, 4>> tuples4;
    std::vector<std::array<long long, 5>> tuples5;
    unsigned long long scanned = 0;
};

/// k = 4 stripe: fixed b1, b2 in {b2_lo, b2_lo + stride, ...}.
inline void stripe4(long long n, long long b1, long long b2_lo, long long stride,
                    long long b_max, bool fast, StripeOut& out) {
    const i128 nb1 = static_cast<i128>(n) * b1;
    for (long long b2 = b2_lo; b2 <= b_max; b2 += stride) {
        if (static_cast<i128>(b2) >= nb1) break; // b2/b1 < n
        const i128 A = static_cast<i128>(b1) * b2;
        const i128 t0 = nb1 * b2 - static_cast<i128>(b2) * b2; // t = t0 - b1*b3
        for (long long b3 = 1; b3 <= b_max; ++b3) {
            const i128 t = t0 - static_cast<i128>(b1) * b3;
            if (t <= 0) break;
            ++out.scanned;
            std::vector<long long> roots;
            if (fast) {
                quad_roots_i128(A, static_cast<i128>(b3) * t,
                                static_cast<i128>(b1) * b1 * b2 * b3, b_max, roots);
            } else {
                quad_roots_mpz(mpz_from_i128(A), mpz_class(static_cast<long>(b3)) * mpz_from_i128(t),
                               mpz_class(static_cast<long>(b1)) * static_cast<long>(b1) *
                                   static_cast<long>(b2) * static_cast<long>(b3),
                               b_max, roots);
            }
            for (long long b4 : roots) out.tuples4.push_back({b1, b2, b3, b4});
        }
    }
}

/// k = 5 stripe: fixed b1, b2 striped, b3 and b4 bounded by partial sums.
inline void stripe5(long long n, long long b1, long long b2_lo, long long stride,
                    long long b_max, bool fast, StripeOut& out) {
    const i128 nb1 = static_cast<i128>(n) * b1;
    for (long long b2 = b2_lo; b2 <= b_max; b2 += stride) {
        if (static_cast<i128>(b2) >= nb1) break;
        const i128 t40 = nb1 * b2 - static_cast<i128>(b2) * b2;
        for (long long b3 = 1; b3 <= b_max; ++b3) {
            if (t40 - static_cast<i128>(b1) * b3 <= 0) break; // b2/b1 + b3/b2 < n
            const i128 A = static_cast<i128>(b1) * b2 * b3;
            const i128 t50 = (t40 - static_cast<i128>(b1) * b3) * b3; // n b1b2b3 - b2^2 b3 - b1 b3^2
            for (long long b4 = 1; b4 <= b_max; ++b4) {
                const i128 t = t50 - static_cast<i128>(b1) * b2 * b4;
                if (t <= 0) break;
                ++out.scanned;
                std::vector<long long> roots;
                if (fast) {
                    quad_roots_i128(A, static_cast<i128>(b4) * t,
                                    static_cast<i128>(b1) * b1 * b2 * b3 * b4, b_max, roots);
                } else {
                    quad_roots_mpz(mpz_from_i128(A),
                                   mpz_class(static_cast<long>(b4)) * mpz_from_i128(t),
                                   mpz_class(static_cast<long>(b1)) * static_cast<long>(b1) *
                                       static_cast<long>(b2) * static_cast<long>(b3) *
                                       static_cast<long>(b4),
                                   b_max, roots);
                }
                for (long long b5 : roots) out.tuples5.push_back({b1, b2, b3, b4, b5});
            }
        }
    }
}

struct Checkpoint {
    int k = 0;
    long long n = 0, b1_max = 0, b_max = 0;
    long long next_b1 = 1;
    unsigned long long scanned = 0;
    std::vector<std::vector<long long>> raw; // tuples found so far, scan order
};

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw std::runtime_error("checkpoint: cannot write " + tmp);
        f << "ratsum-cycle-checkpoint v1\n";
        f << "k " << c.k << "\n";
        f << "n " << c.n << "\n";
        f << "b1max " << c.b1_max << "\n";
        f << "bmax " << c.b_max << "\n";
        f << "next_b1 " << c.next_b1 << "\n";
        f << "scanned " << c.scanned << "\n";
        f << "solutions " << c.raw.size() << "\n";
        for (const auto& t : c.raw) {
            for (std::size_t i = 0; i < t.size(); ++i) f << (i ? " " : "") << t[i];
            f << "\n";
        }
    }
    std::rename(tmp.c_str(), path.c_str());
}

inline std::optional<Checkpoint> read_checkpoint(const std::string& path, int k) {
    std::ifstream f(path);
    if (!f) return std::nullopt;
    Checkpoint c;
    std::string header;
    if (!std::getline(f, header) || header != "ratsum-cycle-checkpoint v1")
        throw parse_error("checkpoint: bad header in " + path);
    std::string key;
    std::size_t count = 0;
    auto expect = [&](const char* name, auto& val) {
        if (!(f >> key >> val) || key != name)
            throw schema_error(std::string("checkpoint: expected field '") + name + "' in " + path);
    };
    expect("k", c.k);
    expect("n", c.n);
    expect("b1max", c.b1_max);
    expect("bmax", c.b_max);
    expect("next_b1", c.next_b1);
    expect("scanned", c.scanned);
    expect("solutions", count);
    c.raw.resize(count, std::vector<long long>(static_cast<std::size_t>(c.k)));
    for (auto& t : c.raw)
        for (auto& e : t)
            if (!(f >> e)) throw schema_error("checkpoint: truncated solution list in " + path);
    if (c.k != k) throw verification_error("checkpoint: cycle length mismatch in " + path);
    return c;
}

inline CycleScanResult run_scan(int k, long long n, long long b1_max, long long b_max,
                                const ScanOptions& opts) {
    if (n < 1 || b1_max < 1 || b_max < 1)
        throw std::invalid_argument("cycle search: bounds and target must be positive");
    if (b1_max > b_max) throw std::invalid_argument("cycle search: b1_max must be <= b_max");
    if (n > 1000000000LL || b_max > 1000000000LL)
        throw std::invalid_argument("cycle search: bound beyond supported scale (1e9)");

    Checkpoint state;
    state.k = k;
    state.n = n;
    state.b1_max = b1_max;
    state.b_max = b_max;
    CycleScanResult res;

    if (!opts.checkpoint_path.empty()) {
        if (auto prev = read_checkpoint(opts.checkpoint_path, k)) {
            if (prev->n != n || prev->b1_max != b1_max || prev->b_max != b_max)
                throw verification_error("checkpoint: parameters do not match requested scan");
            state = *prev;
            res.resumed = true;
        }
    }

    const bool fast = scan_fits_i128(k, n, b1_max, b_max);
    const int w = std::max(1, opts.workers);

    for (long long b1 = state.next_b1; b1 <= b1_max; ++b1) {
        std::vector<StripeOut> parts(static_cast<std::size_t>(w));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) {
            StripeOut& slot = parts[static_cast<std::size_t>(i)];
            const long long lo = i + 1;
            if (k == 4)
                pool.emplace_back([=, &slot] { stripe4(n, b1, lo, w, b_max, fast, slot); });
            else
                pool.emplace_back([=, &slot] { stripe5(n, b1, lo, w, b_max, fast, slot); });
        }
        for (auto& th : pool) th.join();

        std::vector<std::vector<long long>> batch;
        for (auto& p : parts) {
            state.scanned += p.scanned;
            for (const auto& t : p.tuples4) batch.emplace_back(t.begin(), t.end());
            for (const auto& t : p.tuples5) batch.emplace_back(t.begin(), t.end());
        }
        std::sort(batch.begin(), batch.end());
        for (auto& t : batch) state.raw.push_back(std::move(t));

        state.next_b1 = b1 + 1;
        if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, state);
    }

    // Primitive filter, canonical rotation, dedup. Raw order is already
    // deterministic, so the final list is too, for any worker count.
    std::vector<std::vector<long long>> canon;
    canon.reserve(state.raw.size());
    for (const auto& t : state.raw)
        if (is_primitive_tuple(t)) canon.push_back(canonical_rotation(t));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    res.scanned = state.scanned;
    res.solutions.reserve(canon.size());
    for (auto& b : canon) {
        CycleTuple t{k, n, std::move(b)};
        if (!cycle_identity_holds(t))
            throw std::logic_error("cycle search: solution failed exact recheck"); // unreachable
        res.solutions.push_back(std::move(t));
    }
    return res;
}

} // namespace detail

/// All 4-cycles for n inside the box b1 <= b1_max, b2, b3, b4 <= b_max,
/// reported as primitive tuples deduplicated by minimal rotation, sorted.
inline CycleScanResult search_four_cycle(long long n, long long b1_max, long long b_max,
                                         const ScanOptions& opts = {}) {
    return detail::run_scan(4, n, b1_max, b_max, opts);
}

/// Same contract for 5-cycles.
inline CycleScanResult search_five_cycle(long long n, long long b1_max, long long b_max,
                                         const ScanOptions& opts = {}) {
    return detail::run_scan(5, n, b1_max, b_max, opts);
}

/// Membership variant: enumerates prefixes b1, b2, b3 <= prefix_max only;
/// b4 is the exact quadratic root and may be arbitrarily large. Returns the
/// first solution in scan order (deterministic), or nullopt.
inline std::optional<CycleTuple> find_four_cycle(long long n, long long prefix_max) {
    if (n < 1 || prefix_max < 1)
        throw std::invalid_argument("find_four_cycle: arguments must be positive");
    if (n > 1000000000LL || prefix_max > 1000000LL)
        throw std::invalid_argument("find_four_cycle: bound beyond supported scale");
    using detail::i128;
    const bool fast = detail::scan_fits_i128(4, n, prefix_max, prefix_max);
    for (long long b1 = 1; b1 <= prefix_max; ++b1) {
        const i128 nb1 = static_cast<i128>(n) * b1;
        for (long long b2 = 1; b2 <= prefix_max; ++b2) {
            if (static_cast<i128>(b2) >= nb1) break;
            const i128 A = static_cast<i128>(b1) * b2;
            const i128 t0 = nb1 * b2 - static_cast<i128>(b2) * b2;
            for (long long b3 = 1; b3 <= prefix_max; ++b3) {
                const i128 t = t0 - static_cast<i128>(b1) * b3;
                if (t <= 0) break;
                std::vector<long long> roots;
                if (fast)
                    detail::quad_roots_i128(A, static_cast<i128>(b3) * t,
                                            static_cast<i128>(b1) * b1 * b2 * b3, -1, roots);
                else
                    detail::quad_roots_mpz(detail::mpz_from_i128(A),
                                           mpz_class(static_cast<long>(b3)) * detail::mpz_from_i128(t),
                                           detail::mpz_from_i128(static_cast<i128>(b1) * b1 * b2 * b3),
                                           -1, roots);
                if (!roots.empty()) {
                    CycleTuple out{4, n, {b1, b2, b3, roots.front()}};
                    if (!cycle_identity_holds(out))
                        throw std::logic_error("find_four_cycle: root failed recheck");
                    return out;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace ratsum
