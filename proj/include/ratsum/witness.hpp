#pragma once

/**
 * @file witness.hpp
 * @brief Witness tuples: n positive rationals with product 1 and declared sum m.
 *
 * The declared sum is an exact rational. Top-level targets are integers; the
 * rational field exists because certificate sub-blocks may carry half-integer
 * sums (the even-parameter quartic family) and a block expansion is itself a
 * witness for its declared sub-sum.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "rat.hpp"

namespace ratsum {

struct Witness {
    long long n = 0;        // declared count
    Rat m;                  // declared sum
    std::vector<Rat> values;
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic; // names the first violated invariant; empty when ok

    explicit operator bool() const { return ok; }
};

/// Checks, in order: count matches, every value positive, product exactly 1,
/// sum exactly m. Stops at the first violation.
inline VerifyResult verify_witness(const Witness& w) {
    if (w.n < 1) return {false, "count: declared n must be positive"};
    if (static_cast<long long>(w.values.size()) != w.n)
        return {false, "count: " + std::to_string(w.values.size()) + " values, declared n = " +
                           std::to_string(w.n)};
    for (std::size_t i = 0; i < w.values.size(); ++i)
        if (!w.values[i].is_positive())
            return {false, "positivity: value at index " + std::to_string(i) +
                               " is " + w.values[i].str()};
    Rat prod(1);
    for (const Rat& v : w.values) prod *= v;
    if (prod != Rat(1)) return {false, "product: got " + prod.str() + ", expected 1"};
    Rat sum(0);
    for (const Rat& v : w.values) sum += v;
    if (sum != w.m) return {false, "sum: got " + sum.str() + ", declared m = " + w.m.str()};
    return {true, ""};
}

/// (n1, m1, v1) x (n2, m2, v2) -> (n1+n2, m1+m2, v1 ++ v2).
/// Pre: both inputs verify (throws std::invalid_argument otherwise).
inline Witness compose(const Witness& a, const Witness& b) {
    if (auto r = verify_witness(a); !r)
        throw std::invalid_argument("compose: left operand invalid (" + r.diagnostic + ")");
    if (auto r = verify_witness(b); !r)
        throw std::invalid_argument("compose: right operand invalid (" + r.diagnostic + ")");
    Witness out;
    out.n = a.n + b.n;
    out.m = a.m + b.m;
    out.values = a.values;
    out.values.insert(out.values.end(), b.values.begin(), b.values.end());
    return out;
}

/// The trivial witness (1, 1, ..., 1): n = m = k.
inline Witness ones_witness(long long k) {
    if (k < 1) throw std::invalid_argument("ones_witness: k must be positive");
    Witness w;
    w.n = k;
    w.m = Rat(static_cast<long>(k));
    w.values.assign(static_cast<std::size_t>(k), Rat(1));
    return w;
}

} // namespace ratsum
