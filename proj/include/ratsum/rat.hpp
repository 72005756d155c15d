#pragma once

/**
 * @file rat.hpp
 * @brief Exact arbitrary-precision rationals kept in canonical reduced form.
 *
 * Thin value wrapper around GMP's mpq_class. Invariants, enforced at
 * construction and preserved by every operation:
 *   - denominator >= 1 (sign lives in the numerator),
 *   - gcd(|numerator|, denominator) = 1.
 * All arithmetic is exact; no floating point anywhere.
 */

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace ratsum {

// The long long overloads below delegate through long, which LP64 makes safe.
static_assert(sizeof(long long) == sizeof(long), "requires an LP64 target");

class Rat {
    mpq_class v_;

public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rat(int n) : v_(n) {}                        // NOLINT
    Rat(long long n) : v_(static_cast<long>(n)) {} // NOLINT: long long == long here
    explicit Rat(const mpz_class& n) : v_(n) {}

    template <typename N, typename D,
              typename = std::enable_if_t<std::is_integral_v<N> && std::is_integral_v<D>>>
    Rat(N num, D den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }

    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.get_num() = num;
        v_.get_den() = den;
        v_.canonicalize();
    }

    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading '-', base 10). Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rat parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(mpz_class(s));
            const mpz_class num(s.substr(0, slash));
            const mpz_class den(s.substr(slash + 1));
            if (den == 0) throw std::domain_error("zero denominator");
            return Rat(num, den);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
        }
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "p" when the denominator is 1, otherwise "p/q". parse() inverts this
    /// exactly, so serialize-then-parse is the identity.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat reciprocal() const {
        if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
        return Rat(v_.get_den(), v_.get_num());
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return wrap(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return wrap(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return wrap(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rat operator-() const { return wrap(-v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    // mpq arithmetic keeps canonical operands canonical; no re-reduce needed.
    static Rat wrap(mpq_class q) {
        Rat r;
        r.v_ = std::move(q);
        return r;
    }
};

inline Rat square(const Rat& a) { return a * a; }

} // namespace ratsum
