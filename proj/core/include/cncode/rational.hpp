#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "cncode/errors.hpp"

namespace cncode {

/// Arbitrary-precision integer. Alias of the GMP C++ integer type; all bound
/// arithmetic (binomial sums, powers of two) runs through this.
using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Used for the metric parameter r, discrepancy values and
/// bound right-hand sides so that threshold comparisons are never subject
/// to floating-point rounding.
class Ratio {
public:
    Ratio() : q_(0) {}
    Ratio(int v) : q_(v) {}
    Ratio(long v) : q_(static_cast<signed long>(v)) {}
    Ratio(const BigInt& v) : q_(v) {}
    Ratio(const BigInt& num, const BigInt& den);

    /// Parses "a" or "a/b" with optional sign. Decimal points and
    /// exponents are rejected; inexact input has no path into Ratio.
    static Ratio parse(std::string_view text);

    BigInt num() const { return BigInt(q_.get_num()); }
    BigInt den() const { return BigInt(q_.get_den()); }

    bool is_integer() const { return q_.get_den() == 1; }

    /// Largest integer <= value.
    BigInt floor() const;
    /// Largest integer < value (= floor - 1 at integers). Sphere-packing
    /// radii use this strict form.
    BigInt strict_floor() const;
    /// Smallest integer >= value.
    BigInt ceil() const;

    /// Canonical form: "a" when integral, "a/b" otherwise.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    friend Ratio operator+(const Ratio& a, const Ratio& b) { return Ratio(a.q_ + b.q_); }
    friend Ratio operator-(const Ratio& a, const Ratio& b) { return Ratio(a.q_ - b.q_); }
    friend Ratio operator*(const Ratio& a, const Ratio& b) { return Ratio(a.q_ * b.q_); }
    friend Ratio operator/(const Ratio& a, const Ratio& b);
    friend Ratio operator-(const Ratio& a) { return Ratio(-a.q_); }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return a.q_ != b.q_; }
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Ratio& a, const Ratio& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return a.q_ >= b.q_; }

private:
    explicit Ratio(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// 2^e as an exact ratio; e may be negative.
Ratio pow2_ratio(long e);

/// 2^e as an integer; e must be >= 0.
BigInt pow2_int(unsigned long e);

/// Binomial coefficient C(n, k), 0 for k > n.
BigInt binomial(unsigned long n, unsigned long k);

} // namespace cncode
