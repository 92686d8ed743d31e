#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace matconic {

/// Exact integer square root probe: returns r with r*r == n when n is a
/// perfect square, nothing otherwise (all negative n included).
std::optional<mpz_class> is_perfect_square(const mpz_class& n);

/// True when w is the square of an integer.
bool is_square(long w);

/// Smallest integer >= sqrt(w); w must be nonnegative.
mpz_class ceil_sqrt(long w);

/**
 * Element p + q*sqrt(w) of Z[sqrt(w)] for a fixed non-square integer w >= 4.
 *
 * sqrt(w) is irrational, so the (p, q) representation is unique and equality
 * is componentwise. Components are arbitrary-precision integers and every
 * operation is exact. Elements of different rings never mix: binary
 * operations throw on mismatched w. Ordering is the one inherited from the
 * real embedding, decided by sign analysis without floating point.
 *
 * Values are immutable after construction and safe to share across threads.
 */
class QuadInt {
public:
    QuadInt(mpz_class rat, mpz_class rad, long w);

    static QuadInt integer(mpz_class value, long w) { return QuadInt(std::move(value), 0, w); }
    static QuadInt sqrt_w(long w) { return QuadInt(0, 1, w); }

    const mpz_class& rat() const noexcept { return rat_; }
    const mpz_class& rad() const noexcept { return rad_; }
    long w() const noexcept { return w_; }

    bool is_zero() const noexcept { return rat_ == 0 && rad_ == 0; }
    bool is_integer() const noexcept { return rad_ == 0; }

    /// Field norm down to Z: rat^2 - w * rad^2. Multiplicative.
    mpz_class norm() const { return rat_ * rat_ - rad_ * rad_ * w_; }

    /// Sign of the real value: -1, 0 or +1.
    int sign() const;

    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator-() const;
    QuadInt operator*(const QuadInt& o) const;
    QuadInt operator*(const mpz_class& s) const { return QuadInt(rat_ * s, rad_ * s, w_); }

    bool operator==(const QuadInt& o) const;
    std::strong_ordering operator<=>(const QuadInt& o) const;

    /// Canonical rendering "p+q*sqrt(w)" with zero components suppressed,
    /// e.g. "0", "11", "3*sqrt(5)", "4-sqrt(7)".
    std::string str() const;

    /// Inverse of str(); the embedded sqrt argument, when present, must
    /// equal w. Throws std::invalid_argument on malformed input.
    static QuadInt parse(const std::string& text, long w);

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& q) { return os << q.str(); }

private:
    void check_same_ring(const QuadInt& o) const;

    mpz_class rat_;
    mpz_class rad_;
    long w_;
};

} // namespace matconic
