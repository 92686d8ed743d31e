#pragma once

#include "matconic/quadint.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace matconic {

/**
 * Integer linear recurrence of order m with an optional additive constant:
 *
 *   s(n) = coeffs[0]*s(n-1) + ... + coeffs[m-1]*s(n-m) + additive_const
 *
 * for n >= m, with s(0)..s(m-1) given by `initial`. When additive_const is
 * zero the characteristic polynomial is
 * t^m - coeffs[0]*t^(m-1) - ... - coeffs[m-1].
 */
struct LrsSpec {
    std::vector<mpz_class> coeffs;
    mpz_class additive_const = 0;
    std::vector<mpz_class> initial;

    std::size_t order() const noexcept { return coeffs.size(); }

    /// Monic characteristic polynomial of the homogeneous part, constant
    /// term first.
    std::vector<mpz_class> char_poly() const;
};

/// First `count` terms. Throws if the spec is malformed (order zero, or
/// initial conditions not matching the order).
std::vector<mpz_class> lrs_terms(const LrsSpec& spec, std::size_t count);

// The named sequences attached to the conic family C(w). b, c and u are
// integer sequences defined for every integer w >= 4 (squares included);
// a lives in Z[sqrt(w)] and needs non-square w.
//
//   b: t^2 - (w-2)t + 1, starts 0, 1
//   c: t^2 - (w-2)t + 1, starts 1, w-1
//   u: order 2 plus additive constant 2, starts 0, 1
LrsSpec b_spec(long w);
LrsSpec c_spec(long w);
LrsSpec u_spec(long w);

/// Integer a-sequence for square w = k^2: t^2 - kt + 1, starts 0, 1.
LrsSpec a_square_spec(long w);

mpz_class seq_b(long w, std::size_t n);
mpz_class seq_c(long w, std::size_t n);
mpz_class seq_u(long w, std::size_t n);

/// a(0)..a(count-1) in Z[sqrt(w)]: a(n+1) = sqrt(w)*a(n) - a(n-1),
/// starting 0, 1. Requires non-square w.
std::vector<QuadInt> seq_a_terms(long w, std::size_t count);
QuadInt seq_a(long w, std::size_t n);

/// 2x2 matrix over Z[sqrt(w)], rows (a b; c d).
struct QuadMatrix2 {
    QuadInt a, b, c, d;

    QuadMatrix2 operator*(const QuadMatrix2& o) const;
    bool operator==(const QuadMatrix2& o) const;
    QuadInt det() const { return a * d - b * c; }

    static QuadMatrix2 identity(long w);
};

/// Companion matrix (0 1; -1 sqrt(w)) of t^2 - sqrt(w)t + 1.
QuadMatrix2 matrix_M(long w);

/// matrix_M(w)^n for n >= 1, by binary exponentiation. The entries are
/// (-a(n-1), a(n); -a(n), a(n+1)), and the determinant stays 1.
QuadMatrix2 matrix_M_power(long w, std::size_t n);

/// Fold a nonzero additive constant into a homogeneous spec of order m+1
/// whose characteristic polynomial is (t - 1) * spec.char_poly() and whose
/// initial conditions are the first m+1 terms of the input. Throws when the
/// constant is zero.
LrsSpec absorb_constant(const LrsSpec& spec);

/// Characteristic polynomial of companion(f) (x) companion(g), the Kronecker
/// product. It annihilates every termwise product of a sequence annihilated
/// by f with one annihilated by g. Polynomials are monic with integer
/// coefficients, constant term first; degree is deg(f)*deg(g) <= 16.
std::vector<mpz_class> kronecker_char_poly(const std::vector<mpz_class>& f,
                                           const std::vector<mpz_class>& g);

} // namespace matconic
