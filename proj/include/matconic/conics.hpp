#pragma once

#include "matconic/quadint.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace matconic {

// The three curves attached to a parameter w >= 4:
//
//   C   x^2 - sqrt(w) xy + y^2 = 1
//   C2  (x + y - 1)^2 = w xy
//   C3  (x + y)^2 = w (x + 1)(y + 1)
enum class Conic { C, C2, C3 };

/// Which branch of the radical-point set a point of C(w) lives on: L holds
/// points (u*sqrt(w), v) with u*sqrt(w) > v, R holds (u, v*sqrt(w)) with
/// u > v*sqrt(w), u and v natural numbers.
enum class Side { L, R };

std::string to_string(Conic conic);
std::string to_string(Side side);

/// Coordinate value: a plain integer, or an element of Z[sqrt(w)] when the
/// curve is C(w) with non-square w.
using Coord = std::variant<mpz_class, QuadInt>;

/// Exact membership test. The QuadInt overload is only meaningful for C
/// with non-square w; the integer overload covers C2, C3, and C with
/// square w (where sqrt(w) is an integer). Mismatched radicands throw.
bool on_conic(Conic conic, long w, const mpz_class& x, const mpz_class& y);
bool on_conic(Conic conic, long w, const QuadInt& x, const QuadInt& y);
bool on_conic(Conic conic, long w, const Coord& x, const Coord& y);

/**
 * A verified point of C(w), C2(w) or C3(w): construction evaluates the
 * defining equation exactly and throws std::domain_error when it fails, so
 * an instance is always a genuine point of its curve. `index` records the
 * position in the generated ladder; points found by brute-force scans carry
 * none. `side` is the L/R branch tag for radical points of C.
 */
class ConicPoint {
public:
    ConicPoint(Conic conic, long w, Coord x, Coord y,
               std::optional<std::size_t> index = std::nullopt,
               std::optional<Side> side = std::nullopt);

    Conic conic() const noexcept { return conic_; }
    long w() const noexcept { return w_; }
    const Coord& x() const noexcept { return x_; }
    const Coord& y() const noexcept { return y_; }
    std::optional<std::size_t> index() const noexcept { return index_; }
    std::optional<Side> side() const noexcept { return side_; }

private:
    Conic conic_;
    long w_;
    Coord x_, y_;
    std::optional<std::size_t> index_;
    std::optional<Side> side_;
};

/// Render a coordinate: decimal for integers, "p+q*sqrt(w)" otherwise.
std::string coord_str(const Coord& c);

/// Branch classification of a radical point, in lowest terms: L holds the
/// point (u*sqrt(w), v), R the point (u, v*sqrt(w)).
struct RadicalPointClass {
    Side side;
    mpz_class u;
    mpz_class v;

    bool operator==(const RadicalPointClass&) const = default;
};

/// P(1)..P(count) with P(n) = (a(n), a(n-1)), the complete list of radical
/// points of C(w) in increasing order. Requires non-square w.
std::vector<ConicPoint> radical_points(long w, std::size_t count);

/// The counterpart for square w = k^2, where sqrt(w) is an integer and the
/// same ladder enumerates all integer points with x >= y >= 0.
std::vector<ConicPoint> integer_points(long w, std::size_t count);

/// L/R split of a radical point produced by radical_points(). The trivial
/// point (1, 0) classifies as R with v = 0.
RadicalPointClass classify_radical_point(const ConicPoint& p);

/// Brute-force search for radical points, independent of the ladder: scans
/// every u in [1, bound] and solves for the partner coordinate exactly,
/// keeping solutions with integer part at most bound*ceil(sqrt(w)). Output
/// is ordered by u, then by the partner value. Requires non-square w.
std::vector<RadicalPointClass> oracle_radical_points(long w, const mpz_class& bound);

using IntPair = std::pair<mpz_class, mpz_class>;

/// First `count` rungs (u(n+1), u(n)) of the C2 ladder, starting (1, 0).
std::vector<IntPair> solve_C2(long w, std::size_t count);

/// First `count` positive C3 solutions (2u(n+1)-1, 2u(n)-1), n >= 1.
std::vector<IntPair> solve_C3(long w, std::size_t count);

// Exhaustive scans for all solutions with x >= y >= 1 and x <= bound,
// ascending by x. For each y the curve equation is a monic quadratic in x,
// solved exactly via its discriminant.
std::vector<IntPair> oracle_C2(long w, const mpz_class& bound);
std::vector<IntPair> oracle_C3(long w, const mpz_class& bound);

/// One step (x, y) -> (y, (y-1)^2 / x) down the C2 ladder. Requires
/// x >= y >= 1; throws std::domain_error when the division is not exact or
/// the result leaves the curve, both of which mean the input was not a
/// genuine C2(w) point.
IntPair vieta_descent(long w, const mpz_class& x, const mpz_class& y);

/// (x, y) -> (x^2, y^2), taking points of C(w) to points of C2(w).
ConicPoint map_C_to_C2(const ConicPoint& p);

/// (x, y) -> (2x - 1, 2y - 1), taking points of C2(w) to points of C3(w).
ConicPoint map_C2_to_C3(long w, const mpz_class& x, const mpz_class& y);

/// (x, y) -> (2x^2 - 1, 2y^2 - 1), the composition of the two maps above.
ConicPoint map_C_to_C3(const ConicPoint& p);

} // namespace matconic
