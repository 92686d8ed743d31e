#include "matconic/conics.hpp"

#include "matconic/lrs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace matconic {

std::string to_string(Conic conic) {
    switch (conic) {
    case Conic::C: return "C";
    case Conic::C2: return "C2";
    case Conic::C3: return "C3";
    }
    throw std::logic_error("to_string: bad conic");
}

std::string to_string(Side side) {
    return side == Side::L ? "L" : "R";
}

namespace {

void check_w(long w) {
    if (w < 4)
        throw std::invalid_argument("conic parameter w must be >= 4, got " + std::to_string(w));
}

void check_nonsquare(long w) {
    check_w(w);
    if (is_square(w))
        throw std::invalid_argument("operation needs non-square w, got " + std::to_string(w));
}

} // namespace

bool on_conic(Conic conic, long w, const mpz_class& x, const mpz_class& y) {
    check_w(w);
    switch (conic) {
    case Conic::C: {
        if (!is_square(w)) {
            // Integer coordinates embed into Z[sqrt(w)] with zero radical part.
            return on_conic(conic, w, QuadInt::integer(x, w), QuadInt::integer(y, w));
        }
        mpz_class k = *is_perfect_square(mpz_class(w));
        return x * x - k * x * y + y * y == 1;
    }
    case Conic::C2: {
        mpz_class s = x + y - 1;
        return s * s == w * x * y;
    }
    case Conic::C3: {
        mpz_class s = x + y;
        return s * s == w * (x + 1) * (y + 1);
    }
    }
    throw std::logic_error("on_conic: bad conic");
}

bool on_conic(Conic conic, long w, const QuadInt& x, const QuadInt& y) {
    check_w(w);
    if (conic != Conic::C)
        throw std::invalid_argument("on_conic: " + to_string(conic) + " has integer coordinates");
    if (x.w() != w || y.w() != w)
        throw std::invalid_argument("on_conic: coordinate radicand does not match w");
    QuadInt lhs = x * x - QuadInt::sqrt_w(w) * x * y + y * y;
    return lhs == QuadInt::integer(1, w);
}

bool on_conic(Conic conic, long w, const Coord& x, const Coord& y) {
    if (std::holds_alternative<mpz_class>(x) && std::holds_alternative<mpz_class>(y))
        return on_conic(conic, w, std::get<mpz_class>(x), std::get<mpz_class>(y));
    if (conic != Conic::C || is_square(w))
        throw std::invalid_argument("on_conic: radical coordinates only belong to C with non-square w");
    auto lift = [w](const Coord& c) {
        if (std::holds_alternative<QuadInt>(c))
            return std::get<QuadInt>(c);
        return QuadInt::integer(std::get<mpz_class>(c), w);
    };
    return on_conic(conic, w, lift(x), lift(y));
}

ConicPoint::ConicPoint(Conic conic, long w, Coord x, Coord y,
                       std::optional<std::size_t> index, std::optional<Side> side)
    : conic_(conic), w_(w), x_(std::move(x)), y_(std::move(y)), index_(index), side_(side) {
    check_w(w);
    bool radical_ok = conic == Conic::C && !is_square(w);
    auto has_radical = [](const Coord& c) {
        return std::holds_alternative<QuadInt>(c) && std::get<QuadInt>(c).rad() != 0;
    };
    if (!radical_ok && (std::holds_alternative<QuadInt>(x_) || std::holds_alternative<QuadInt>(y_)))
        throw std::invalid_argument("ConicPoint: " + to_string(conic) +
                                    " with this w has integer coordinates");
    // A point of C with non-square w carries the radical in at most one
    // coordinate; both-radical combinations cannot satisfy the equation.
    if (radical_ok && has_radical(x_) && has_radical(y_))
        throw std::invalid_argument("ConicPoint: both coordinates carry a radical part");
    if (!on_conic(conic_, w_, x_, y_))
        throw std::domain_error("ConicPoint: (" + coord_str(x_) + ", " + coord_str(y_) +
                                ") is not on " + to_string(conic) + "(" + std::to_string(w) + ")");
}

std::string coord_str(const Coord& c) {
    if (std::holds_alternative<mpz_class>(c))
        return std::get<mpz_class>(c).get_str();
    return std::get<QuadInt>(c).str();
}

std::vector<ConicPoint> radical_points(long w, std::size_t count) {
    check_nonsquare(w);
    std::vector<QuadInt> a = seq_a_terms(w, count + 1);
    std::vector<ConicPoint> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        Side side = (n % 2 == 0) ? Side::L : Side::R;
        out.emplace_back(Conic::C, w, a[n], a[n - 1], n, side);
    }
    return out;
}

std::vector<ConicPoint> integer_points(long w, std::size_t count) {
    check_w(w);
    if (!is_square(w))
        throw std::invalid_argument("integer_points: w must be a perfect square, got " +
                                    std::to_string(w));
    std::vector<mpz_class> s = lrs_terms(a_square_spec(w), count + 1);
    std::vector<ConicPoint> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n)
        out.emplace_back(Conic::C, w, s[n], s[n - 1], n, std::nullopt);
    return out;
}

RadicalPointClass classify_radical_point(const ConicPoint& p) {
    if (p.conic() != Conic::C || is_square(p.w()))
        throw std::invalid_argument("classify_radical_point: not a radical point of C");
    long w = p.w();
    auto lift = [w](const Coord& c) {
        if (std::holds_alternative<QuadInt>(c))
            return std::get<QuadInt>(c);
        return QuadInt::integer(std::get<mpz_class>(c), w);
    };
    QuadInt x = lift(p.x());
    QuadInt y = lift(p.y());
    if (x.rad() != 0) {
        // (u sqrt(w), v) with u sqrt(w) > v
        RadicalPointClass cls{Side::L, x.rad(), y.rat()};
        if (x.rat() != 0 || y.rad() != 0 || !(x > y))
            throw std::domain_error("classify_radical_point: not in L form");
        if (cls.u < 0 || cls.v < 0)
            throw std::domain_error("classify_radical_point: negative components");
        return cls;
    }
    // (u, v sqrt(w)) with u > v sqrt(w); covers the trivial point (1, 0).
    RadicalPointClass cls{Side::R, x.rat(), y.rad()};
    if (y.rat() != 0 || !(x > y))
        throw std::domain_error("classify_radical_point: not in R form");
    if (cls.u < 0 || cls.v < 0)
        throw std::domain_error("classify_radical_point: negative components");
    return cls;
}

std::vector<RadicalPointClass> oracle_radical_points(long w, const mpz_class& bound) {
    check_nonsquare(w);
    if (bound < 1)
        throw std::invalid_argument("oracle_radical_points: bound must be >= 1");
    mpz_class vmax = bound * ceil_sqrt(w);
    std::vector<RadicalPointClass> out;
    // Solutions of s^2 w + t^2 - w s t = 1 with s in [1, bound] and
    // t in [0, vmax]. For fixed s this is t^2 - (ws)t + (s^2 w - 1) = 0,
    // with discriminant w(w-4)s^2 + 4. The pair (s sqrt(w), t) is an L
    // point when s sqrt(w) > t, and the mirror point (t, s sqrt(w)) is an
    // R point when t > s sqrt(w); equality would make sqrt(w) rational.
    for (mpz_class s = 1; s <= bound; ++s) {
        mpz_class disc = w * (w - 4) * s * s + 4;
        auto root = is_perfect_square(disc);
        if (!root)
            continue;
        for (int pick = 0; pick < 2; ++pick) {
            mpz_class num = pick == 0 ? mpz_class(w * s - *root) : mpz_class(w * s + *root);
            assert(num > 0);
            if (mpz_odd_p(num.get_mpz_t()))
                continue;
            mpz_class t = num / 2;
            if (t > vmax)
                continue;
            if (s * s * w > t * t)
                out.push_back({Side::L, s, t});
            else
                out.push_back({Side::R, t, s});
        }
    }
    return out;
}

std::vector<IntPair> solve_C2(long w, std::size_t count) {
    check_w(w);
    std::vector<mpz_class> u = lrs_terms(u_spec(w), count + 1);
    std::vector<IntPair> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        out.emplace_back(u[n + 1], u[n]);
    return out;
}

std::vector<IntPair> solve_C3(long w, std::size_t count) {
    check_w(w);
    std::vector<mpz_class> u = lrs_terms(u_spec(w), count + 2);
    std::vector<IntPair> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n)
        out.emplace_back(2 * u[n + 1] - 1, 2 * u[n] - 1);
    return out;
}

namespace {

// Shared scan for the two integer curves: for y in [1, bound] the equation
// is a monic quadratic x^2 - B(y) x + C(y) = 0, solved exactly. Solutions
// with y <= x <= bound are collected and sorted by (x, y).
template <typename BFn, typename CFn>
std::vector<IntPair> quadratic_scan(Conic conic, long w, const mpz_class& bound,
                                    BFn linear_term, CFn constant_term) {
    if (bound < 1)
        throw std::invalid_argument("oracle bound must be >= 1");
    std::vector<IntPair> out;
    for (mpz_class y = 1; y <= bound; ++y) {
        mpz_class b = linear_term(y);
        mpz_class c = constant_term(y);
        mpz_class disc = b * b - 4 * c;
        auto root = is_perfect_square(disc);
        if (!root)
            continue;
        for (int pick = 0; pick < 2; ++pick) {
            mpz_class num = pick == 0 ? mpz_class(b - *root) : mpz_class(b + *root);
            if (num <= 0 || mpz_odd_p(num.get_mpz_t()))
                continue;
            mpz_class x = num / 2;
            if (x < y || x > bound)
                continue;
            assert(on_conic(conic, w, x, y));
            out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<IntPair> oracle_C2(long w, const mpz_class& bound) {
    check_w(w);
    // (x + y - 1)^2 = wxy  <=>  x^2 - (wy - 2(y-1)) x + (y-1)^2 = 0
    return quadratic_scan(
        Conic::C2, w, bound,
        [w](const mpz_class& y) { return mpz_class(w * y - 2 * (y - 1)); },
        [](const mpz_class& y) { return mpz_class((y - 1) * (y - 1)); });
}

std::vector<IntPair> oracle_C3(long w, const mpz_class& bound) {
    check_w(w);
    // (x + y)^2 = w(x+1)(y+1)  <=>  x^2 - (w(y+1) - 2y) x + (y^2 - w(y+1)) = 0
    return quadratic_scan(
        Conic::C3, w, bound,
        [w](const mpz_class& y) { return mpz_class(w * (y + 1) - 2 * y); },
        [w](const mpz_class& y) { return mpz_class(y * y - w * (y + 1)); });
}

IntPair vieta_descent(long w, const mpz_class& x, const mpz_class& y) {
    check_w(w);
    if (!(x >= y && y >= 1))
        throw std::invalid_argument("vieta_descent: needs x >= y >= 1");
    mpz_class num = (y - 1) * (y - 1);
    if (!mpz_divisible_p(num.get_mpz_t(), x.get_mpz_t()))
        throw std::domain_error("vieta_descent: (y-1)^2 not divisible by x; input is not on C2(" +
                                std::to_string(w) + ")");
    mpz_class z;
    mpz_divexact(z.get_mpz_t(), num.get_mpz_t(), x.get_mpz_t());
    if (!on_conic(Conic::C2, w, y, z))
        throw std::domain_error("vieta_descent: step left the curve; input is not on C2(" +
                                std::to_string(w) + ")");
    return {y, z};
}

namespace {

// Square of a coordinate of C(w); the result is a plain integer exactly
// when the radical sits in at most one component, which holds for every
// generated point.
mpz_class square_to_int(const Coord& c, long w) {
    if (std::holds_alternative<mpz_class>(c)) {
        const mpz_class& v = std::get<mpz_class>(c);
        return v * v;
    }
    const QuadInt& q = std::get<QuadInt>(c);
    QuadInt sq = q * q;
    if (sq.rad() != 0)
        throw std::domain_error("coordinate square is not an integer: (" + q.str() + ")^2");
    (void)w;
    return sq.rat();
}

} // namespace

ConicPoint map_C_to_C2(const ConicPoint& p) {
    if (p.conic() != Conic::C)
        throw std::invalid_argument("map_C_to_C2: input must lie on C");
    return ConicPoint(Conic::C2, p.w(), square_to_int(p.x(), p.w()), square_to_int(p.y(), p.w()),
                      p.index());
}

ConicPoint map_C2_to_C3(long w, const mpz_class& x, const mpz_class& y) {
    if (!on_conic(Conic::C2, w, x, y))
        throw std::domain_error("map_C2_to_C3: (" + x.get_str() + ", " + y.get_str() +
                                ") is not on C2(" + std::to_string(w) + ")");
    return ConicPoint(Conic::C3, w, mpz_class(2 * x - 1), mpz_class(2 * y - 1));
}

ConicPoint map_C_to_C3(const ConicPoint& p) {
    if (p.conic() != Conic::C)
        throw std::invalid_argument("map_C_to_C3: input must lie on C");
    mpz_class x2 = square_to_int(p.x(), p.w());
    mpz_class y2 = square_to_int(p.y(), p.w());
    return ConicPoint(Conic::C3, p.w(), mpz_class(2 * x2 - 1), mpz_class(2 * y2 - 1), p.index());
}

} // namespace matconic
