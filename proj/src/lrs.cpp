#include "matconic/lrs.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace matconic {

namespace {

void check_spec(const LrsSpec& spec) {
    if (spec.order() == 0)
        throw std::invalid_argument("LrsSpec: order must be positive");
    if (spec.initial.size() != spec.order())
        throw std::invalid_argument("LrsSpec: initial conditions must match the order");
}

void check_w(long w) {
    if (w < 4)
        throw std::invalid_argument("sequence parameter w must be >= 4, got " + std::to_string(w));
}

} // namespace

std::vector<mpz_class> LrsSpec::char_poly() const {
    // t^m - coeffs[0] t^(m-1) - ... - coeffs[m-1], ascending order.
    std::size_t m = order();
    std::vector<mpz_class> p(m + 1);
    p[m] = 1;
    for (std::size_t h = 1; h <= m; ++h)
        p[m - h] = -coeffs[h - 1];
    return p;
}

std::vector<mpz_class> lrs_terms(const LrsSpec& spec, std::size_t count) {
    check_spec(spec);
    std::size_t m = spec.order();
    std::vector<mpz_class> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n < m) {
            out.push_back(spec.initial[n]);
            continue;
        }
        mpz_class acc = spec.additive_const;
        for (std::size_t h = 0; h < m; ++h)
            acc += spec.coeffs[h] * out[n - 1 - h];
        out.push_back(acc);
    }
    return out;
}

LrsSpec b_spec(long w) {
    check_w(w);
    return {{mpz_class(w - 2), mpz_class(-1)}, 0, {0, 1}};
}

LrsSpec c_spec(long w) {
    check_w(w);
    return {{mpz_class(w - 2), mpz_class(-1)}, 0, {1, mpz_class(w - 1)}};
}

LrsSpec u_spec(long w) {
    check_w(w);
    return {{mpz_class(w - 2), mpz_class(-1)}, 2, {0, 1}};
}

LrsSpec a_square_spec(long w) {
    check_w(w);
    auto k = is_perfect_square(mpz_class(w));
    if (!k)
        throw std::invalid_argument("a_square_spec: w must be a perfect square, got " +
                                    std::to_string(w));
    return {{*k, mpz_class(-1)}, 0, {0, 1}};
}

mpz_class seq_b(long w, std::size_t n) { return lrs_terms(b_spec(w), n + 1).back(); }
mpz_class seq_c(long w, std::size_t n) { return lrs_terms(c_spec(w), n + 1).back(); }
mpz_class seq_u(long w, std::size_t n) { return lrs_terms(u_spec(w), n + 1).back(); }

std::vector<QuadInt> seq_a_terms(long w, std::size_t count) {
    QuadInt root = QuadInt::sqrt_w(w); // rejects square w
    std::vector<QuadInt> out;
    out.reserve(count);
    if (count >= 1)
        out.push_back(QuadInt::integer(0, w));
    if (count >= 2)
        out.push_back(QuadInt::integer(1, w));
    for (std::size_t n = 2; n < count; ++n)
        out.push_back(root * out[n - 1] - out[n - 2]);
    return out;
}

QuadInt seq_a(long w, std::size_t n) { return seq_a_terms(w, n + 1).back(); }

QuadMatrix2 QuadMatrix2::operator*(const QuadMatrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

bool QuadMatrix2::operator==(const QuadMatrix2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

QuadMatrix2 QuadMatrix2::identity(long w) {
    QuadInt one = QuadInt::integer(1, w);
    QuadInt zero = QuadInt::integer(0, w);
    return {one, zero, zero, one};
}

QuadMatrix2 matrix_M(long w) {
    QuadInt zero = QuadInt::integer(0, w);
    QuadInt one = QuadInt::integer(1, w);
    return {zero, one, -one, QuadInt::sqrt_w(w)};
}

QuadMatrix2 matrix_M_power(long w, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("matrix_M_power: exponent must be >= 1");
    QuadMatrix2 base = matrix_M(w);
    QuadMatrix2 acc = QuadMatrix2::identity(w);
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return acc;
}

LrsSpec absorb_constant(const LrsSpec& spec) {
    check_spec(spec);
    if (spec.additive_const == 0)
        throw std::invalid_argument("absorb_constant: additive constant is zero");
    std::size_t m = spec.order();
    // Multiply the characteristic polynomial by (t - 1).
    auto f = spec.char_poly();
    std::vector<mpz_class> g(f.size() + 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        g[i + 1] += f[i];
        g[i] -= f[i];
    }
    LrsSpec out;
    out.coeffs.resize(m + 1);
    for (std::size_t h = 1; h <= m + 1; ++h)
        out.coeffs[h - 1] = -g[m + 1 - h];
    out.additive_const = 0;
    out.initial = lrs_terms(spec, m + 1);
    return out;
}

namespace {

using RatMatrix = std::vector<std::vector<mpq_class>>;

RatMatrix companion(const std::vector<mpz_class>& p) {
    std::size_t d = p.size() - 1;
    RatMatrix m(d, std::vector<mpq_class>(d, 0));
    for (std::size_t i = 0; i + 1 < d; ++i)
        m[i + 1][i] = 1;
    for (std::size_t i = 0; i < d; ++i)
        m[i][d - 1] = mpq_class(-p[i]);
    return m;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    std::size_t da = a.size(), db = b.size();
    RatMatrix out(da * db, std::vector<mpq_class>(da * db, 0));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out[i * db + k][j * db + l] = a[i][j] * b[k][l];
    return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size();
    RatMatrix out(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Faddeev-LeVerrier: exact characteristic polynomial over the rationals.
std::vector<mpq_class> char_poly_of(const RatMatrix& a) {
    std::size_t n = a.size();
    RatMatrix m(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    std::vector<mpq_class> c(n + 1);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = mat_mul(a, m);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am[i][i];
        c[n - k] = -tr / mpq_class(static_cast<long>(k));
        m = std::move(am);
        for (std::size_t i = 0; i < n; ++i)
            m[i][i] += c[n - k];
    }
    return c;
}

} // namespace

std::vector<mpz_class> kronecker_char_poly(const std::vector<mpz_class>& f,
                                           const std::vector<mpz_class>& g) {
    auto validate = [](const std::vector<mpz_class>& p, const char* name) {
        if (p.size() < 2)
            throw std::invalid_argument(std::string("kronecker_char_poly: ") + name +
                                        " must have degree >= 1");
        if (p.back() != 1)
            throw std::invalid_argument(std::string("kronecker_char_poly: ") + name +
                                        " must be monic");
    };
    validate(f, "f");
    validate(g, "g");
    RatMatrix k = kronecker(companion(f), companion(g));
    std::vector<mpq_class> c = char_poly_of(k);
    std::vector<mpz_class> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        // The Kronecker product of integer matrices is integral, so its
        // characteristic polynomial must be too.
        assert(c[i].get_den() == 1);
        out[i] = c[i].get_num();
    }
    return out;
}

} // namespace matconic
