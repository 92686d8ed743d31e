#include "matconic/polyid.hpp"

#include "matconic/lrs.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace matconic {

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly Poly::constant(const mpq_class& c) { return Poly({c}); }

Poly Poly::variable() { return Poly({0, 1}); }

mpq_class Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        out[i] += o.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<mpq_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = -coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero())
        return Poly();
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = coeffs_[i] * s;
    return Poly(std::move(out));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * inner + Poly::constant(coeffs_[i]);
    return acc;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

QuadInt Poly::eval(const QuadInt& x) const {
    QuadInt acc = QuadInt::integer(0, x.w());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].get_den() != 1)
            throw std::invalid_argument("Poly::eval(QuadInt): non-integer coefficient " +
                                        coeffs_[i].get_str());
        acc = acc * x + QuadInt::integer(coeffs_[i].get_num(), x.w());
    }
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpq_class& c = coeffs_[i];
        if (c == 0)
            continue;
        mpq_class a = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? "-" : "+";
        bool unit = (a == 1);
        if (i == 0) {
            out += a.get_str();
        } else {
            if (!unit)
                out += a.get_str() + "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

// n-th member of a family p(k+1) = mult * p(k) - p(k-1).
Poly family_term(std::size_t n, const Poly& p0, const Poly& p1, const Poly& mult) {
    if (n == 0)
        return p0;
    Poly prev = p0, cur = p1;
    for (std::size_t k = 1; k < n; ++k) {
        Poly next = mult * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

const Poly kOne = Poly::constant(1);
const Poly kX = Poly::variable();

} // namespace

Poly chebyshev_T(std::size_t n) { return family_term(n, kOne, kX, kX.scaled(2)); }
Poly chebyshev_U(std::size_t n) { return family_term(n, kOne, kX.scaled(2), kX.scaled(2)); }
Poly chebyshev_S(std::size_t n) { return family_term(n, kOne, kX, kX); }

Poly morgan_voyce_f(std::size_t n) {
    return family_term(n, kOne, Poly({1, 1}), Poly({2, 1}));
}

Poly morgan_voyce_g(std::size_t n) {
    return family_term(n, kOne, Poly({2, 1}), Poly({2, 1}));
}

Poly b_as_poly(std::size_t n) {
    return family_term(n, Poly(), kOne, Poly({-2, 1}));
}

Poly c_as_poly(std::size_t n) {
    return family_term(n, kOne, Poly({-1, 1}), Poly({-2, 1}));
}

Poly u_as_poly(std::size_t n) {
    // Native form, with the additive constant carried along.
    if (n == 0)
        return Poly();
    Poly prev, cur = kOne;
    const Poly wm2({-2, 1});
    const Poly two = Poly::constant(2);
    for (std::size_t k = 1; k < n; ++k) {
        Poly next = wm2 * cur - prev + two;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly a_sq_as_poly(std::size_t n) {
    // Order-3 route: characteristic polynomial (t-1)(t^2-(w-2)t+1), i.e.
    // p(n+1) = (w-1) p(n) - (w-1) p(n-1) + p(n-2), starting 0, 1, w.
    std::array<Poly, 3> window = {Poly(), kOne, kX};
    if (n < 3)
        return window[n];
    const Poly wm1({-1, 1});
    for (std::size_t k = 3; k <= n; ++k) {
        Poly next = wm1 * (window[2] - window[1]) + window[0];
        window[0] = std::move(window[1]);
        window[1] = std::move(window[2]);
        window[2] = std::move(next);
    }
    return window[2];
}

namespace {

void record(IdentityReport& rep, const std::string& part, std::size_t index,
            const Poly& lhs, const Poly& rhs, const std::string& var) {
    if (lhs == rhs)
        return;
    rep.verified = false;
    rep.counterexamples.push_back({part, index, lhs.str(var), rhs.str(var)});
}

// Sampled non-square w for the evaluation-based checks.
constexpr std::array<long, 10> kSampledW = {5, 6, 7, 8, 10, 12, 20, 29, 37, 50};

} // namespace

IdentityReport verify_uT(std::size_t n_max) {
    IdentityReport rep{"uT", n_max, true, {}, {}};
    const Poly half_shift({mpq_class(-1), mpq_class(1, 2)}); // (w-2)/2
    const Poly wm4({-4, 1});
    for (std::size_t n = 0; n <= n_max; ++n) {
        Poly lhs = wm4 * u_as_poly(n);
        Poly rhs = (chebyshev_T(n).compose(half_shift) - kOne).scaled(2);
        record(rep, "uT", n, lhs, rhs, "w");
    }
    return rep;
}

IdentityReport verify_S_identities(std::size_t n_max) {
    IdentityReport rep{"S", n_max, true, {}, {}};
    const Poly wm2({-2, 1});
    for (std::size_t n = 1; n <= n_max; ++n) {
        record(rep, "b_from_S", n, b_as_poly(n), chebyshev_S(n - 1).compose(wm2), "w");
        record(rep, "c_from_S", n, c_as_poly(n),
               (chebyshev_S(n) + chebyshev_S(n - 1)).compose(wm2), "w");
        Poly sn = chebyshev_S(n), sp = chebyshev_S(n - 1);
        record(rep, "S_pell_relation", n, sn * sn - kX * sn * sp + sp * sp, kOne, "x");
        record(rep, "S_equals_U_halved", n, chebyshev_S(n),
               chebyshev_U(n).compose(kX.scaled(mpq_class(1, 2))), "x");
    }
    // a(n)(w) = S(n-1)(sqrt(w)) and its parity split, by exact evaluation.
    for (long w : kSampledW) {
        std::vector<QuadInt> a = seq_a_terms(w, 2 * n_max + 2);
        QuadInt root = QuadInt::sqrt_w(w);
        for (std::size_t n = 1; n <= n_max; ++n) {
            QuadInt b_n = QuadInt::integer(seq_b(w, n), w);
            QuadInt c_n = QuadInt::integer(seq_c(w, n), w);
            if (!(a[n] == chebyshev_S(n - 1).eval(root))) {
                rep.verified = false;
                rep.counterexamples.push_back({"a_from_S(w=" + std::to_string(w) + ")", n,
                                               a[n].str(), chebyshev_S(n - 1).eval(root).str()});
            }
            if (!(a[2 * n] == root * b_n)) {
                rep.verified = false;
                rep.counterexamples.push_back({"a_even_split(w=" + std::to_string(w) + ")", n,
                                               a[2 * n].str(), (root * b_n).str()});
            }
            if (!(a[2 * n + 1] == c_n)) {
                rep.verified = false;
                rep.counterexamples.push_back({"a_odd_split(w=" + std::to_string(w) + ")", n,
                                               a[2 * n + 1].str(), c_n.str()});
            }
        }
    }
    return rep;
}

IdentityReport verify_MV_identities(std::size_t n_max) {
    IdentityReport rep{"MV", n_max, true, {}, {}};
    const Poly neg_w({0, -1});       // -w
    const Poly neg_x_sq({0, 0, -1}); // -x^2
    for (std::size_t n = 1; n <= n_max; ++n) {
        int sign_n = (n % 2 == 0) ? 1 : -1;
        record(rep, "b_from_g", n, b_as_poly(n),
               morgan_voyce_g(n - 1).compose(neg_w).scaled(-sign_n), "w");
        record(rep, "c_from_f", n, c_as_poly(n),
               morgan_voyce_f(n).compose(neg_w).scaled(sign_n), "w");
        record(rep, "S_odd_from_g", n, chebyshev_S(2 * n - 1),
               (kX * morgan_voyce_g(n - 1).compose(neg_x_sq)).scaled(-sign_n), "x");
        record(rep, "S_even_from_f", n, chebyshev_S(2 * n),
               morgan_voyce_f(n).compose(neg_x_sq).scaled(sign_n), "x");
        // The index-lowered variant; it fails and is recorded separately.
        Poly variant = morgan_voyce_f(n - 1).compose(neg_x_sq).scaled(sign_n);
        if (chebyshev_S(2 * n) != variant)
            rep.known_variant_failures.push_back(
                {"S_even_lowered_index", n, chebyshev_S(2 * n).str(), variant.str()});
    }
    return rep;
}

} // namespace matconic
