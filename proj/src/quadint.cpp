#include "matconic/quadint.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace matconic {

std::optional<mpz_class> is_perfect_square(const mpz_class& n) {
    if (sgn(n) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t()))
        return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

bool is_square(long w) {
    return w >= 0 && is_perfect_square(mpz_class(w)).has_value();
}

mpz_class ceil_sqrt(long w) {
    if (w < 0)
        throw std::invalid_argument("ceil_sqrt: negative argument");
    mpz_class root, rem;
    mpz_class n(w);
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0)
        root += 1;
    return root;
}

QuadInt::QuadInt(mpz_class rat, mpz_class rad, long w)
    : rat_(std::move(rat)), rad_(std::move(rad)), w_(w) {
    if (w < 4)
        throw std::invalid_argument("QuadInt: w must be an integer >= 4");
    if (is_square(w))
        throw std::invalid_argument("QuadInt: w must be non-square, got " + std::to_string(w));
}

void QuadInt::check_same_ring(const QuadInt& o) const {
    if (w_ != o.w_)
        throw std::invalid_argument("QuadInt: mixed radicands " + std::to_string(w_) +
                                    " and " + std::to_string(o.w_));
}

int QuadInt::sign() const {
    int sp = sgn(rat_);
    int sq = sgn(rad_);
    if (sq == 0)
        return sp;
    if (sp == 0)
        return sq;
    if (sp == sq)
        return sp;
    // Mixed signs: |rat| vs |rad|*sqrt(w) decides, so compare the squares.
    // Equality is impossible: it would make sqrt(w) rational.
    mpz_class lhs = rat_ * rat_;
    mpz_class rhs = rad_ * rad_ * w_;
    int c = cmp(lhs, rhs);
    assert(c != 0);
    return c > 0 ? sp : -sp;
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
    check_same_ring(o);
    return QuadInt(rat_ + o.rat_, rad_ + o.rad_, w_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    check_same_ring(o);
    return QuadInt(rat_ - o.rat_, rad_ - o.rad_, w_);
}

QuadInt QuadInt::operator-() const {
    return QuadInt(-rat_, -rad_, w_);
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    check_same_ring(o);
    // (p + q sqrt(w))(r + s sqrt(w)) = (pr + qsw) + (ps + qr) sqrt(w)
    return QuadInt(rat_ * o.rat_ + rad_ * o.rad_ * w_, rat_ * o.rad_ + rad_ * o.rat_, w_);
}

bool QuadInt::operator==(const QuadInt& o) const {
    check_same_ring(o);
    return rat_ == o.rat_ && rad_ == o.rad_;
}

std::strong_ordering QuadInt::operator<=>(const QuadInt& o) const {
    check_same_ring(o);
    int s = (*this - o).sign();
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string QuadInt::str() const {
    if (is_zero())
        return "0";
    auto radical = [this](const mpz_class& coeff) {
        std::string tail = "sqrt(" + std::to_string(w_) + ")";
        if (coeff == 1)
            return tail;
        return coeff.get_str() + "*" + tail;
    };
    if (rad_ == 0)
        return rat_.get_str();
    if (rat_ == 0)
        return rad_ > 0 ? radical(rad_) : "-" + radical(mpz_class(-rad_));
    std::string out = rat_.get_str();
    if (rad_ > 0)
        out += "+" + radical(rad_);
    else
        out += "-" + radical(mpz_class(-rad_));
    return out;
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t i = 0;

    void skip_space() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done() {
        skip_space();
        return i == s.size();
    }
    bool eat(char c) {
        skip_space();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view word) {
        skip_space();
        if (s.substr(i, word.size()) == word) {
            i += word.size();
            return true;
        }
        return false;
    }
    std::optional<mpz_class> digits() {
        skip_space();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i)
            return std::nullopt;
        mpz_class v(std::string(s.substr(i, j - i)), 10);
        i = j;
        return v;
    }
};

} // namespace

QuadInt QuadInt::parse(const std::string& text, long w) {
    Scanner sc{text};
    auto fail = [&text](const char* why) -> void {
        throw std::invalid_argument(std::string("QuadInt::parse: ") + why + " in \"" + text + "\"");
    };
    // Parses "(w)" after a consumed "sqrt" and checks the radicand.
    auto radicand = [&]() {
        if (!sc.eat('('))
            fail("expected '(' after sqrt");
        auto v = sc.digits();
        if (!v)
            fail("expected integer radicand");
        if (!sc.eat(')'))
            fail("expected ')'");
        if (!v->fits_slong_p() || v->get_si() != w)
            fail("radicand does not match the ring");
    };
    // One term: either an integer, or [k '*'] 'sqrt(w)'. Returns (value, is_radical).
    auto term = [&](bool negated) -> std::pair<mpz_class, bool> {
        if (sc.eat_word("sqrt")) {
            radicand();
            return {negated ? -1 : 1, true};
        }
        auto v = sc.digits();
        if (!v)
            fail("expected a term");
        if (sc.eat('*')) {
            if (!sc.eat_word("sqrt"))
                fail("expected sqrt after '*'");
            radicand();
            return {negated ? mpz_class(-*v) : *v, true};
        }
        return {negated ? mpz_class(-*v) : *v, false};
    };

    mpz_class rat = 0, rad = 0;
    auto [first, first_radical] = term(sc.eat('-'));
    (first_radical ? rad : rat) = first;

    if (!sc.done()) {
        bool neg;
        if (sc.eat('+'))
            neg = false;
        else if (sc.eat('-'))
            neg = true;
        else {
            fail("unexpected trailing characters");
            return QuadInt(0, 0, w); // unreachable
        }
        if (first_radical)
            fail("radical term must come last");
        auto [second, second_radical] = term(neg);
        if (!second_radical)
            fail("expected a radical term after the integer part");
        rad = second;
        if (!sc.done())
            fail("unexpected trailing characters");
    }
    return QuadInt(rat, rad, w);
}

} // namespace matconic
