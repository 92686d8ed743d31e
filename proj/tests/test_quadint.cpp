#include "doctest.h"

#include "matconic/quadint.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace matconic;

namespace {

// Uniform-ish signed integer with roughly `bits` bits, deterministic per seed.
mpz_class rand_z(std::mt19937_64& rng, int bits) {
    mpz_class v = 0;
    for (int got = 0; got < bits; got += 32)
        v = (v << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
    if (rng() & 1)
        v = -v;
    return v;
}

QuadInt rand_q(std::mt19937_64& rng, long w, int bits = 64) {
    return QuadInt(rand_z(rng, bits), rand_z(rng, bits), w);
}

} // namespace

TEST_CASE("integer square root probe") {
    REQUIRE(is_perfect_square(49));
    CHECK(*is_perfect_square(49) == 7);
    CHECK(*is_perfect_square(0) == 0);
    CHECK(*is_perfect_square(1) == 1);
    CHECK(*is_perfect_square(207936) == 456);
    CHECK(!is_perfect_square(5));
    CHECK(!is_perfect_square(2));
    CHECK(!is_perfect_square(-4));
    CHECK(!is_perfect_square(48));

    mpz_class big = mpz_class("123456789123456789123456789");
    CHECK(*is_perfect_square(big * big) == big);
    CHECK(!is_perfect_square(big * big + 1));
    CHECK(!is_perfect_square(big * big - 1));

    CHECK(is_square(0));
    CHECK(is_square(1));
    CHECK(is_square(4));
    CHECK(is_square(9));
    CHECK(is_square(16));
    CHECK(!is_square(5));
    CHECK(!is_square(8));
    CHECK(!is_square(-9));
}

TEST_CASE("ceil_sqrt") {
    CHECK(ceil_sqrt(0) == 0);
    CHECK(ceil_sqrt(1) == 1);
    CHECK(ceil_sqrt(4) == 2);
    CHECK(ceil_sqrt(5) == 3);
    CHECK(ceil_sqrt(9) == 3);
    CHECK(ceil_sqrt(10) == 4);
    CHECK(ceil_sqrt(99) == 10);
    CHECK_THROWS_AS(ceil_sqrt(-1), std::invalid_argument);
}

TEST_CASE("constructor accepts only non-square w >= 4") {
    CHECK_NOTHROW(QuadInt(1, 2, 5));
    CHECK_NOTHROW(QuadInt(0, 0, 7));
    CHECK_THROWS_AS(QuadInt(1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(1, 2, -5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(1, 2, 4), std::invalid_argument);  // 2^2
    CHECK_THROWS_AS(QuadInt(1, 2, 9), std::invalid_argument);  // 3^2
    CHECK_THROWS_AS(QuadInt(1, 2, 16), std::invalid_argument); // 4^2
}

TEST_CASE("component access and predicates") {
    QuadInt q(3, -2, 7);
    CHECK(q.rat() == 3);
    CHECK(q.rad() == -2);
    CHECK(q.w() == 7);
    CHECK(!q.is_zero());
    CHECK(!q.is_integer());
    CHECK(QuadInt::integer(11, 5).is_integer());
    CHECK(QuadInt(0, 0, 5).is_zero());
    CHECK(QuadInt::sqrt_w(5) == QuadInt(0, 1, 5));
}

TEST_CASE("arithmetic on worked examples") {
    QuadInt a(1, 1, 5);  // 1 + sqrt(5)
    QuadInt b(2, -3, 5); // 2 - 3*sqrt(5)
    CHECK(a + b == QuadInt(3, -2, 5));
    CHECK(a - b == QuadInt(-1, 4, 5));
    CHECK(-b == QuadInt(-2, 3, 5));

    // (1 + sqrt5)(1 - sqrt5) = 1 - 5
    CHECK(QuadInt(1, 1, 5) * QuadInt(1, -1, 5) == QuadInt::integer(-4, 5));
    // (2 + sqrt7)(3 + 2 sqrt7) = 6 + 2*7 + (4+3) sqrt7
    CHECK(QuadInt(2, 1, 7) * QuadInt(3, 2, 7) == QuadInt(20, 7, 7));
    CHECK(QuadInt(2, 1, 7) * mpz_class(3) == QuadInt(6, 3, 7));
}

TEST_CASE("mixed radicands are rejected") {
    QuadInt five(1, 1, 5), seven(1, 1, 7);
    CHECK_THROWS_AS(five + seven, std::invalid_argument);
    CHECK_THROWS_AS(five - seven, std::invalid_argument);
    CHECK_THROWS_AS(five * seven, std::invalid_argument);
    CHECK_THROWS_AS((void)(five == seven), std::invalid_argument);
    CHECK_THROWS_AS((void)(five < seven), std::invalid_argument);
}

TEST_CASE("ring axioms hold on random values") {
    std::mt19937_64 rng(20260819);
    const QuadInt zero(0, 0, 7), one(1, 0, 7);
    for (int round = 0; round < 300; ++round) {
        QuadInt x = rand_q(rng, 7), y = rand_q(rng, 7), z = rand_q(rng, 7);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + zero == x);
        CHECK(x * one == x);
        CHECK(x + (-x) == zero);
    }
}

TEST_CASE("norm is multiplicative and matches the definition") {
    CHECK(QuadInt(1, 1, 5).norm() == -4);
    CHECK(QuadInt::sqrt_w(7).norm() == -7);
    CHECK(QuadInt::integer(-6, 5).norm() == 36);
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        QuadInt x = rand_q(rng, 11), y = rand_q(rng, 11);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("sign by exact case analysis") {
    CHECK(QuadInt(0, 0, 5).sign() == 0);
    CHECK(QuadInt::integer(-3, 5).sign() == -1);
    CHECK(QuadInt::sqrt_w(5).sign() == 1);
    CHECK(QuadInt(0, -1, 5).sign() == -1);
    // Mixed-sign components: the squares decide.
    CHECK(QuadInt(2, -1, 5).sign() == -1); // 2 < sqrt5
    CHECK(QuadInt(3, -1, 5).sign() == 1);  // 3 > sqrt5
    CHECK(QuadInt(-2, 1, 5).sign() == 1);
    CHECK(QuadInt(-3, 1, 5).sign() == -1);
    CHECK(QuadInt(-9, 4, 5).sign() == -1); // 81 > 80
    CHECK(QuadInt(9, -4, 5).sign() == 1);
}

TEST_CASE("ordering on worked examples") {
    QuadInt two = QuadInt::integer(2, 5), three = QuadInt::integer(3, 5);
    QuadInt root5 = QuadInt::sqrt_w(5);
    CHECK(root5 > two);
    CHECK(root5 < three);
    CHECK(QuadInt(1, 1, 5) > three); // 1 + sqrt5 > 3
    CHECK(QuadInt(1, 1, 5) >= QuadInt(1, 1, 5));
    CHECK((root5 <=> QuadInt(0, 1, 5)) == std::strong_ordering::equal);
}

TEST_CASE("ordering agrees with a high-precision float oracle") {
    // Independent route: evaluate both values in 768-bit floating point.
    // For components below 2^128 the true gap between distinct values
    // exceeds 2^-200, far above the oracle's rounding error.
    std::mt19937_64 rng(42);
    const long ws[] = {5, 6, 7, 8, 10, 11, 12, 13};
    for (int round = 0; round < 2000; ++round) {
        long w = ws[rng() % 8];
        QuadInt x = rand_q(rng, w, 96), y = rand_q(rng, w, 96);
        mpf_class sw(w, 768);
        sw = sqrt(sw);
        mpf_class fx(0, 768), fy(0, 768);
        fx = mpf_class(x.rat(), 768) + mpf_class(x.rad(), 768) * sw;
        fy = mpf_class(y.rat(), 768) + mpf_class(y.rad(), 768) * sw;
        int expected = cmp(fx, fy);
        if (x == y)
            expected = 0;
        auto got = x <=> y;
        CHECK((got < 0) == (expected < 0));
        CHECK((got > 0) == (expected > 0));
        CHECK((got == 0) == (expected == 0));
    }
}

TEST_CASE("ordering near the tightest integer approximations") {
    // p = floor(q * sqrt(w)) gives the closest integers to a radical value;
    // the comparison must still come out exact there.
    std::mt19937_64 rng(99);
    for (int round = 0; round < 500; ++round) {
        long w = 5 + static_cast<long>(rng() % 20);
        if (is_square(w))
            continue;
        mpz_class q = rand_z(rng, 80);
        if (q < 0)
            q = -q;
        q += 1;
        mpz_class p;
        mpz_class qqw = q * q * w;
        mpz_sqrt(p.get_mpz_t(), qqw.get_mpz_t());
        // p <= q sqrt(w) < p + 1, never equal for non-square w
        CHECK(QuadInt::integer(p, w) < QuadInt(0, q, w));
        CHECK(QuadInt::integer(p + 1, w) > QuadInt(0, q, w));
    }
}

TEST_CASE("total order is antisymmetric and transitive") {
    std::mt19937_64 rng(2718);
    for (int round = 0; round < 400; ++round) {
        QuadInt x = rand_q(rng, 13, 48), y = rand_q(rng, 13, 48), z = rand_q(rng, 13, 48);
        if (x <= y && y <= x)
            CHECK(x == y);
        if (x <= y && y <= z)
            CHECK(x <= z);
        CHECK((x < y) + (x == y) + (x > y) == 1);
    }
}

TEST_CASE("canonical rendering") {
    CHECK(QuadInt(0, 0, 5).str() == "0");
    CHECK(QuadInt::integer(11, 5).str() == "11");
    CHECK(QuadInt::integer(-11, 5).str() == "-11");
    CHECK(QuadInt::sqrt_w(5).str() == "sqrt(5)");
    CHECK(QuadInt(0, -1, 5).str() == "-sqrt(5)");
    CHECK(QuadInt(0, 3, 5).str() == "3*sqrt(5)");
    CHECK(QuadInt(0, -3, 5).str() == "-3*sqrt(5)");
    CHECK(QuadInt(1, 1, 5).str() == "1+sqrt(5)");
    CHECK(QuadInt(4, -1, 7).str() == "4-sqrt(7)");
    CHECK(QuadInt(-2, 3, 5).str() == "-2+3*sqrt(5)");
    CHECK(QuadInt(-2, -3, 5).str() == "-2-3*sqrt(5)");
}

TEST_CASE("parse accepts canonical and lightly spaced forms") {
    CHECK(QuadInt::parse("0", 5) == QuadInt(0, 0, 5));
    CHECK(QuadInt::parse("11", 5) == QuadInt::integer(11, 5));
    CHECK(QuadInt::parse("-11", 5) == QuadInt::integer(-11, 5));
    CHECK(QuadInt::parse("sqrt(5)", 5) == QuadInt::sqrt_w(5));
    CHECK(QuadInt::parse("-sqrt(5)", 5) == QuadInt(0, -1, 5));
    CHECK(QuadInt::parse("3*sqrt(5)", 5) == QuadInt(0, 3, 5));
    CHECK(QuadInt::parse("4-sqrt(7)", 7) == QuadInt(4, -1, 7));
    CHECK(QuadInt::parse("-2+3*sqrt(5)", 5) == QuadInt(-2, 3, 5));
    CHECK(QuadInt::parse(" 4 - sqrt(7) ", 7) == QuadInt(4, -1, 7));
    CHECK(QuadInt::parse("2 * sqrt( 11 )", 11) == QuadInt(0, 2, 11));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(QuadInt::parse("", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("abc", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("--1", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("1+2", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("sqrt(5)+1", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("sqrt(3)", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("2*3", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("sqrt 5", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("sqrt(5", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("1+sqrt(5)z", 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::parse("1+sqrt(5)+sqrt(5)", 5), std::invalid_argument);
}

TEST_CASE("str then parse round-trips") {
    std::mt19937_64 rng(31415);
    const long ws[] = {5, 7, 12};
    for (int round = 0; round < 300; ++round) {
        long w = ws[rng() % 3];
        QuadInt x = rand_q(rng, w, 96);
        CHECK(QuadInt::parse(x.str(), w) == x);
    }
}
