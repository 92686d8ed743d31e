// Regenerates the bundled OEIS b-file fixtures under data/oeis/.
//
// Every sequence is produced from a published closed form or defining
// recurrence of the catalogued OEIS entry itself (Fibonacci and Lucas
// bisections, squares, Chebyshev values), deliberately not from the
// library's recurrence engine, so the fixtures act as an independent
// reference for the comparison tests.
//
// Usage: gen_oeis_fixtures <output-dir> [terms]

#include <gmpxx.h>

#include <cassert>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

mpz_class fib(long n) {
    mpz_class a = 0, b = 1;
    for (long i = 0; i < n; ++i) {
        mpz_class next = a + b;
        a = b;
        b = next;
    }
    return a;
}

mpz_class lucas(long n) {
    mpz_class a = 2, b = 1;
    for (long i = 0; i < n; ++i) {
        mpz_class next = a + b;
        a = b;
        b = next;
    }
    return a;
}

// Chebyshev T_n at the rational point num/den, exactly.
mpq_class cheb_T(long num, long den, long n) {
    mpq_class x(num, den);
    x.canonicalize();
    mpq_class prev = 1, cur = x;
    if (n == 0)
        return prev;
    for (long k = 1; k < n; ++k) {
        mpq_class next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// S_n(x) = U_n(x/2) at an integer point: S_0 = 1, S_1 = x.
mpz_class cheb_S(long x, long n) {
    mpz_class prev = 1, cur = x;
    if (n == 0)
        return prev;
    for (long k = 1; k < n; ++k) {
        mpz_class next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// u_n(w) through the Chebyshev value 2(T_n((w-2)/2) - 1)/(w-4), w >= 5.
mpz_class u_via_T(long w, long n) {
    mpq_class t = cheb_T(w - 2, 2, n);
    mpq_class u = 2 * (t - 1) / (w - 4);
    assert(u.get_den() == 1);
    return u.get_num();
}

mpz_class b_via_S(long w, long n) { return n == 0 ? mpz_class(0) : cheb_S(w - 2, n - 1); }

mpz_class c_via_S(long w, long n) {
    return n == 0 ? mpz_class(1) : mpz_class(cheb_S(w - 2, n) + cheb_S(w - 2, n - 1));
}

mpz_class exact_third(const mpz_class& v) {
    assert(mpz_divisible_ui_p(v.get_mpz_t(), 3));
    return v / 3;
}

struct Entry {
    const char* a_number;
    const char* formula;
    std::function<mpz_class(long)> term;
};

const std::vector<Entry> kEntries = {
    // Trailing return type matters: without it the lambda would deduce a GMP
    // expression template that dangles once the temporaries die.
    {"A000290", "n^2", [](long n) -> mpz_class { return mpz_class(n) * n; }},
    {"A001477", "n", [](long n) { return mpz_class(n); }},
    {"A005408", "2n+1", [](long n) { return mpz_class(2 * n + 1); }},

    {"A004146", "Lucas(2n) - 2", [](long n) { return mpz_class(lucas(2 * n) - 2); }},
    {"A001906", "Fibonacci(2n)", [](long n) { return fib(2 * n); }},
    {"A002878", "Lucas(2n+1)", [](long n) { return lucas(2 * n + 1); }},

    {"A092184", "T_n(2) - 1", [](long n) { return u_via_T(6, n); }},
    {"A001353", "S_{n-1}(4)", [](long n) { return b_via_S(6, n); }},
    {"A001834", "S_n(4) + S_{n-1}(4)", [](long n) { return c_via_S(6, n); }},

    {"A054493", "2(T_{n+1}(5/2) - 1)/3", [](long n) { return u_via_T(7, n + 1); }},
    {"A004254", "S_{n-1}(5)", [](long n) { return b_via_S(7, n); }},
    {"A030221", "S_n(5) + S_{n-1}(5)", [](long n) { return c_via_S(7, n); }},

    {"A001108", "(T_n(3) - 1)/2", [](long n) { return u_via_T(8, n); }},
    {"A001109", "S_{n-1}(6)", [](long n) { return b_via_S(8, n); }},
    {"A002315", "S_n(6) + S_{n-1}(6)", [](long n) { return c_via_S(8, n); }},

    {"A049684", "Fibonacci(2n)^2", [](long n) { return mpz_class(fib(2 * n) * fib(2 * n)); }},
    {"A004187", "Fibonacci(4n)/3", [](long n) { return exact_third(fib(4 * n)); }},
    {"A033890", "Fibonacci(4n+2)", [](long n) { return fib(4 * n + 2); }},

    {"A095004", "(T_{n+1}(4) - 1)/3", [](long n) { return u_via_T(10, n + 1); }},
    {"A001090", "S_{n-1}(8)", [](long n) { return b_via_S(10, n); }},
    {"A057080", "S_n(8) + S_{n-1}(8)", [](long n) { return c_via_S(10, n); }},

    {"A098296", "2(T_n(9/2) - 1)/7", [](long n) { return u_via_T(11, n); }},
    {"A018913", "S_{n-1}(9)", [](long n) { return b_via_S(11, n); }},
    {"A057081", "S_n(9) + S_{n-1}(9)", [](long n) { return c_via_S(11, n); }},
};

} // namespace

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::cerr << "usage: gen_oeis_fixtures <output-dir> [terms]\n";
        return 2;
    }
    std::filesystem::path dir(argv[1]);
    long terms = argc == 3 ? std::stol(argv[2]) : 40;
    std::filesystem::create_directories(dir);
    for (const auto& e : kEntries) {
        std::string name = std::string("b") + (e.a_number + 1) + ".txt";
        std::ofstream out(dir / name);
        if (!out) {
            std::cerr << "cannot write " << (dir / name).string() << "\n";
            return 1;
        }
        out << "# " << e.a_number << "\n";
        out << "# a(n) = " << e.formula << "\n";
        for (long n = 0; n < terms; ++n)
            out << n << " " << e.term(n).get_str() << "\n";
        std::cout << name << " (" << terms << " terms)\n";
    }
    return 0;
}
