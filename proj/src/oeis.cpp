#include "matconic/oeis.hpp"

#include "matconic/lrs.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

namespace matconic {

const mpz_class& BFileFixture::at_index(long i) const {
    if (i < offset || static_cast<std::size_t>(i - offset) >= terms.size())
        throw std::out_of_range("BFileFixture: index " + std::to_string(i) + " outside " +
                                a_number);
    return terms[static_cast<std::size_t>(i - offset)];
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool is_integer_token(const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size())
        return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            return false;
    return true;
}

std::optional<std::string> find_a_number(const std::string& comment) {
    for (std::size_t i = 0; i + 1 < comment.size(); ++i) {
        if (comment[i] != 'A')
            continue;
        std::size_t j = i + 1;
        while (j < comment.size() && std::isdigit(static_cast<unsigned char>(comment[j])))
            ++j;
        if (j - i - 1 >= 6)
            return comment.substr(i, j - i);
    }
    return std::nullopt;
}

[[noreturn]] void parse_fail(long lineno, const std::string& why) {
    throw std::runtime_error("b-file parse error at line " + std::to_string(lineno) + ": " + why);
}

} // namespace

BFileFixture parse_bfile(const std::string& text) {
    BFileFixture fx;
    std::istringstream in(text);
    std::string raw;
    long lineno = 0;
    bool have_first = false;
    long expect = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::string line = strip(raw);
        if (line.empty()) {
            // Only tolerate blank padding at the very end of the file.
            std::string rest;
            while (std::getline(in, rest)) {
                ++lineno;
                if (!strip(rest).empty())
                    parse_fail(lineno, "blank line inside the data block");
            }
            break;
        }
        if (line[0] == '#') {
            if (fx.a_number.empty())
                if (auto a = find_a_number(line))
                    fx.a_number = *a;
            continue;
        }
        std::istringstream fields(line);
        std::string idx_tok, val_tok, extra;
        fields >> idx_tok >> val_tok;
        if (val_tok.empty())
            parse_fail(lineno, "expected \"index value\"");
        if (fields >> extra)
            parse_fail(lineno, "trailing field \"" + extra + "\"");
        if (!is_integer_token(idx_tok) || !is_integer_token(val_tok))
            parse_fail(lineno, "non-numeric field");
        long idx;
        try {
            idx = std::stol(idx_tok);
        } catch (const std::exception&) {
            parse_fail(lineno, "index out of range");
        }
        if (!have_first) {
            fx.offset = idx;
            have_first = true;
        } else if (idx != expect) {
            parse_fail(lineno, "non-contiguous index " + idx_tok + ", expected " +
                                   std::to_string(expect));
        }
        expect = idx + 1;
        fx.terms.emplace_back(val_tok);
    }
    if (fx.terms.empty())
        throw std::runtime_error("b-file parse error: no data lines");
    return fx;
}

std::string render_bfile(const BFileFixture& fx) {
    std::ostringstream out;
    if (!fx.a_number.empty())
        out << "# " << fx.a_number << "\n";
    for (std::size_t i = 0; i < fx.terms.size(); ++i)
        out << fx.offset + static_cast<long>(i) << " " << fx.terms[i].get_str() << "\n";
    return out.str();
}

std::string bfile_filename(const std::string& a_number) {
    if (a_number.size() < 7 || a_number[0] != 'A' ||
        !is_integer_token(a_number.substr(1)) || a_number[1] == '-' || a_number[1] == '+' ||
        a_number.size() > 8)
        throw std::invalid_argument("not an A-number: \"" + a_number + "\"");
    return "b" + a_number.substr(1) + ".txt";
}

BFileFixture load_fixture(const std::filesystem::path& dir, const std::string& a_number) {
    std::filesystem::path file = dir / bfile_filename(a_number);
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("missing OEIS fixture " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    BFileFixture fx = parse_bfile(buf.str());
    if (fx.a_number.empty())
        fx.a_number = a_number;
    else if (fx.a_number != a_number)
        throw std::runtime_error("fixture " + file.string() + " labels itself " + fx.a_number);
    return fx;
}

const std::vector<Table1Row>& table1() {
    // The two u-entries published without the leading 0 carry shift 1.
    static const std::vector<Table1Row> rows = {
        {4, "A000290", "A001477", "A005408", 0, 0, 0},
        {5, "A004146", "A001906", "A002878", 0, 0, 0},
        {6, "A092184", "A001353", "A001834", 0, 0, 0},
        {7, "A054493", "A004254", "A030221", 1, 0, 0},
        {8, "A001108", "A001109", "A002315", 0, 0, 0},
        {9, "A049684", "A004187", "A033890", 0, 0, 0},
        {10, "A095004", "A001090", "A057080", 1, 0, 0},
        {11, "A098296", "A018913", "A057081", 0, 0, 0},
    };
    return rows;
}

SequenceMatch check_sequence(const std::string& which, long w, long shift, std::size_t count,
                             const BFileFixture& fx) {
    if (fx.terms.size() < count)
        throw std::runtime_error("fixture " + fx.a_number + " has only " +
                                 std::to_string(fx.terms.size()) + " terms, need " +
                                 std::to_string(count));
    LrsSpec spec = which == "u"   ? u_spec(w)
                   : which == "b" ? b_spec(w)
                   : which == "c" ? c_spec(w)
                                  : throw std::invalid_argument("check_sequence: bad name \"" +
                                                                which + "\"");
    if (fx.offset + shift < 0)
        throw std::runtime_error("fixture " + fx.a_number + " starts before the sequence does");
    long hi = fx.offset + static_cast<long>(count) - 1 + shift;
    std::vector<mpz_class> seq = lrs_terms(spec, static_cast<std::size_t>(hi) + 1);

    SequenceMatch m{which, fx.a_number, shift, count, true, std::nullopt, "", ""};
    for (std::size_t k = 0; k < count; ++k) {
        long idx = fx.offset + static_cast<long>(k);
        const mpz_class& fixture_term = fx.terms[k];
        const mpz_class& generated = seq[static_cast<std::size_t>(idx + shift)];
        if (fixture_term != generated) {
            m.matched = false;
            m.first_mismatch = idx;
            m.expected = fixture_term.get_str();
            m.actual = generated.get_str();
            break;
        }
    }
    return m;
}

bool Table1Report::all_matched() const {
    for (const auto& s : sequences)
        if (!s.matched)
            return false;
    return !sequences.empty();
}

Table1Report check_table1(long w, std::size_t count, const std::filesystem::path& data_dir) {
    const Table1Row* row = nullptr;
    for (const auto& r : table1())
        if (r.w == w)
            row = &r;
    if (!row)
        throw std::out_of_range("no bundled OEIS row for w = " + std::to_string(w) +
                                " (bundled range is 4..11)");
    Table1Report rep{w, count, {}};
    rep.sequences.push_back(
        check_sequence("u", w, row->u_shift, count, load_fixture(data_dir, row->u_ref)));
    rep.sequences.push_back(
        check_sequence("b", w, row->b_shift, count, load_fixture(data_dir, row->b_ref)));
    rep.sequences.push_back(
        check_sequence("c", w, row->c_shift, count, load_fixture(data_dir, row->c_ref)));
    return rep;
}

std::string fetch_bfile(const std::string& a_number, bool network_enabled) {
    std::string file = bfile_filename(a_number); // validates the A-number
    if (!network_enabled)
        throw std::runtime_error("offline: network fetch of " + a_number +
                                 " requires the explicit fetch flag");
    httplib::Client client("https://oeis.org");
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get("/" + a_number + "/" + file);
    if (!res)
        throw std::runtime_error("fetch of " + a_number + " failed: " +
                                 httplib::to_string(res.error()));
    if (res->status != 200)
        throw std::runtime_error("fetch of " + a_number + " failed: HTTP " +
                                 std::to_string(res->status));
    return res->body;
}

} // namespace matconic
