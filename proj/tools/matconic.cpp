#include "matconic/conics.hpp"
#include "matconic/lrs.hpp"
#include "matconic/oeis.hpp"
#include "matconic/polyid.hpp"
#include "matconic/quadint.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace matconic;

namespace {

json coord_json(const Coord& c) {
    if (std::holds_alternative<mpz_class>(c))
        return std::get<mpz_class>(c).get_str();
    const QuadInt& q = std::get<QuadInt>(c);
    return json{{"rat", q.rat().get_str()}, {"rad", q.rad().get_str()}, {"w", q.w()}};
}

json point_json(const ConicPoint& p) {
    json j;
    j["conic"] = to_string(p.conic());
    j["w"] = p.w();
    if (p.index())
        j["n"] = *p.index();
    j["x"] = coord_json(p.x());
    j["y"] = coord_json(p.y());
    if (p.side())
        j["side"] = to_string(*p.side());
    return j;
}

struct SeqArgs {
    std::string which;
    long w = 0;
    std::size_t count = 0;
    std::string format = "json";
};

int run_seq(const SeqArgs& a) {
    json out;
    out["schema"] = 1;
    out["command"] = "seq";
    out["which"] = a.which;
    out["w"] = a.w;
    out["count"] = a.count;
    std::vector<std::string> rendered;
    json terms = json::array();
    if (a.which == "a") {
        for (const QuadInt& t : seq_a_terms(a.w, a.count)) {
            terms.push_back(json{{"rat", t.rat().get_str()}, {"rad", t.rad().get_str()}, {"w", a.w}});
            rendered.push_back(t.str());
        }
    } else {
        LrsSpec spec = a.which == "b" ? b_spec(a.w) : a.which == "c" ? c_spec(a.w) : u_spec(a.w);
        for (const mpz_class& t : lrs_terms(spec, a.count)) {
            terms.push_back(t.get_str());
            rendered.push_back(t.get_str());
        }
    }
    if (a.format == "csv") {
        std::cout << "n,term\n";
        for (std::size_t n = 0; n < rendered.size(); ++n)
            std::cout << n << "," << rendered[n] << "\n";
        return 0;
    }
    out["terms"] = terms;
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct PointsArgs {
    long w = 0;
    std::size_t count = 0;
    std::string format = "json";
};

int run_points(const PointsArgs& a) {
    std::vector<ConicPoint> pts =
        is_square(a.w) ? integer_points(a.w, a.count) : radical_points(a.w, a.count);
    if (a.format == "csv") {
        std::cout << "conic,w,n,side,x,y\n";
        for (const ConicPoint& p : pts)
            std::cout << to_string(p.conic()) << "," << p.w() << "," << *p.index() << ","
                      << (p.side() ? to_string(*p.side()) : "") << "," << coord_str(p.x()) << ","
                      << coord_str(p.y()) << "\n";
        return 0;
    }
    for (const ConicPoint& p : pts)
        std::cout << point_json(p).dump() << "\n";
    return 0;
}

struct SolveArgs {
    std::string conic;
    long w = 0;
    std::size_t count = 0;
    std::string format = "json";
};

int run_solve(const SolveArgs& a) {
    bool c2 = a.conic == "c2";
    std::vector<IntPair> pairs = c2 ? solve_C2(a.w, a.count) : solve_C3(a.w, a.count);
    std::string name = c2 ? "C2" : "C3";
    std::size_t n0 = c2 ? 0 : 1; // the C3 ladder starts at the first positive rung
    if (a.format == "csv") {
        std::cout << "conic,w,n,x,y\n";
        for (std::size_t i = 0; i < pairs.size(); ++i)
            std::cout << name << "," << a.w << "," << n0 + i << "," << pairs[i].first.get_str()
                      << "," << pairs[i].second.get_str() << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        json j;
        j["conic"] = name;
        j["w"] = a.w;
        j["n"] = n0 + i;
        j["x"] = pairs[i].first.get_str();
        j["y"] = pairs[i].second.get_str();
        std::cout << j.dump() << "\n";
    }
    return 0;
}

struct OracleArgs {
    std::string conic;
    long w = 0;
    long bound = 0;
    std::string format = "json";
};

int run_oracle(const OracleArgs& a) {
    if (a.conic == "c") {
        std::vector<RadicalPointClass> found = oracle_radical_points(a.w, a.bound);
        if (a.format == "csv") {
            std::cout << "conic,w,side,x,y\n";
            for (const auto& r : found) {
                QuadInt x = r.side == Side::L ? QuadInt(0, r.u, a.w) : QuadInt(r.u, 0, a.w);
                QuadInt y = r.side == Side::L ? QuadInt(r.v, 0, a.w) : QuadInt(0, r.v, a.w);
                std::cout << "C," << a.w << "," << to_string(r.side) << "," << x.str() << ","
                          << y.str() << "\n";
            }
            return 0;
        }
        for (const auto& r : found) {
            QuadInt x = r.side == Side::L ? QuadInt(0, r.u, a.w) : QuadInt(r.u, 0, a.w);
            QuadInt y = r.side == Side::L ? QuadInt(r.v, 0, a.w) : QuadInt(0, r.v, a.w);
            json j;
            j["conic"] = "C";
            j["w"] = a.w;
            j["x"] = coord_json(Coord(x));
            j["y"] = coord_json(Coord(y));
            j["side"] = to_string(r.side);
            std::cout << j.dump() << "\n";
        }
        return 0;
    }
    bool c2 = a.conic == "c2";
    std::vector<IntPair> pairs = c2 ? oracle_C2(a.w, a.bound) : oracle_C3(a.w, a.bound);
    std::string name = c2 ? "C2" : "C3";
    if (a.format == "csv") {
        std::cout << "conic,w,x,y\n";
        for (const auto& [x, y] : pairs)
            std::cout << name << "," << a.w << "," << x.get_str() << "," << y.get_str() << "\n";
        return 0;
    }
    for (const auto& [x, y] : pairs) {
        json j;
        j["conic"] = name;
        j["w"] = a.w;
        j["x"] = x.get_str();
        j["y"] = y.get_str();
        std::cout << j.dump() << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string identity = "all";
    std::size_t n_max = 30;
    std::string format = "json";
};

json report_json(const IdentityReport& rep) {
    auto failures = [](const std::vector<IdentityFailure>& fs) {
        json arr = json::array();
        for (const auto& f : fs)
            arr.push_back(json{
                {"part", f.part}, {"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        return arr;
    };
    json j;
    j["identity"] = rep.identity;
    j["n_max"] = rep.n_max;
    j["status"] = rep.verified ? "verified" : "counterexample";
    j["counterexamples"] = failures(rep.counterexamples);
    j["known_variant_failures"] = failures(rep.known_variant_failures);
    return j;
}

int run_verify(const VerifyArgs& a) {
    std::vector<IdentityReport> reports;
    if (a.identity == "uT" || a.identity == "all")
        reports.push_back(verify_uT(a.n_max));
    if (a.identity == "S" || a.identity == "all")
        reports.push_back(verify_S_identities(a.n_max));
    if (a.identity == "MV" || a.identity == "all")
        reports.push_back(verify_MV_identities(a.n_max));
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.verified;
    if (a.format == "csv") {
        std::cout << "identity,status,part,index,lhs,rhs\n";
        for (const auto& r : reports) {
            if (r.counterexamples.empty())
                std::cout << r.identity << ",verified,,,,\n";
            for (const auto& f : r.counterexamples)
                std::cout << r.identity << ",counterexample," << f.part << "," << f.index << ","
                          << f.lhs << "," << f.rhs << "\n";
            for (const auto& f : r.known_variant_failures)
                std::cout << r.identity << ",known-variant," << f.part << "," << f.index << ","
                          << f.lhs << "," << f.rhs << "\n";
        }
        return ok ? 0 : 1;
    }
    json out;
    out["schema"] = 1;
    out["command"] = "verify";
    out["identity"] = a.identity;
    out["n_max"] = a.n_max;
    out["status"] = ok ? "verified" : "counterexample";
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back(report_json(r));
    out["reports"] = arr;
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

struct OeisArgs {
    long w = 0;
    std::size_t count = 20;
    bool fetch = false;
    std::string data_dir = "data/oeis";
    std::string a_number; // ad hoc single-sequence mode
    std::string which = "u";
    long shift = 0;
    std::string format = "json";
};

json match_json(const SequenceMatch& m) {
    json j;
    j["which"] = m.which;
    j["a_number"] = m.a_number;
    j["shift"] = m.shift;
    j["compared"] = m.compared;
    j["status"] = m.matched ? "match" : "mismatch";
    if (!m.matched) {
        j["first_mismatch"] = *m.first_mismatch;
        j["expected"] = m.expected;
        j["actual"] = m.actual;
    }
    return j;
}

int run_oeis(const OeisArgs& a) {
    std::vector<SequenceMatch> matches;
    std::string source = a.fetch ? "oeis.org" : "fixtures";
    if (!a.a_number.empty()) {
        BFileFixture fx = a.fetch ? parse_bfile(fetch_bfile(a.a_number, true))
                                  : load_fixture(a.data_dir, a.a_number);
        if (fx.a_number.empty())
            fx.a_number = a.a_number;
        matches.push_back(check_sequence(a.which, a.w, a.shift, a.count, fx));
    } else if (a.fetch) {
        const Table1Row* row = nullptr;
        for (const auto& r : table1())
            if (r.w == a.w)
                row = &r;
        if (!row)
            throw std::out_of_range("no catalogued row for w = " + std::to_string(a.w) +
                                    "; use --a-number for ad hoc checks");
        auto fetched = [&](const std::string& ref) {
            BFileFixture fx = parse_bfile(fetch_bfile(ref, true));
            if (fx.a_number.empty())
                fx.a_number = ref;
            return fx;
        };
        matches.push_back(check_sequence("u", a.w, row->u_shift, a.count, fetched(row->u_ref)));
        matches.push_back(check_sequence("b", a.w, row->b_shift, a.count, fetched(row->b_ref)));
        matches.push_back(check_sequence("c", a.w, row->c_shift, a.count, fetched(row->c_ref)));
    } else {
        Table1Report rep = check_table1(a.w, a.count, a.data_dir);
        matches = rep.sequences;
    }
    bool ok = true;
    for (const auto& m : matches)
        ok = ok && m.matched;
    if (a.format == "csv") {
        std::cout << "which,a_number,shift,compared,status,first_mismatch\n";
        for (const auto& m : matches)
            std::cout << m.which << "," << m.a_number << "," << m.shift << "," << m.compared
                      << "," << (m.matched ? "match" : "mismatch") << ","
                      << (m.first_mismatch ? std::to_string(*m.first_mismatch) : "") << "\n";
        return ok ? 0 : 1;
    }
    json out;
    out["schema"] = 1;
    out["command"] = "oeis-check";
    out["w"] = a.w;
    out["count"] = a.count;
    out["source"] = source;
    out["status"] = ok ? "match" : "mismatch";
    json arr = json::array();
    for (const auto& m : matches)
        arr.push_back(match_json(m));
    out["sequences"] = arr;
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

void add_format(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic on the Matiyasevich conic family C, C2, C3"};
    app.require_subcommand(1);

    SeqArgs seq_args;
    auto* seq_cmd = app.add_subcommand("seq", "terms of the a, b, c or u sequence");
    seq_cmd->add_option("--which", seq_args.which, "sequence name (a needs non-square w)")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "u"}));
    seq_cmd->add_option("--w", seq_args.w, "conic parameter, integer >= 4")->required();
    seq_cmd->add_option("--count", seq_args.count, "number of terms")->required();
    add_format(seq_cmd, seq_args.format);

    PointsArgs points_args;
    auto* points_cmd = app.add_subcommand("points", "generated ladder points of C(w)");
    points_cmd->add_option("--w", points_args.w)->required();
    points_cmd->add_option("--count", points_args.count)->required();
    add_format(points_cmd, points_args.format);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "positive solution ladders of C2 or C3");
    solve_cmd->add_option("--conic", solve_args.conic)
        ->required()
        ->check(CLI::IsMember({"c2", "c3"}));
    solve_cmd->add_option("--w", solve_args.w)->required();
    solve_cmd->add_option("--count", solve_args.count)->required();
    add_format(solve_cmd, solve_args.format);

    OracleArgs oracle_args;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive bounded search, independent of the ladders");
    oracle_cmd->add_option("--conic", oracle_args.conic)
        ->required()
        ->check(CLI::IsMember({"c", "c2", "c3"}));
    oracle_cmd->add_option("--w", oracle_args.w)->required();
    oracle_cmd->add_option("--bound", oracle_args.bound)->required();
    add_format(oracle_cmd, oracle_args.format);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "symbolic identity suites");
    verify_cmd->add_option("--identity", verify_args.identity)
        ->check(CLI::IsMember({"uT", "S", "MV", "all"}));
    verify_cmd->add_option("--n-max", verify_args.n_max, "index range (default 30)");
    add_format(verify_cmd, verify_args.format);

    OeisArgs oeis_args;
    auto* oeis_cmd = app.add_subcommand("oeis-check", "compare sequences against OEIS b-files");
    oeis_cmd->add_option("--w", oeis_args.w)->required();
    oeis_cmd->add_option("--count", oeis_args.count, "terms to compare (default 20)");
    oeis_cmd->add_flag("--fetch", oeis_args.fetch, "fetch live b-files from oeis.org");
    oeis_cmd->add_option("--data-dir", oeis_args.data_dir, "bundled fixture directory");
    oeis_cmd->add_option("--a-number", oeis_args.a_number, "check one sequence against this entry");
    oeis_cmd->add_option("--which", oeis_args.which, "sequence for --a-number mode")
        ->check(CLI::IsMember({"u", "b", "c"}));
    oeis_cmd->add_option("--shift", oeis_args.shift, "index shift for --a-number mode");
    add_format(oeis_cmd, oeis_args.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*seq_cmd)
            return run_seq(seq_args);
        if (*points_cmd)
            return run_points(points_args);
        if (*solve_cmd)
            return run_solve(solve_args);
        if (*oracle_cmd)
            return run_oracle(oracle_args);
        if (*verify_cmd)
            return run_verify(verify_args);
        if (*oeis_cmd)
            return run_oeis(oeis_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
