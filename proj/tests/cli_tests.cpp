// Golden-file tests for the command line tool. Each case runs the binary,
// captures stdout+stderr, and compares bytes against tests/golden/<name>.txt
// plus the expected exit code. Every command runs twice to pin determinism.
//
// Usage: cli_tests <binary> <golden-dir> <data-dir> [--regen]

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Case {
    std::string name;
    std::string args; // appended to the binary path; {data} expands to the data dir
    int expected_exit;
};

const std::vector<Case> kCases = {
    {"seq_u_json", "seq --which u --w 5 --count 6", 0},
    {"seq_b_json", "seq --which b --w 7 --count 8", 0},
    {"seq_a_csv", "seq --which a --w 5 --count 6 --format csv", 0},
    {"seq_a_square_w", "seq --which a --w 9 --count 3", 1},
    {"seq_bad_which", "seq --which z --w 5 --count 3", 2},
    {"seq_missing_count", "seq --which u --w 5", 2},
    {"points_json", "points --w 5 --count 4", 0},
    {"points_csv", "points --w 5 --count 4 --format csv", 0},
    {"points_square_csv", "points --w 9 --count 4 --format csv", 0},
    {"points_low_w", "points --w 3 --count 2", 1},
    {"solve_c2_json", "solve --conic c2 --w 5 --count 4", 0},
    {"solve_c3_csv", "solve --conic c3 --w 5 --count 3 --format csv", 0},
    {"solve_bad_conic", "solve --conic c --w 5 --count 3", 2},
    {"oracle_c_json", "oracle --conic c --w 5 --bound 10", 0},
    {"oracle_c_csv", "oracle --conic c --w 5 --bound 10 --format csv", 0},
    {"oracle_c_square_w", "oracle --conic c --w 9 --bound 10", 1},
    {"oracle_c2_csv", "oracle --conic c2 --w 6 --bound 1000 --format csv", 0},
    {"oracle_c3_json", "oracle --conic c3 --w 9 --bound 200", 0},
    {"verify_all_json", "verify --n-max 6", 0},
    {"verify_uT_csv", "verify --identity uT --n-max 10 --format csv", 0},
    {"verify_mv_csv", "verify --identity MV --n-max 3 --format csv", 0},
    {"oeis_check_json", "oeis-check --w 5 --count 12 --data-dir {data}", 0},
    {"oeis_check_shifted_csv", "oeis-check --w 10 --count 12 --data-dir {data} --format csv", 0},
    {"oeis_check_unlisted_w", "oeis-check --w 12 --count 3 --data-dir {data}", 1},
    {"oeis_check_adhoc", "oeis-check --w 5 --count 10 --data-dir {data} --a-number A001906 "
                         "--which b", 0},
    {"oeis_check_bad_anumber", "oeis-check --w 5 --count 3 --a-number Axxxx --which b "
                               "--data-dir {data}", 1},
    {"no_subcommand", "", 2},
};

std::string expand(std::string s, const std::string& key, const std::string& value) {
    auto pos = s.find(key);
    while (pos != std::string::npos) {
        s.replace(pos, key.size(), value);
        pos = s.find(key, pos + value.size());
    }
    return s;
}

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    ok = static_cast<bool>(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_difference(const std::string& a, const std::string& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0, line = 1;
    while (i < n && a[i] == b[i]) {
        if (a[i] == '\n')
            ++line;
        ++i;
    }
    return "first difference at byte " + std::to_string(i) + " (line " + std::to_string(line) +
           ")";
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cerr << "usage: cli_tests <binary> <golden-dir> <data-dir> [--regen]\n";
        return 2;
    }
    std::string binary = argv[1], golden_dir = argv[2], data_dir = argv[3];
    bool regen = argc > 4 && std::string(argv[4]) == "--regen";

    int failures = 0;
    for (const auto& c : kCases) {
        std::string cmd = binary + " " + expand(c.args, "{data}", data_dir);
        RunResult first = run(cmd);
        RunResult second = run(cmd);
        std::string golden_path = golden_dir + "/" + c.name + ".txt";

        std::vector<std::string> problems;
        if (first.exit_code != c.expected_exit)
            problems.push_back("exit " + std::to_string(first.exit_code) + ", expected " +
                               std::to_string(c.expected_exit));
        if (first.output != second.output || first.exit_code != second.exit_code)
            problems.push_back("two runs disagree: " +
                               first_difference(first.output, second.output));

        if (regen) {
            if (problems.empty()) {
                std::ofstream out(golden_path, std::ios::binary);
                out << first.output;
                std::cout << "[GEN ] " << c.name << "\n";
            } else {
                std::cout << "[FAIL] " << c.name << ": " << problems.front() << "\n";
                ++failures;
            }
            continue;
        }

        bool ok = false;
        std::string want = read_file(golden_path, ok);
        if (!ok)
            problems.push_back("missing golden file " + golden_path);
        else if (first.output != want)
            problems.push_back("output differs from golden: " +
                               first_difference(first.output, want));

        if (problems.empty()) {
            std::cout << "[PASS] " << c.name << "\n";
        } else {
            std::cout << "[FAIL] " << c.name;
            for (const auto& p : problems)
                std::cout << " | " << p;
            std::cout << "\n";
            ++failures;
        }
    }
    if (failures)
        std::cout << failures << " of " << kCases.size() << " cli cases failed\n";
    else
        std::cout << "all " << kCases.size() << " cli cases passed\n";
    return failures;
}
