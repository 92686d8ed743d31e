#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace matconic {

/**
 * Contents of an OEIS b-file: consecutive "index value" lines, optionally
 * preceded by '#' comment lines. `offset` is the index of the first term
 * and indices must be contiguous. `a_number` is taken from a comment of
 * the form "# A004146" when one is present.
 */
struct BFileFixture {
    std::string a_number;
    long offset = 0;
    std::vector<mpz_class> terms;

    /// Term with b-file index i; throws std::out_of_range outside the file.
    const mpz_class& at_index(long i) const;
};

/// Parse b-file text. Malformed or non-contiguous lines raise
/// std::runtime_error naming the offending line number.
BFileFixture parse_bfile(const std::string& text);

/// Inverse of parse_bfile, up to comment placement.
std::string render_bfile(const BFileFixture& fx);

/// "A004146" -> "b004146.txt", the conventional b-file name.
std::string bfile_filename(const std::string& a_number);

/// Load a bundled fixture from `dir`; throws std::runtime_error when the
/// file is missing.
BFileFixture load_fixture(const std::filesystem::path& dir, const std::string& a_number);

/**
 * Catalogue row tying the three sequences at one w to their OEIS entries.
 * `shift` N means fixture term at index k equals the sequence term k + N;
 * the two u-columns marked shifted-by-one drop the leading 0.
 */
struct Table1Row {
    long w;
    std::string u_ref, b_ref, c_ref;
    long u_shift = 0, b_shift = 0, c_shift = 0;
};

/// Bundled rows, w = 4..11.
const std::vector<Table1Row>& table1();

struct SequenceMatch {
    std::string which;
    std::string a_number;
    long shift = 0;
    std::size_t compared = 0;
    bool matched = false;
    std::optional<long> first_mismatch; // b-file index
    std::string expected;               // catalogued value at the first mismatch
    std::string actual;                 // generated term it disagrees with
};

struct Table1Report {
    long w = 0;
    std::size_t count = 0;
    std::vector<SequenceMatch> sequences;

    bool all_matched() const;
};

/// Compare `count` fixture terms of each catalogued sequence at `w` against
/// the generated u, b, c values. Throws when w has no bundled row or a
/// fixture is missing or too short.
Table1Report check_table1(long w, std::size_t count, const std::filesystem::path& data_dir);

/// Same comparison against freshly parsed b-file text (e.g. fetched).
SequenceMatch check_sequence(const std::string& which, long w, long shift, std::size_t count,
                             const BFileFixture& fx);

/// Download b-file text from oeis.org over HTTPS. Refuses to touch the
/// network unless `network_enabled` is set, so every default code path
/// stays offline. Throws on invalid A-numbers and transport errors.
std::string fetch_bfile(const std::string& a_number, bool network_enabled);

} // namespace matconic
