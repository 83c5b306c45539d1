#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Independent reference implementations used by the test suites and by the
// CLI's cross-verification mode. Deliberately simple and slow; none of them
// share code with the sweep solver.

namespace lsskit::oracles {

// Classic prefix-LCS dynamic programming grid: at(i, j) is the LCS length of
// a[0..i) and b[0..j).
struct DpTable {
    std::size_t a_len = 0;
    std::size_t b_len = 0;
    std::vector<std::uint32_t> cells;

    std::uint32_t at(std::size_t i, std::size_t j) const {
        return cells[i * (b_len + 1) + j];
    }
};

DpTable lcs_table(std::string_view a, std::string_view b);

struct LcsWitness {
    std::size_t length = 0;
    std::string subsequence;
    std::vector<std::uint32_t> a_positions;  // 1-based, strictly increasing
    std::vector<std::uint32_t> b_positions;  // 1-based, strictly increasing
};

// Exact LCS length plus one witness via full-table traceback. Guarded
// against huge table allocations; use lcs_length() when only the length is
// needed.
LcsWitness lcs_dp(std::string_view a, std::string_view b);

// Two-row LCS length, O(|a|*|b|) time and O(min) memory.
std::size_t lcs_length(std::string_view a, std::string_view b);

struct PerPartitionResult {
    std::uint32_t r = 0;
    std::size_t best_p = 1;                  // smallest maximizer, 1-based
    std::vector<std::uint32_t> ell_per_p;    // entry p-1 = LCS(s[1..p], s[p+1..n])
};

// Longest square subsequence length by literally evaluating the LCS of every
// prefix/suffix split. Cubic overall; the yardstick everything else is
// checked against.
PerPartitionResult lss_per_partition(std::string_view s);

// Longest square subsequence length by enumerating all 2^n subsequences.
// Throws std::invalid_argument for n > 20.
std::uint32_t lss_exhaustive(std::string_view s);

struct ExhaustiveWitness {
    std::uint32_t r = 0;
    std::vector<std::uint32_t> positions;  // 1-based occurrence of the square
};

ExhaustiveWitness lss_exhaustive_witness(std::string_view s);

// Strict LIS length by patience sorting (tails array + binary search).
std::size_t lis_patience(std::span<const std::uint32_t> values);

}  // namespace lsskit::oracles
