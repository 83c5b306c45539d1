#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsskit/dynamic_lis.hpp"

// Longest square subsequence of a byte string s of length n, computed as
// 2 * max over the n-1 partition points p of LCS(s[1..p], s[p+1..n]). Each
// prefix/suffix LCS instance is expressed as the LIS of the sequence of
// cross-partition matching pairs ordered by (column ascending, row
// descending); moving the partition one step right deletes every pair whose
// row just left the suffix (exactly the current minimum values) and appends
// the pairs of the new prefix column, so the whole family of instances is
// served by one LisStructure. Runtime is sensitive to the answer length r
// and the matching-pair count M rather than to n^2.
//
// All indices in the public contracts are 1-based.

namespace lsskit {

// Per-symbol occurrence positions (1-based, ascending) plus the total number
// of matching pairs M = sum over symbols of (count choose 2).
struct MatchIndex {
    std::array<std::vector<std::uint32_t>, 256> occ;
    std::uint64_t m_total = 0;
};

MatchIndex build_match_index(std::string_view s);

// True iff no byte value occurs twice. O(n).
bool all_distinct(std::string_view s);

// One cross-partition matching pair: `value` is the suffix-side position j,
// `column` the prefix-side position i.
struct TEntry {
    std::uint32_t value = 0;
    std::uint32_t column = 0;
};

// The matching-pair sequence for partition p, built directly from the
// definition (column ascending, row descending within a column). Reference
// construction for the incrementally maintained structure; O(M + n).
// Throws std::invalid_argument("bad partition") unless 1 <= p < |s|.
std::vector<TEntry> build_t_sequence(std::string_view s, std::size_t p);

struct SweepTrace {
    std::vector<std::uint32_t> ell_per_p;  // entry p-1 = LCS(s[1..p], s[p+1..n])
    std::size_t best_p = 1;                // smallest maximizer, 1-based
    std::uint32_t r = 0;                   // 2 * max entry
    std::uint64_t insertions = 0;          // total insert_right calls (= M)
    std::uint64_t batched_deletions = 0;   // total delete_min_batch calls
};

// Runs all partition states p = 1..n-1 over one dynamic-LIS structure.
// Requires |s| >= 2. The observer overload is invoked after every state with
// the state index and the live structure (test hook; also how per-partition
// curves are extracted without a second pass).
SweepTrace sweep(std::string_view s);

using SweepObserver = std::function<void(std::size_t p, const LisStructure&)>;
SweepTrace sweep(std::string_view s, const SweepObserver& observe);

struct LssResult {
    std::uint32_t r = 0;
    std::optional<std::size_t> best_p;      // absent when r == 0
    std::string square;                     // length r; halves are equal
    std::vector<std::uint32_t> first_half;  // i_1 < ... < i_l <= best_p
    std::vector<std::uint32_t> second_half; // best_p < j_1 < ... < j_l
};

// Rebuilds the structure up to state best_p (second pass; keeps memory at
// O(M) instead of snapshotting per-state lists) and extracts a witness
// square. `expected_r`, when nonzero, is cross-checked against the extracted
// length; any inconsistency throws std::logic_error("reconstruction
// mismatch") since it can only mean a structure bug.
LssResult reconstruct(std::string_view s, std::size_t best_p,
                      std::uint32_t expected_r = 0);

// Full pipeline: distinct-bytes pre-test (O(n) early out with r = 0), sweep,
// reconstruct.
LssResult lss(std::string_view s);

// Validates a result against the input: equal halves, strictly increasing
// occurrence indices, i_l <= p < j_1, |square| = r, r even. Throws
// std::logic_error describing the first violation.
void check_witness(std::string_view s, const LssResult& result);

}  // namespace lsskit
