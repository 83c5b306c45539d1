#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace lsskit {

namespace detail {
struct Node;
}

// One live element of the dynamic sequence.
//
// `pos` is a global insertion counter: unique, strictly increasing in
// insertion order, and never reused after a deletion. Only the relative
// order of `pos` values matters, so deletions never force renumbering.
// `payload` is caller data carried through untouched.
struct Cell {
    std::uint64_t pos = 0;
    std::uint32_t value = 0;
    std::uint32_t payload = 0;
};

// Ordered run of cells, ascending by pos and non-increasing by value.
// Backed by a treap keyed implicitly by list order; since pos ascends and
// value descends along the list, the same tree answers positional rank
// queries, predecessor-by-pos queries, and value-threshold searches, each
// in O(log) expected time. Split and concatenate are O(log) as well, which
// is what makes batched demotions between runs cheap.
class LevelList {
public:
    LevelList() = default;
    ~LevelList();
    LevelList(LevelList&& other) noexcept;
    LevelList& operator=(LevelList&& other) noexcept;
    LevelList(const LevelList&) = delete;
    LevelList& operator=(const LevelList&) = delete;

    bool empty() const { return root_ == nullptr; }
    std::size_t size() const;

    // Value at the tail. Because values are non-increasing this is the
    // minimum value of the run. List must be non-empty.
    std::uint32_t min_value() const { return tail_value_; }

    Cell tail() const;
    Cell cell_at(std::size_t index) const;

    // Appends at the tail. Caller guarantees c.pos exceeds every live pos
    // and c.value does not exceed the current tail value.
    void append(Cell c, std::uint64_t priority);

    // Detaches cells [first_index, size()) into a new list.
    LevelList detach_tail(std::size_t first_index);

    // Appends a whole list whose positions all exceed this list's tail pos
    // and whose values do not exceed this list's tail value.
    void concat(LevelList&& suffix);

    // Cell with the largest pos strictly below `pos`, if any.
    std::optional<Cell> last_before(std::uint64_t pos) const;

    // First index whose value is <= threshold (== size() if none). Valid
    // because values are non-increasing along the list.
    std::size_t first_index_value_le(std::uint32_t threshold) const;

    void collect(std::vector<Cell>& out) const;

private:
    detail::Node* root_ = nullptr;
    std::uint32_t tail_value_ = 0;

    void refresh_tail_value();
};

// Length of a longest strictly increasing subsequence of a dynamic integer
// sequence, maintained under two mutations: insertion at the right end and
// batched deletion of every element holding the current minimum value.
//
// Cells are partitioned into level lists L_1..L_ell, where a cell sits in
// L_k iff the longest increasing run of the live sequence ending at that
// cell has length k. The LIS length is then simply the number of levels.
// Level minima sit at the tails and strictly increase with k, so insertion
// resolves with a binary search over levels, and a batched minimum deletion
// is a tail split of L_1 followed by a one-level demotion cascade in which
// each moved block is a consecutive tail run.
//
// Single-writer structure: safe to move across threads, concurrent reads
// require external exclusion with writes.
class LisStructure {
public:
    LisStructure() = default;

    bool empty() const { return count_ == 0; }
    std::size_t size() const { return count_; }

    // Current LIS length of the live sequence. O(1).
    std::size_t lis_length() const { return levels_.size(); }

    // Minimum live value, or nullopt when empty. O(1).
    std::optional<std::uint32_t> min_value() const;

    // Appends `value` at the right end of the sequence. Returns the level
    // (1-based) the new cell landed on. Equal values never chain, so the
    // level search uses strict comparison against the level minima.
    std::size_t insert_right(std::uint32_t value, std::uint32_t payload);

    // Removes every cell whose value equals min_value(). Returns the number
    // of cells removed; 0 on an empty structure. The LIS length drops by at
    // most 1.
    std::size_t delete_min_batch();

    // One longest strictly increasing subsequence, as cells in ascending
    // pos (and ascending value) order; length equals lis_length().
    // Throws std::logic_error on an empty structure.
    std::vector<Cell> extract_lis() const;

    // All live cells in ascending pos order.
    std::vector<Cell> flatten() const;

    // Cells of level k (1-based), ascending by pos. Throws std::out_of_range.
    std::vector<Cell> level_cells(std::size_t k) const;
    std::size_t level_count() const { return levels_.size(); }

    // Verifies the structural invariants (per-level orderings, strictly
    // increasing level minima, cell count). Throws std::logic_error with a
    // description on the first violation. Intended for tests and the
    // cross-verification harness; cost is linear in the live cell count.
    void check_invariants() const;

private:
    std::vector<LevelList> levels_;
    std::size_t count_ = 0;
    std::uint64_t next_pos_ = 1;
    std::uint64_t priority_state_ = 0x9e3779b97f4a7c15ull;

    std::uint64_t next_priority();
};

}  // namespace lsskit
