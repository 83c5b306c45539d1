#include "lsskit/dynamic_lis.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsskit {

namespace detail {

struct Node {
    Node* left = nullptr;
    Node* right = nullptr;
    std::uint64_t priority = 0;
    std::size_t subtree = 1;
    Cell cell;
};

namespace {

std::size_t node_size(const Node* n) { return n ? n->subtree : 0; }

void pull(Node* n) { n->subtree = 1 + node_size(n->left) + node_size(n->right); }

Node* merge(Node* a, Node* b) {
    if (!a) return b;
    if (!b) return a;
    if (a->priority > b->priority) {
        a->right = merge(a->right, b);
        pull(a);
        return a;
    }
    b->left = merge(a, b->left);
    pull(b);
    return b;
}

// First `k` cells into *left, the rest into *right.
void split_at(Node* t, std::size_t k, Node** left, Node** right) {
    if (!t) {
        *left = *right = nullptr;
        return;
    }
    if (node_size(t->left) >= k) {
        split_at(t->left, k, left, &t->left);
        pull(t);
        *right = t;
    } else {
        split_at(t->right, k - node_size(t->left) - 1, &t->right, right);
        pull(t);
        *left = t;
    }
}

const Node* rightmost(const Node* t) {
    while (t->right) t = t->right;
    return t;
}

void destroy(Node* t) {
    if (!t) return;
    destroy(t->left);
    destroy(t->right);
    delete t;
}

void collect_inorder(const Node* t, std::vector<Cell>& out) {
    if (!t) return;
    collect_inorder(t->left, out);
    out.push_back(t->cell);
    collect_inorder(t->right, out);
}

}  // namespace

}  // namespace detail

using detail::Node;

LevelList::~LevelList() { detail::destroy(root_); }

LevelList::LevelList(LevelList&& other) noexcept
    : root_(other.root_), tail_value_(other.tail_value_) {
    other.root_ = nullptr;
}

LevelList& LevelList::operator=(LevelList&& other) noexcept {
    if (this != &other) {
        detail::destroy(root_);
        root_ = other.root_;
        tail_value_ = other.tail_value_;
        other.root_ = nullptr;
    }
    return *this;
}

std::size_t LevelList::size() const { return detail::node_size(root_); }

Cell LevelList::tail() const { return detail::rightmost(root_)->cell; }

Cell LevelList::cell_at(std::size_t index) const {
    const Node* t = root_;
    while (true) {
        const std::size_t left = detail::node_size(t->left);
        if (index < left) {
            t = t->left;
        } else if (index == left) {
            return t->cell;
        } else {
            index -= left + 1;
            t = t->right;
        }
    }
}

void LevelList::append(Cell c, std::uint64_t priority) {
    Node* n = new Node;
    n->priority = priority;
    n->cell = c;
    root_ = detail::merge(root_, n);
    tail_value_ = c.value;
}

LevelList LevelList::detach_tail(std::size_t first_index) {
    Node* keep = nullptr;
    Node* off = nullptr;
    detail::split_at(root_, first_index, &keep, &off);
    root_ = keep;
    LevelList result;
    result.root_ = off;
    result.refresh_tail_value();
    refresh_tail_value();
    return result;
}

void LevelList::concat(LevelList&& suffix) {
    if (!suffix.root_) return;
    root_ = detail::merge(root_, suffix.root_);
    tail_value_ = suffix.tail_value_;
    suffix.root_ = nullptr;
}

std::optional<Cell> LevelList::last_before(std::uint64_t pos) const {
    const Node* best = nullptr;
    const Node* t = root_;
    while (t) {
        if (t->cell.pos < pos) {
            best = t;
            t = t->right;
        } else {
            t = t->left;
        }
    }
    if (!best) return std::nullopt;
    return best->cell;
}

std::size_t LevelList::first_index_value_le(std::uint32_t threshold) const {
    std::size_t before = 0;
    const Node* t = root_;
    while (t) {
        if (t->cell.value <= threshold) {
            t = t->left;
        } else {
            before += detail::node_size(t->left) + 1;
            t = t->right;
        }
    }
    return before;
}

void LevelList::collect(std::vector<Cell>& out) const {
    detail::collect_inorder(root_, out);
}

void LevelList::refresh_tail_value() {
    tail_value_ = root_ ? detail::rightmost(root_)->cell.value : 0;
}

std::uint64_t LisStructure::next_priority() {
    // splitmix64 step; fixed seed keeps runs reproducible.
    std::uint64_t z = (priority_state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::optional<std::uint32_t> LisStructure::min_value() const {
    if (levels_.empty()) return std::nullopt;
    return levels_.front().min_value();
}

std::size_t LisStructure::insert_right(std::uint32_t value, std::uint32_t payload) {
    // Level minima strictly increase with depth, so the deepest level whose
    // minimum is below `value` is found by binary search. The new cell
    // extends a chain ending there and lands one level deeper.
    std::size_t lo = 0;
    std::size_t hi = levels_.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (levels_[mid].min_value() < value) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    const std::size_t level_index = lo;  // first level whose minimum is >= value
    if (level_index == levels_.size()) levels_.emplace_back();

    Cell c;
    c.pos = next_pos_++;
    c.value = value;
    c.payload = payload;
    levels_[level_index].append(c, next_priority());
    ++count_;
    return level_index + 1;
}

std::size_t LisStructure::delete_min_batch() {
    if (levels_.empty()) return 0;

    // The minimal cells form the tail run of level 1; one split removes them.
    const std::uint32_t minimum = levels_.front().min_value();
    const std::size_t boundary = levels_.front().first_index_value_le(minimum);
    std::size_t batch = 0;
    {
        LevelList removed = levels_.front().detach_tail(boundary);
        batch = removed.size();
    }
    count_ -= batch;

    // Demotion cascade. After level k has been reduced, the cells of level
    // k+1 that lost their last strictly-smaller predecessor form a
    // consecutive tail run; they move down one level by split + concat.
    // Survivors form a prefix, so the boundary is a binary search whose
    // probe asks level k for the predecessor-by-pos of the probed cell.
    for (std::size_t k = 0; k + 1 < levels_.size(); ++k) {
        const LevelList& lower = levels_[k];
        LevelList& upper = levels_[k + 1];

        const auto demoted = [&](const Cell& c) {
            const std::optional<Cell> pred = lower.last_before(c.pos);
            return !pred || pred->value >= c.value;
        };

        std::size_t lo = 0;
        std::size_t hi = upper.size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (demoted(upper.cell_at(mid))) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if (lo == upper.size()) break;  // nothing demoted; deeper levels unaffected
        LevelList run = upper.detach_tail(lo);
        levels_[k].concat(std::move(run));
    }

    // Only the top level can end up empty.
    if (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
    return batch;
}

std::vector<Cell> LisStructure::extract_lis() const {
    if (levels_.empty()) throw std::logic_error("empty");
    std::vector<Cell> chain;
    chain.reserve(levels_.size());
    Cell current = levels_.back().tail();
    chain.push_back(current);
    for (std::size_t k = levels_.size(); k-- > 1;) {
        // The latest cell of the level below that precedes `current` has the
        // smallest value among its eligible cells, so it always chains.
        const std::optional<Cell> pred = levels_[k - 1].last_before(current.pos);
        if (!pred || pred->value >= current.value) {
            throw std::logic_error("level structure corrupt: missing chain predecessor");
        }
        current = *pred;
        chain.push_back(current);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<Cell> LisStructure::flatten() const {
    std::vector<Cell> all;
    all.reserve(count_);
    for (const LevelList& level : levels_) level.collect(all);
    std::sort(all.begin(), all.end(),
              [](const Cell& a, const Cell& b) { return a.pos < b.pos; });
    return all;
}

std::vector<Cell> LisStructure::level_cells(std::size_t k) const {
    if (k == 0 || k > levels_.size()) throw std::out_of_range("level index");
    std::vector<Cell> out;
    levels_[k - 1].collect(out);
    return out;
}

void LisStructure::check_invariants() const {
    std::size_t total = 0;
    std::uint64_t max_pos = 0;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        std::vector<Cell> cells;
        levels_[k].collect(cells);
        if (cells.empty()) throw std::logic_error("empty level present");
        for (std::size_t i = 1; i < cells.size(); ++i) {
            if (cells[i - 1].pos >= cells[i].pos)
                throw std::logic_error("level pos not strictly increasing");
            if (cells[i - 1].value < cells[i].value)
                throw std::logic_error("level values increase");
        }
        if (levels_[k].min_value() != cells.back().value)
            throw std::logic_error("cached tail value stale");
        if (k > 0 && levels_[k - 1].min_value() >= levels_[k].min_value())
            throw std::logic_error("level minima not strictly increasing");
        total += cells.size();
        max_pos = std::max(max_pos, cells.back().pos);
    }
    if (total != count_) throw std::logic_error("cell count mismatch");
    if (count_ > 0 && max_pos >= next_pos_)
        throw std::logic_error("position counter behind live cells");
}

}  // namespace lsskit
