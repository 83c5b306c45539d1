#include "lsskit/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lsskit::oracles {

namespace {

// Full tables above this many cells are refused; the traceback oracle is
// meant for desk-scale inputs.
constexpr std::size_t kMaxTableCells = std::size_t{1} << 26;

}  // namespace

DpTable lcs_table(std::string_view a, std::string_view b) {
    DpTable t;
    t.a_len = a.size();
    t.b_len = b.size();
    const std::size_t cells = (a.size() + 1) * (b.size() + 1);
    if (a.size() != 0 && cells / (a.size() + 1) != b.size() + 1)
        throw std::invalid_argument("lcs_table: input too large");
    if (cells > kMaxTableCells)
        throw std::invalid_argument("lcs_table: input too large");
    t.cells.assign(cells, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        const std::size_t row = i * (b.size() + 1);
        const std::size_t prev = row - (b.size() + 1);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                t.cells[row + j] = t.cells[prev + j - 1] + 1;
            } else {
                t.cells[row + j] = std::max(t.cells[prev + j], t.cells[row + j - 1]);
            }
        }
    }
    return t;
}

LcsWitness lcs_dp(std::string_view a, std::string_view b) {
    const DpTable t = lcs_table(a, b);
    LcsWitness w;
    w.length = t.at(a.size(), b.size());

    std::size_t i = a.size();
    std::size_t j = b.size();
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            w.subsequence.push_back(a[i - 1]);
            w.a_positions.push_back(static_cast<std::uint32_t>(i));
            w.b_positions.push_back(static_cast<std::uint32_t>(j));
            --i;
            --j;
        } else if (t.at(i - 1, j) >= t.at(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(w.subsequence.begin(), w.subsequence.end());
    std::reverse(w.a_positions.begin(), w.a_positions.end());
    std::reverse(w.b_positions.begin(), w.b_positions.end());
    return w;
}

std::size_t lcs_length(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return 0;
    std::vector<std::uint32_t> row(b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t diag = 0;  // row[j-1] before this iteration touched it
        const char ca = a[i];
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::uint32_t above = row[j];
            if (ca == b[j - 1]) {
                row[j] = diag + 1;
            } else if (row[j - 1] > row[j]) {
                row[j] = row[j - 1];
            }
            diag = above;
        }
    }
    return row[b.size()];
}

PerPartitionResult lss_per_partition(std::string_view s) {
    PerPartitionResult result;
    const std::size_t n = s.size();
    if (n >= 2) result.ell_per_p.resize(n - 1, 0);
    std::uint32_t best = 0;
    for (std::size_t p = 1; p < n; ++p) {
        const auto len =
            static_cast<std::uint32_t>(lcs_length(s.substr(0, p), s.substr(p)));
        result.ell_per_p[p - 1] = len;
        if (len > best) {
            best = len;
            result.best_p = p;
        }
    }
    result.r = 2 * best;
    return result;
}

ExhaustiveWitness lss_exhaustive_witness(std::string_view s) {
    const std::size_t n = s.size();
    if (n > 20) throw std::invalid_argument("too large");

    ExhaustiveWitness best;
    char buffer[20];
    const std::uint32_t limit = static_cast<std::uint32_t>(1u << n);
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        const unsigned k = static_cast<unsigned>(std::popcount(mask));
        if ((k & 1u) != 0 || k <= best.r) continue;
        unsigned len = 0;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
            buffer[len++] = s[static_cast<std::size_t>(std::countr_zero(bits))];
        }
        const unsigned half = k / 2;
        if (std::equal(buffer, buffer + half, buffer + half)) {
            best.r = k;
            best_mask = mask;
        }
    }
    for (std::uint32_t bits = best_mask; bits != 0; bits &= bits - 1) {
        best.positions.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)) + 1);
    }
    return best;
}

std::uint32_t lss_exhaustive(std::string_view s) {
    return lss_exhaustive_witness(s).r;
}

std::size_t lis_patience(std::span<const std::uint32_t> values) {
    std::vector<std::uint32_t> tails;
    for (const std::uint32_t v : values) {
        const auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) {
            tails.push_back(v);
        } else {
            *it = v;
        }
    }
    return tails.size();
}

}  // namespace lsskit::oracles
