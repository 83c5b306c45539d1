#include "lsskit/lss.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lsskit {

namespace {

void require_indexable(std::string_view s) {
    if (s.size() >= std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("input too long for 32-bit positions");
}

// Runs states 1..p_last, invoking after_state(p, structure) after each one.
template <typename F>
void run_partition_states(std::string_view s, const MatchIndex& index,
                          std::size_t p_last, SweepTrace& trace,
                          LisStructure& structure, F&& after_state) {
    for (std::size_t p = 1; p <= p_last; ++p) {
        // Pairs whose suffix position just moved into the prefix have value
        // p, and value p can only occur as the live minimum.
        if (const auto m = structure.min_value(); m && *m == p) {
            structure.delete_min_batch();
            ++trace.batched_deletions;
        }
        // New pairs of prefix column p, appended in descending suffix
        // position so the global order stays (column asc, row desc).
        const auto& positions = index.occ[static_cast<unsigned char>(s[p - 1])];
        const auto first_after =
            std::upper_bound(positions.begin(), positions.end(),
                             static_cast<std::uint32_t>(p));
        for (auto it = positions.end(); it != first_after;) {
            --it;
            structure.insert_right(*it, static_cast<std::uint32_t>(p));
            ++trace.insertions;
        }
        after_state(p, structure);
    }
}

}  // namespace

MatchIndex build_match_index(std::string_view s) {
    require_indexable(s);
    MatchIndex index;
    for (std::size_t i = 0; i < s.size(); ++i) {
        index.occ[static_cast<unsigned char>(s[i])].push_back(
            static_cast<std::uint32_t>(i + 1));
    }
    for (const auto& positions : index.occ) {
        const std::uint64_t c = positions.size();
        index.m_total += c * (c - 1) / 2;
    }
    return index;
}

bool all_distinct(std::string_view s) {
    std::array<bool, 256> seen{};
    for (const char c : s) {
        bool& slot = seen[static_cast<unsigned char>(c)];
        if (slot) return false;
        slot = true;
    }
    return true;
}

std::vector<TEntry> build_t_sequence(std::string_view s, std::size_t p) {
    require_indexable(s);
    if (p == 0 || p >= s.size()) throw std::invalid_argument("bad partition");
    const MatchIndex index = build_match_index(s);
    std::vector<TEntry> sequence;
    for (std::size_t i = 1; i <= p; ++i) {
        const auto& positions = index.occ[static_cast<unsigned char>(s[i - 1])];
        const auto first_after =
            std::upper_bound(positions.begin(), positions.end(),
                             static_cast<std::uint32_t>(p));
        for (auto it = positions.end(); it != first_after;) {
            --it;
            sequence.push_back({*it, static_cast<std::uint32_t>(i)});
        }
    }
    return sequence;
}

SweepTrace sweep(std::string_view s) {
    return sweep(s, SweepObserver{});
}

SweepTrace sweep(std::string_view s, const SweepObserver& observe) {
    require_indexable(s);
    const std::size_t n = s.size();
    if (n < 2) throw std::invalid_argument("sweep requires |s| >= 2");

    const MatchIndex index = build_match_index(s);
    SweepTrace trace;
    trace.ell_per_p.assign(n - 1, 0);

    LisStructure structure;
    run_partition_states(s, index, n - 1, trace, structure,
                         [&](std::size_t p, const LisStructure& st) {
                             trace.ell_per_p[p - 1] =
                                 static_cast<std::uint32_t>(st.lis_length());
                             if (observe) observe(p, st);
                         });

    std::uint32_t best = 0;
    for (std::size_t p = 1; p < n; ++p) {
        if (trace.ell_per_p[p - 1] > best) {
            best = trace.ell_per_p[p - 1];
            trace.best_p = p;
        }
    }
    trace.r = 2 * best;
    return trace;
}

LssResult reconstruct(std::string_view s, std::size_t best_p,
                      std::uint32_t expected_r) {
    require_indexable(s);
    if (best_p == 0 || best_p >= s.size())
        throw std::invalid_argument("bad partition");

    const MatchIndex index = build_match_index(s);
    SweepTrace scratch;
    LisStructure structure;
    run_partition_states(s, index, best_p, scratch, structure,
                         [](std::size_t, const LisStructure&) {});

    if (structure.empty()) throw std::logic_error("reconstruction mismatch");
    const std::vector<Cell> chain = structure.extract_lis();
    if (expected_r != 0 && 2 * chain.size() != expected_r)
        throw std::logic_error("reconstruction mismatch");

    LssResult result;
    result.r = static_cast<std::uint32_t>(2 * chain.size());
    result.best_p = best_p;
    result.first_half.reserve(chain.size());
    result.second_half.reserve(chain.size());
    for (const Cell& cell : chain) {
        result.first_half.push_back(cell.payload);
        result.second_half.push_back(cell.value);
    }
    result.square.reserve(result.r);
    for (const std::uint32_t i : result.first_half) result.square.push_back(s[i - 1]);
    for (const std::uint32_t j : result.second_half) result.square.push_back(s[j - 1]);

    try {
        check_witness(s, result);
    } catch (const std::logic_error&) {
        throw std::logic_error("reconstruction mismatch");
    }
    return result;
}

LssResult lss(std::string_view s) {
    if (s.size() <= 1 || all_distinct(s)) return LssResult{};
    const SweepTrace trace = sweep(s);
    if (trace.r == 0) return LssResult{};  // unreachable after the pre-test
    return reconstruct(s, trace.best_p, trace.r);
}

void check_witness(std::string_view s, const LssResult& result) {
    if (result.r % 2 != 0) throw std::logic_error("odd square length");
    if (result.square.size() != result.r)
        throw std::logic_error("square length disagrees with r");
    const std::size_t half = result.r / 2;
    if (result.first_half.size() != half || result.second_half.size() != half)
        throw std::logic_error("half index count disagrees with r");

    if (result.r == 0) {
        if (result.best_p.has_value())
            throw std::logic_error("partition witness on empty result");
        return;
    }
    if (!result.best_p.has_value())
        throw std::logic_error("missing partition witness");
    const std::size_t p = *result.best_p;
    if (p == 0 || p >= s.size()) throw std::logic_error("partition out of range");

    std::uint32_t previous = 0;
    for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t i = result.first_half[k];
        if (i <= previous) throw std::logic_error("first half not increasing");
        previous = i;
    }
    if (previous > p) throw std::logic_error("first half crosses the partition");
    previous = static_cast<std::uint32_t>(p);
    for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t j = result.second_half[k];
        if (j <= previous) throw std::logic_error("second half not increasing");
        previous = j;
    }
    if (previous > s.size()) throw std::logic_error("index out of range");

    for (std::size_t k = 0; k < half; ++k) {
        if (result.square[k] != s[result.first_half[k] - 1])
            throw std::logic_error("square disagrees with first half");
        if (result.square[half + k] != s[result.second_half[k] - 1])
            throw std::logic_error("square disagrees with second half");
        if (result.square[k] != result.square[half + k])
            throw std::logic_error("halves differ");
    }
}

}  // namespace lsskit
