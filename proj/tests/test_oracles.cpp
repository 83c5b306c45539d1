#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lsskit/oracles.hpp"
#include "lsskit/rng.hpp"
#include "test_support.hpp"

using namespace lsskit;
using namespace lsskit::oracles;

namespace {

bool is_subsequence(std::string_view needle, std::string_view hay) {
    std::size_t i = 0;
    for (const char c : hay) {
        if (i < needle.size() && needle[i] == c) ++i;
    }
    return i == needle.size();
}

}  // namespace

TEST_CASE("lcs_dp on fixed strings") {
    const LcsWitness w = lcs_dp("acbabc", "cabacbc");
    CHECK(w.length == 5);
    CHECK(w.subsequence.size() == 5);
    CHECK(is_subsequence(w.subsequence, "acbabc"));
    CHECK(is_subsequence(w.subsequence, "cabacbc"));

    CHECK(lcs_dp("", "x").length == 0);
    CHECK(lcs_dp("abc", "abc").length == 3);
    CHECK(lcs_dp("abc", "abc").subsequence == "abc");
}

TEST_CASE("lcs witness positions are a valid alignment") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_string(rng, rng.below(24), 1 + unsigned(rng.below(4)));
        const auto b = random_string(rng, rng.below(24), 1 + unsigned(rng.below(4)));
        const LcsWitness w = lcs_dp(a, b);
        REQUIRE(w.a_positions.size() == w.length);
        REQUIRE(w.b_positions.size() == w.length);
        for (std::size_t k = 0; k < w.length; ++k) {
            CHECK(a[w.a_positions[k] - 1] == w.subsequence[k]);
            CHECK(b[w.b_positions[k] - 1] == w.subsequence[k]);
            if (k > 0) {
                CHECK(w.a_positions[k - 1] < w.a_positions[k]);
                CHECK(w.b_positions[k - 1] < w.b_positions[k]);
            }
        }
        CHECK(lcs_length(a, b) == w.length);
        CHECK(lcs_length(b, a) == w.length);  // symmetric in length
    }
}

TEST_CASE("dp table is monotone with unit steps") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_string(rng, 1 + rng.below(16), 2);
        const auto b = random_string(rng, 1 + rng.below(16), 2);
        const DpTable t = lcs_table(a, b);
        for (std::size_t i = 0; i <= a.size(); ++i) {
            for (std::size_t j = 0; j <= b.size(); ++j) {
                if (i > 0) {
                    CHECK(t.at(i, j) >= t.at(i - 1, j));
                    if (j > 0) {
                        const std::uint32_t step = t.at(i, j) - t.at(i - 1, j - 1);
                        CHECK(step <= 1);
                    }
                }
                if (j > 0) CHECK(t.at(i, j) >= t.at(i, j - 1));
            }
        }
    }
}

TEST_CASE("lss_per_partition on fixed strings") {
    const PerPartitionResult abab = lss_per_partition("abab");
    CHECK(abab.r == 4);
    CHECK(abab.best_p == 2);
    CHECK(abab.ell_per_p == std::vector<std::uint32_t>{1, 2, 1});

    const PerPartitionResult abcd = lss_per_partition("abcd");
    CHECK(abcd.r == 0);
    CHECK(abcd.best_p == 1);
    CHECK(abcd.ell_per_p == std::vector<std::uint32_t>{0, 0, 0});

    const PerPartitionResult aaa = lss_per_partition("aaa");
    CHECK(aaa.r == 2);
    CHECK(aaa.best_p == 1);
    CHECK(aaa.ell_per_p == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("lss_exhaustive on fixed strings") {
    CHECK(lss_exhaustive("aa") == 2);
    CHECK(lss_exhaustive("abcabcx") == 6);
    CHECK(lss_exhaustive("ab") == 0);
    CHECK(lss_exhaustive("") == 0);
    CHECK_THROWS_AS(lss_exhaustive(std::string(21, 'a')), std::invalid_argument);
}

TEST_CASE("exhaustive witness spells a square") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = random_string(rng, rng.below(13), 1 + unsigned(rng.below(3)));
        const ExhaustiveWitness w = lss_exhaustive_witness(s);
        REQUIRE(w.positions.size() == w.r);
        std::string square;
        for (const std::uint32_t pos : w.positions) {
            if (!square.empty()) CHECK(pos > w.positions[square.size() - 1]);
            square.push_back(s[pos - 1]);
        }
        const std::size_t half = w.r / 2;
        CHECK(square.substr(0, half) == square.substr(half));
    }
}

TEST_CASE("per-partition and exhaustive oracles agree") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 400; ++trial) {
        const auto s = random_string(rng, rng.below(13), 1 + unsigned(rng.below(4)));
        CHECK(lss_per_partition(s).r == lss_exhaustive(s));
    }
}

TEST_CASE("lis_patience on fixed sequences") {
    CHECK(lis_patience(std::vector<std::uint32_t>{}) == 0);
    CHECK(lis_patience(std::vector<std::uint32_t>{3, 4, 4}) == 2);
    CHECK(lis_patience(std::vector<std::uint32_t>{7, 6, 3, 5, 8}) == 3);
    CHECK(lis_patience(std::vector<std::uint32_t>{1, 2, 3, 4}) == 4);
}

TEST_CASE("lis_patience matches subset enumeration") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::uint32_t> values(rng.below(13));
        for (auto& v : values) v = 1 + static_cast<std::uint32_t>(rng.below(8));
        CHECK(lis_patience(values) == testsupport::lis_by_enumeration(values));
    }
}
