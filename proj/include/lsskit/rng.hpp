#pragma once

#include <cstdint>
#include <string>

// SplitMix64 generator. Chosen over <random> engines because its output for
// a given seed is identical on every platform and toolchain, which keeps
// reproducer seeds from the verify and bench commands portable.

namespace lsskit {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound); returns 0 for bound == 0. Multiplicative
    // range reduction: bias is at most 2^-64 per draw, far below anything
    // the harnesses can observe, and the result is platform-independent.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

// Mixes values into a fresh seed (order-sensitive). Used to derive
// independent per-task streams from one base seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (0x632be59bd9b4e019ull + b));
    return g.next();
}

// Random string of length n over the first sigma symbols of the alphabet
// 'a', 'b', ... (byte values wrap modulo 256, so sigma may reach 256).
inline std::string random_string(SplitMix64& rng, std::size_t n, unsigned sigma) {
    std::string s(n, '\0');
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = static_cast<char>(
            static_cast<unsigned char>('a' + rng.below(sigma)));
    }
    return s;
}

}  // namespace lsskit
