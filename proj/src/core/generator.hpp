#pragma once

#include <cstdint>

#include "core/colors.hpp"

namespace cbp {

// SplitMix64 (public-domain reference constants). Chosen because the whole
// generator fits in four lines and is trivially reproducible in any
// language; the state is seeded directly with GenSpec::seed and bounded
// draws use plain modulo. Documented in the README.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class Skew {
    Uniform,   // counts drawn from a uniform multinomial
    MaxHeavy,  // forces discrepancy > 0
    Balanced,  // forces discrepancy <= 0
};

struct GenSpec {
    std::uint32_t colors = 1;      // k >= 1
    std::uint64_t items = 0;       // n
    std::uint64_t capacity = 0;    // 0 selects zero-weight mode
    std::uint64_t seed = 0;
    Skew skew = Skew::Uniform;
};

// Deterministic instance generation: the same spec always yields the same
// instance. Colors are named A..Z for k <= 26, C0..C<k-1> otherwise. When
// n >= k every color is populated except under MaxHeavy skew when the skew
// cannot be met otherwise; populated_colors() reports the outcome.
// Throws Error(Status::InvalidArgument) when the requested skew is
// impossible (Balanced with k == 1, n == 1, or two colors and odd n;
// MaxHeavy with n == 0).
Instance generate(const GenSpec& spec);

std::uint32_t populated_colors(const Instance& instance);

}  // namespace cbp
