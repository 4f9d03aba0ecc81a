#include "core/generator.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace cbp {

namespace {

std::string color_name(std::uint32_t index, std::uint32_t k) {
    if (k <= 26) {
        return std::string(1, static_cast<char>('A' + index));
    }
    return "C" + std::to_string(index);
}

std::vector<std::uint64_t> uniform_counts(std::uint32_t k, std::uint64_t n, SplitMix64& rng) {
    std::vector<std::uint64_t> counts(k, 0);
    std::uint64_t left = n;
    if (n >= k) {
        // Keep every color populated.
        for (auto& c : counts) {
            c = 1;
        }
        left -= k;
    }
    for (std::uint64_t i = 0; i < left; ++i) {
        ++counts[rng.below(k)];
    }
    return counts;
}

}  // namespace

Instance generate(const GenSpec& spec) {
    if (spec.colors < 1) {
        throw Error(Status::InvalidArgument, "generator needs at least one color");
    }
    const std::uint32_t k = spec.colors;
    const std::uint64_t n = spec.items;
    SplitMix64 rng(spec.seed);

    std::vector<std::uint64_t> counts;
    switch (spec.skew) {
        case Skew::Uniform:
            counts = uniform_counts(k, n, rng);
            break;

        case Skew::Balanced: {
            if (n > 0 && (k == 1 || n == 1 || (k == 2 && n % 2 != 0))) {
                throw Error(Status::InvalidArgument,
                            "balanced skew impossible for this k/n combination");
            }
            counts = uniform_counts(k, n, rng);
            // Shift items off the heaviest color until no color exceeds
            // half the total; each move lowers the discrepancy by 2.
            const std::uint64_t cap = n / 2;
            while (true) {
                std::size_t hi = 0;
                std::size_t lo = 0;
                for (std::size_t c = 1; c < counts.size(); ++c) {
                    if (counts[c] > counts[hi]) {
                        hi = c;
                    }
                    if (counts[c] < counts[lo]) {
                        lo = c;
                    }
                }
                if (counts[hi] <= cap) {
                    break;
                }
                --counts[hi];
                ++counts[lo];
            }
            break;
        }

        case Skew::MaxHeavy: {
            if (n == 0) {
                throw Error(Status::InvalidArgument,
                            "max-heavy skew impossible for an empty instance");
            }
            counts.assign(k, 0);
            // The first color takes at least floor(n/2)+1 items. Leave one
            // item per remaining color when the budget allows; the skew
            // wins over full population otherwise.
            const std::uint64_t base = n / 2 + 1;
            std::uint64_t head = base;
            if (n - base >= k - 1 && n > base) {
                head += rng.below(n - base - (k - 1) + 1);
            }
            counts[0] = head;
            std::uint64_t left = n - head;
            for (std::uint32_t c = 1; c < k && left > 0; ++c) {
                counts[c] = 1;
                --left;
            }
            for (std::uint64_t i = 0; i < left; ++i) {
                counts[k > 1 ? 1 + rng.below(k - 1) : 0] += 1;
            }
            break;
        }
    }

    std::vector<std::pair<std::string, std::uint64_t>> colors;
    colors.reserve(k);
    for (std::uint32_t c = 0; c < k; ++c) {
        colors.emplace_back(color_name(c, k), counts[c]);
    }
    return Instance::create(spec.capacity, std::move(colors));
}

std::uint32_t populated_colors(const Instance& instance) {
    std::uint32_t populated = 0;
    for (std::uint64_t c : instance.counts()) {
        if (c > 0) {
            ++populated;
        }
    }
    return populated;
}

}  // namespace cbp
