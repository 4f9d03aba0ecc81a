#include "core/zero_solver.hpp"

#include <cassert>

#include "core/error.hpp"

namespace cbp {

namespace {

// Picks the non-max color with the largest remaining count whose id differs
// from `top`. Returns kNoColor when no candidate exists.
ColorId pick_alternating(const std::vector<std::uint64_t>& remaining, ColorId max_color,
                         ColorId top) {
    ColorId best = kNoColor;
    for (ColorId c = 0; c < remaining.size(); ++c) {
        if (c == max_color || c == top || remaining[c] == 0) {
            continue;
        }
        if (best == kNoColor || remaining[c] > remaining[best]) {
            best = c;
        }
    }
    return best;
}

}  // namespace

std::vector<ColorId> zero_sequence(std::vector<std::uint64_t> counts, const ColorTable& table) {
    auto stats = compute_stats(counts, table);
    if (!stats) {
        return {};
    }
    if (stats->discrepancy > 0) {
        throw Error(Status::Infeasible,
                    "multiset with positive discrepancy cannot form a single sequence");
    }

    const ColorId max_color = stats->max_color;
    std::vector<ColorId> seq;
    seq.reserve(stats->max_count + stats->other_count);

    // Phase 1: alternate non-max items until exactly MaxCount-1 of them
    // remain. A dead end here would contradict MaxColor's maximality.
    std::uint64_t to_place = stats->other_count - (stats->max_count - 1);
    ColorId top = kNoColor;
    while (to_place > 0) {
        ColorId c = pick_alternating(counts, max_color, top);
        assert(c != kNoColor && "alternation cannot get stuck before the phase-1 target");
        if (c == kNoColor) {
            throw Error(Status::Infeasible, "alternation dead end");
        }
        seq.push_back(c);
        --counts[c];
        --to_place;
        top = c;
    }

    // Phase 2: MaxColor first, then alternate with the rest in interning
    // order. Every non-max item ends up between two MaxColor items.
    ColorId cursor = 0;
    while (counts[max_color] > 0) {
        seq.push_back(max_color);
        --counts[max_color];
        if (counts[max_color] == 0) {
            break;
        }
        while (cursor < counts.size() && (cursor == max_color || counts[cursor] == 0)) {
            ++cursor;
        }
        assert(cursor < counts.size());
        seq.push_back(cursor);
        --counts[cursor];
    }
    return seq;
}

Packing pack_zero(const Instance& instance) {
    if (!instance.zero_weight()) {
        throw Error(Status::WrongMode, "pack_zero requires a zero-weight instance (capacity 0)");
    }
    Packing packing;
    auto stats = compute_stats(instance);
    if (!stats) {
        return packing;
    }

    if (stats->discrepancy <= 0) {
        packing.bins.push_back(zero_sequence(instance.counts(), instance.table()));
        return packing;
    }

    // Discrepancy > 0: one bin takes every non-max item, separated by
    // MaxColor items and capped with MaxColor at both ends; the excess
    // MaxColor items each need their own bin.
    const ColorId max_color = stats->max_color;
    Bin first;
    first.reserve(2 * stats->other_count + 1);
    first.push_back(max_color);
    for (ColorId c = 0; c < instance.num_colors(); ++c) {
        if (c == max_color) {
            continue;
        }
        for (std::uint64_t i = 0; i < instance.count(c); ++i) {
            first.push_back(c);
            first.push_back(max_color);
        }
    }
    packing.bins.push_back(std::move(first));
    for (std::int64_t i = 0; i < stats->discrepancy - 1; ++i) {
        packing.bins.push_back({max_color});
    }
    return packing;
}

}  // namespace cbp
