#include "core/unit_solver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "core/error.hpp"
#include "core/zero_solver.hpp"

namespace cbp {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

// Consumes non-max colors in interning order across calls.
struct OtherCursor {
    std::vector<std::uint64_t>& remaining;
    ColorId max_color;
    ColorId pos = 0;

    std::uint64_t total = 0;

    OtherCursor(std::vector<std::uint64_t>& rem, ColorId max) : remaining(rem), max_color(max) {
        for (ColorId c = 0; c < rem.size(); ++c) {
            if (c != max) {
                total += rem[c];
            }
        }
    }

    ColorId take() {
        while (pos == max_color || remaining[pos] == 0) {
            ++pos;
        }
        --remaining[pos];
        --total;
        return pos;
    }
};

// One bin of the initial packing: MaxColor first, alternating with non-max
// items, never overfilling. If the non-max items run out the bin ends on
// the MaxColor item already in place, leaving it topped with MaxColor.
Bin fill_alternating(std::vector<std::uint64_t>& remaining, OtherCursor& others,
                     ColorId max_color, std::uint64_t capacity) {
    Bin bin;
    bin.push_back(max_color);
    --remaining[max_color];
    while (bin.size() < capacity && others.total > 0) {
        bin.push_back(others.take());
        if (bin.size() < capacity) {
            bin.push_back(max_color);
            --remaining[max_color];
        } else {
            break;
        }
    }
    return bin;
}

void split_into_bins(const std::vector<ColorId>& seq, std::uint64_t capacity, Packing& out) {
    for (std::size_t start = 0; start < seq.size(); start += capacity) {
        std::size_t end = std::min<std::size_t>(start + capacity, seq.size());
        out.bins.emplace_back(seq.begin() + start, seq.begin() + end);
    }
}

}  // namespace

BinClass classify_bin(const Bin& bin, std::uint64_t capacity, ColorId max_color) {
    if (bin.size() == 1 && bin[0] == max_color) {
        return BinClass::MaxSingleton;
    }
    if (bin.empty()) {
        return BinClass::Other;
    }
    const bool full = bin.size() >= capacity;
    const ColorId top = bin.back();
    if (full) {
        return top != max_color ? BinClass::FullOtherTopped : BinClass::Other;
    }
    if (top != max_color) {
        return BinClass::Other;
    }
    const bool has_other = std::any_of(bin.begin(), bin.end(),
                                       [&](ColorId c) { return c != max_color; });
    if (!has_other) {
        return BinClass::Other;
    }
    return capacity - bin.size() >= 2 ? BinClass::PairEligible : BinClass::Partial;
}

std::vector<Bin> combine(std::vector<Bin> bins, std::uint64_t capacity, ColorId max_color) {
    if (capacity % 2 != 0 || capacity == 0) {
        throw Error(Status::InvalidArgument, "combine requires an even capacity");
    }

    std::deque<std::size_t> f_bins;
    std::deque<std::size_t> m_bins;
    std::size_t p_bin = bins.size();
    for (std::size_t i = 0; i < bins.size(); ++i) {
        switch (classify_bin(bins[i], capacity, max_color)) {
            case BinClass::MaxSingleton:
                m_bins.push_back(i);
                break;
            case BinClass::FullOtherTopped:
                f_bins.push_back(i);
                break;
            case BinClass::PairEligible:
                if (p_bin != bins.size()) {
                    throw Error(Status::InvalidArgument, "combine: more than one P-bin");
                }
                p_bin = i;
                break;
            default:
                break;
        }
    }

    std::vector<bool> deleted(bins.size(), false);
    std::size_t current = p_bin;
    if (current == bins.size() && !m_bins.empty()) {
        current = m_bins.front();
        m_bins.pop_front();
    }

    while (!f_bins.empty() && !m_bins.empty()) {
        if (current == bins.size() || bins[current].size() + 2 > capacity) {
            current = m_bins.front();
            m_bins.pop_front();
            if (m_bins.empty()) {
                break;
            }
            // Capacity 2 cannot host a pair on top of a singleton.
            if (bins[current].size() + 2 > capacity) {
                break;
            }
        }
        std::size_t f = f_bins.front();
        f_bins.pop_front();  // leaves the F set permanently, stays a bin
        std::size_t m = m_bins.front();
        m_bins.pop_front();
        ColorId x = bins[f].back();
        bins[f].pop_back();
        ColorId y = bins[m].front();
        deleted[m] = true;
        bins[current].push_back(x);
        bins[current].push_back(y);
    }

    std::vector<Bin> result;
    result.reserve(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (!deleted[i]) {
            result.push_back(std::move(bins[i]));
        }
    }
    return result;
}

Packing pack_unit(const Instance& instance) {
    if (instance.zero_weight()) {
        throw Error(Status::WrongMode, "pack_unit requires a unit-weight instance (capacity >= 1)");
    }
    const std::uint64_t capacity = instance.capacity();
    Packing packing;
    auto stats = compute_stats(instance);
    if (!stats) {
        return packing;
    }

    // Capacity 1 admits no alternation at all: one item per bin.
    if (capacity == 1) {
        for (ColorId c = 0; c < instance.num_colors(); ++c) {
            for (std::uint64_t i = 0; i < instance.count(c); ++i) {
                packing.bins.push_back({c});
            }
        }
        return packing;
    }

    if (stats->discrepancy <= 0) {
        auto seq = zero_sequence(instance.counts(), instance.table());
        split_into_bins(seq, capacity, packing);
        return packing;
    }

    const ColorId max_color = stats->max_color;
    std::vector<std::uint64_t> remaining = instance.counts();
    OtherCursor others(remaining, max_color);

    if (capacity % 2 == 0) {
        while (others.total > 0) {
            packing.bins.push_back(fill_alternating(remaining, others, max_color, capacity));
        }
        while (remaining[max_color] > 0) {
            packing.bins.push_back({max_color});
            --remaining[max_color];
        }
        packing.bins = combine(std::move(packing.bins), capacity, max_color);
        return packing;
    }

    const std::uint64_t half = capacity / 2;
    const std::uint64_t threshold = ceil_div(stats->other_count, half);
    if (static_cast<std::uint64_t>(stats->discrepancy) <= threshold) {
        // Each alternating bin nets one MaxColor item over the non-max
        // items, so D bins bring the discrepancy of the rest to zero. The
        // last of them may end short of capacity exactly when the non-max
        // items run out, in which case nothing remains at all.
        std::int64_t d = stats->discrepancy;
        while (d > 0) {
            assert(others.total > 0);
            packing.bins.push_back(fill_alternating(remaining, others, max_color, capacity));
            --d;  // every alternating bin holds exactly one extra MaxColor item
        }
        auto seq = zero_sequence(remaining, instance.table());
        split_into_bins(seq, capacity, packing);
        return packing;
    }

    while (others.total > 0) {
        packing.bins.push_back(fill_alternating(remaining, others, max_color, capacity));
    }
    while (remaining[max_color] > 0) {
        packing.bins.push_back({max_color});
        --remaining[max_color];
    }
    return packing;
}

}  // namespace cbp
