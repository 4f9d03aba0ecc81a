#include "core/predictor.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace cbp {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

}  // namespace

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Empty: return "empty";
        case CaseTag::SingleBin: return "single-bin";
        case CaseTag::DiscrepancyBound: return "discrepancy-bound";
        case CaseTag::UnitCapacity: return "unit-capacity";
        case CaseTag::CapacityBound: return "capacity-bound";
        case CaseTag::EvenCombine: return "even-combine";
        case CaseTag::OddReducible: return "odd-reducible";
        case CaseTag::OddDiscrepancyBound: return "odd-discrepancy-bound";
    }
    return "unknown";
}

CountBreakdown predicted_bins_zero(const Instance& instance) {
    if (!instance.zero_weight()) {
        throw Error(Status::WrongMode, "predicted_bins_zero requires capacity 0");
    }
    CountBreakdown out;
    out.mode = Mode::Zero;
    auto stats = compute_stats(instance);
    if (!stats) {
        return out;
    }
    out.discrepancy = stats->discrepancy;
    if (stats->discrepancy <= 0) {
        out.case_tag = CaseTag::SingleBin;
        out.total = 1;
    } else {
        out.case_tag = CaseTag::DiscrepancyBound;
        out.total = static_cast<std::uint64_t>(stats->discrepancy);
    }
    return out;
}

CountBreakdown predicted_bins_unit(const Instance& instance) {
    if (instance.zero_weight()) {
        throw Error(Status::WrongMode, "predicted_bins_unit requires capacity >= 1");
    }
    const std::uint64_t capacity = instance.capacity();
    const std::uint64_t n = instance.total_items();

    CountBreakdown out;
    out.mode = Mode::Unit;
    auto stats = compute_stats(instance);
    if (!stats) {
        return out;
    }
    out.discrepancy = stats->discrepancy;

    if (capacity == 1) {
        out.case_tag = CaseTag::UnitCapacity;
        out.total = n;
        return out;
    }
    if (stats->discrepancy <= 0) {
        out.case_tag = CaseTag::CapacityBound;
        out.total = ceil_div(n, capacity);
        return out;
    }

    const std::uint64_t d = static_cast<std::uint64_t>(stats->discrepancy);
    if (capacity % 2 != 0) {
        const std::uint64_t half = capacity / 2;
        const std::uint64_t threshold = ceil_div(stats->other_count, half);
        if (d <= threshold) {
            out.case_tag = CaseTag::OddReducible;
            // When the last alternating bin ends short, everything is gone
            // and the remainder term is zero.
            const std::int64_t rest =
                static_cast<std::int64_t>(n) - static_cast<std::int64_t>(d * capacity);
            out.total = d + (rest > 0 ? ceil_div(static_cast<std::uint64_t>(rest), capacity) : 0);
        } else {
            out.case_tag = CaseTag::OddDiscrepancyBound;
            out.total = d;
        }
        return out;
    }

    // Even capacity with positive discrepancy: reproduce the merge
    // arithmetic. Full bins hold L/2 non-max items each; R leftovers make
    // one partially filled bin with R+1 MaxColor items, a P-bin when at
    // least two slots stay free. Every merged pair consumes one F-bin top
    // and deletes one M-bin; a fresh combined bin additionally promotes an
    // M-bin, so pair capacity per combined bin is L/2 - 1.
    out.case_tag = CaseTag::EvenCombine;
    const std::uint64_t half = capacity / 2;
    const std::uint64_t full = stats->other_count / half;
    const std::uint64_t leftover = stats->other_count % half;
    out.full_bins = full;
    out.leftover_others = leftover;
    out.pair_capacity = leftover > 0 ? (capacity - 2 * leftover - 2) / 2 : 0;
    out.singleton_bins =
        stats->max_count - full * half - (leftover > 0 ? leftover + 1 : 0);

    const std::uint64_t q = half - 1;
    const std::uint64_t into_p =
        std::min({out.pair_capacity, out.full_bins, out.singleton_bins});
    const std::uint64_t f_left = out.full_bins - into_p;
    const std::uint64_t m_left = out.singleton_bins - into_p;

    std::uint64_t merged = 0;
    if (q > 0) {
        // Largest pair count d2 with d2 <= f_left and d2 + ceil(d2/q) <= m_left.
        const std::uint64_t rounds = m_left / (q + 1);
        const std::uint64_t spare = m_left % (q + 1);
        const std::uint64_t m_budget = rounds * q + (spare > 0 ? spare - 1 : 0);
        merged = std::min(f_left, m_budget);
    }
    out.combined_bins = q > 0 ? merged / q : 0;
    out.leftover_tops = q > 0 ? merged % q : 0;
    const std::uint64_t promotions = merged > 0 ? ceil_div(merged, q) : 0;
    out.leftover_singletons = m_left - merged - promotions;
    out.total = out.full_bins + (leftover > 0 ? 1 : 0) + out.singleton_bins - into_p - merged;
    return out;
}

CountBreakdown predicted_bins(const Instance& instance) {
    return instance.zero_weight() ? predicted_bins_zero(instance) : predicted_bins_unit(instance);
}

}  // namespace cbp
