#pragma once

#include <cstdint>

#include "core/colors.hpp"

namespace cbp {

enum class Mode { Zero, Unit };

enum class CaseTag {
    Empty,
    SingleBin,             // zero weight, discrepancy <= 0
    DiscrepancyBound,      // zero weight, discrepancy > 0
    UnitCapacity,          // capacity 1: one item per bin
    CapacityBound,         // unit weight, discrepancy <= 0
    EvenCombine,           // unit weight, even capacity, discrepancy > 0
    OddReducible,          // odd capacity, discrepancy reducible to zero
    OddDiscrepancyBound,   // odd capacity, discrepancy not reducible
};

const char* case_tag_name(CaseTag tag);

// Closed-form bin counts, computed without packing. For the even-capacity
// case the breakdown mirrors the solver's phases: F full bins each holding
// L/2 non-max items, R leftover non-max items in one partially filled bin,
// a P-bin able to absorb `pair_capacity` item pairs, M single-item MaxColor
// bins, then C combined bins of floor((L-1)/2) pairs each, RO pairs in one
// final partial combined bin and X surviving singletons. The merge counts
// C/RO/X are capped by how many M-bins are actually available, so the
// total matches the solver even when the M set runs out first.
struct CountBreakdown {
    Mode mode = Mode::Zero;
    CaseTag case_tag = CaseTag::Empty;
    std::int64_t discrepancy = 0;          // D
    std::uint64_t full_bins = 0;           // F
    std::uint64_t leftover_others = 0;     // R
    std::uint64_t pair_capacity = 0;       // P
    std::uint64_t singleton_bins = 0;      // M
    std::uint64_t combined_bins = 0;       // C
    std::uint64_t leftover_tops = 0;       // RO
    std::uint64_t leftover_singletons = 0; // X
    std::uint64_t total = 0;
};

// Predicted optimal bin count for a zero-weight instance: max(1, D) when
// non-empty, 0 otherwise. Throws Error(Status::WrongMode) in unit mode.
CountBreakdown predicted_bins_zero(const Instance& instance);

// Predicted optimal bin count for a unit-weight instance, per case.
// Throws Error(Status::WrongMode) in zero mode.
CountBreakdown predicted_bins_unit(const Instance& instance);

// Dispatch on the instance's mode.
CountBreakdown predicted_bins(const Instance& instance);

}  // namespace cbp
