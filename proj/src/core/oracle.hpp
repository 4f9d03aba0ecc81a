#pragma once

#include <cstdint>

#include "core/colors.hpp"

namespace cbp {

inline constexpr std::uint32_t kOracleDefaultLimit = 12;

// Exact minimum bin count over all valid packings, found by depth-first
// placement of one item at a time with branch-and-bound, canonical-state
// memoization and color symmetry reduction. Supports both modes (zero
// weight is searched without a capacity bound). Refuses instances with
// more than item_limit items via Error(Status::LimitExceeded).
//
// The search is seeded with a validated upper bound (the solver's packing
// when it passes validation, otherwise one bin per item), so the result is
// exact regardless of solver behavior.
std::uint64_t optimal_bins(const Instance& instance,
                           std::uint32_t item_limit = kOracleDefaultLimit);

}  // namespace cbp
