#pragma once

#include <cstdint>
#include <vector>

#include "core/colors.hpp"
#include "core/packing.hpp"

namespace cbp {

// Orders a whole multiset into one sequence with no two adjacent equal
// colors. Requires the multiset's discrepancy to be <= 0 (or the multiset
// to be empty); throws Error(Status::Infeasible) otherwise.
//
// Deterministic construction: first alternate non-max colors greedily
// (largest remaining count first, ties by interning order) until exactly
// MaxCount-1 of them remain, then alternate MaxColor with the rest consumed
// in interning order, starting and ending with MaxColor.
std::vector<ColorId> zero_sequence(std::vector<std::uint64_t> counts, const ColorTable& table);

// Optimal packing for zero-weight items (capacity 0). Discrepancy <= 0
// yields a single bin; discrepancy D > 0 yields exactly D bins: one bin
// alternating MaxColor with all other items, plus D-1 MaxColor singletons.
// Throws Error(Status::WrongMode) on a unit-weight instance.
Packing pack_zero(const Instance& instance);

}  // namespace cbp
