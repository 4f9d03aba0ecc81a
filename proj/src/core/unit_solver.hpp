#pragma once

#include <cstdint>
#include <vector>

#include "core/colors.hpp"
#include "core/packing.hpp"

namespace cbp {

// Classification of bins at Combine entry. Names follow the domain
// vocabulary: M-bins hold a single MaxColor item, F-bins are full and
// topped with a non-max item, the P-bin is topped with MaxColor and can
// still take at least two items (at most one exists after an initial
// packing), a Partial bin is topped with MaxColor with exactly one free
// slot and takes no further items.
enum class BinClass {
    MaxSingleton,     // M-bin
    FullOtherTopped,  // F-bin
    PairEligible,     // P-bin
    Partial,
    Other,
};

BinClass classify_bin(const Bin& bin, std::uint64_t capacity, ColorId max_color);

// Merge step for even capacities: repeatedly moves the top non-max item of
// an F-bin plus the item of an M-bin into a current bin (the P-bin first,
// then promoted M-bins), deleting one M-bin per move. Stops when the F set
// or the M set is exhausted. Never increases the bin count.
// Throws Error(Status::InvalidArgument) for odd capacity or multiple P-bins.
std::vector<Bin> combine(std::vector<Bin> bins, std::uint64_t capacity, ColorId max_color);

// Optimal packing for unit-weight items into bins of capacity L >= 1.
// Dispatches on discrepancy and the parity of L; throws
// Error(Status::WrongMode) on a zero-weight instance.
Packing pack_unit(const Instance& instance);

}  // namespace cbp
