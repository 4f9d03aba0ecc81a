#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "core/colors.hpp"

namespace cbp {

// One bin, bottom to top. Valid bins never hold two equal colors adjacently
// and, in unit-weight mode, never exceed the capacity.
using Bin = std::vector<ColorId>;

struct Packing {
    std::vector<Bin> bins;

    std::size_t bin_count() const { return bins.size(); }
    bool operator==(const Packing& other) const = default;
};

enum class ViolationKind {
    Adjacency,     // equal colors at positions pos-1 and pos of a bin
    Capacity,      // bin longer than the weight limit
    Conservation,  // packed multiset differs from the instance counts
    EmptyBin,      // a bin with no items
};

struct Violation {
    ViolationKind kind;
    std::size_t bin = 0;       // bin index (adjacency/capacity/empty-bin)
    std::size_t position = 0;  // item position within the bin (adjacency)
    ColorId color = kNoColor;  // offending color (conservation)
    std::uint64_t expected = 0;
    std::uint64_t found = 0;

    std::string describe(const ColorTable& table) const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

// Checks a packing against its instance: adjacency, capacity (unit mode),
// item conservation, and empty bins. Unknown color ids are reported as
// conservation violations rather than crashing.
ValidationReport validate_packing(const Instance& instance, const Packing& packing);

}  // namespace cbp
