#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace cbp {

using ColorId = std::uint32_t;
inline constexpr ColorId kNoColor = 0xffffffffu;

// Interned color names. The order is fixed when the owning Instance is
// built: descending initial item count, ties by name. Id 0 is therefore
// always the most frequent color (the MaxColor of the instance).
class ColorTable {
  public:
    ColorTable() = default;
    explicit ColorTable(std::vector<std::string> names);

    static bool valid_name(std::string_view name);

    std::size_t size() const { return names_.size(); }
    const std::string& name(ColorId id) const { return names_.at(id); }
    std::optional<ColorId> find(std::string_view name) const;
    bool all_single_char() const;

    bool operator==(const ColorTable& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ColorId> index_;
};

// Immutable multiset of colored items plus the bin capacity. Capacity 0 is
// the zero-weight sentinel: bins have no weight limit and only the adjacency
// constraint applies. Capacity >= 1 selects unit-weight mode.
class Instance {
  public:
    Instance() = default;

    // Validates names, rejects duplicates, and interns colors in the
    // canonical order (count desc, name asc). Counts of zero are allowed.
    static Instance create(std::uint64_t capacity,
                           std::vector<std::pair<std::string, std::uint64_t>> colors);

    std::uint64_t capacity() const { return capacity_; }
    bool zero_weight() const { return capacity_ == 0; }
    std::size_t num_colors() const { return counts_.size(); }
    std::uint64_t count(ColorId id) const { return counts_.at(id); }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t total_items() const { return total_; }
    const ColorTable& table() const { return table_; }

    bool operator==(const Instance& other) const = default;

  private:
    std::uint64_t capacity_ = 0;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
    ColorTable table_;
};

struct InstanceStats {
    ColorId max_color = kNoColor;
    std::uint64_t max_count = 0;
    std::uint64_t other_count = 0;
    std::int64_t discrepancy = 0;
};

// MaxColor, MaxCount, OtherCount and Discrepancy of a non-empty multiset.
// Returns nullopt for an empty one; callers treat that as "0 bins".
// Tie-break for MaxColor: lexicographically smallest name.
std::optional<InstanceStats> compute_stats(const Instance& instance);
std::optional<InstanceStats> compute_stats(const std::vector<std::uint64_t>& counts,
                                           const ColorTable& table);

// Discrepancy with the empty multiset defined as 0.
std::int64_t discrepancy(const Instance& instance);

}  // namespace cbp
