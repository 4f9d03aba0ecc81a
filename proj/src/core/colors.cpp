#include "core/colors.hpp"

#include <algorithm>
#include <cctype>

namespace cbp {

ColorTable::ColorTable(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (ColorId id = 0; id < names_.size(); ++id) {
        index_.emplace(names_[id], id);
    }
}

bool ColorTable::valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        return false;
    }
    for (char c : name.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

std::optional<ColorId> ColorTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool ColorTable::all_single_char() const {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
}

Instance Instance::create(std::uint64_t capacity,
                          std::vector<std::pair<std::string, std::uint64_t>> colors) {
    for (const auto& [name, count] : colors) {
        (void)count;
        if (!ColorTable::valid_name(name)) {
            throw Error(Status::InvalidArgument, "invalid color name '" + name + "'");
        }
    }
    std::sort(colors.begin(), colors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) {
            return a.second > b.second;
        }
        return a.first < b.first;
    });
    for (std::size_t i = 1; i < colors.size(); ++i) {
        if (colors[i].first == colors[i - 1].first) {
            throw Error(Status::InvalidArgument,
                        "duplicate color name '" + colors[i].first + "'");
        }
    }

    Instance inst;
    inst.capacity_ = capacity;
    std::vector<std::string> names;
    names.reserve(colors.size());
    inst.counts_.reserve(colors.size());
    for (auto& [name, count] : colors) {
        names.push_back(std::move(name));
        inst.counts_.push_back(count);
        inst.total_ += count;
    }
    inst.table_ = ColorTable(std::move(names));
    return inst;
}

std::optional<InstanceStats> compute_stats(const std::vector<std::uint64_t>& counts,
                                           const ColorTable& table) {
    std::uint64_t total = 0;
    ColorId max_color = kNoColor;
    for (ColorId c = 0; c < counts.size(); ++c) {
        total += counts[c];
        if (counts[c] == 0) {
            continue;
        }
        if (max_color == kNoColor || counts[c] > counts[max_color] ||
            (counts[c] == counts[max_color] && table.name(c) < table.name(max_color))) {
            max_color = c;
        }
    }
    if (total == 0) {
        return std::nullopt;
    }
    InstanceStats stats;
    stats.max_color = max_color;
    stats.max_count = counts[max_color];
    stats.other_count = total - stats.max_count;
    stats.discrepancy = static_cast<std::int64_t>(stats.max_count) -
                        static_cast<std::int64_t>(stats.other_count);
    return stats;
}

std::optional<InstanceStats> compute_stats(const Instance& instance) {
    return compute_stats(instance.counts(), instance.table());
}

std::int64_t discrepancy(const Instance& instance) {
    auto stats = compute_stats(instance);
    return stats ? stats->discrepancy : 0;
}

}  // namespace cbp
