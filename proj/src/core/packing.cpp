#include "core/packing.hpp"

#include <sstream>

namespace cbp {

std::string Violation::describe(const ColorTable& table) const {
    std::ostringstream out;
    auto color_name = [&](ColorId id) -> std::string {
        if (id < table.size()) {
            return table.name(id);
        }
        return "id#" + std::to_string(id);
    };
    switch (kind) {
        case ViolationKind::Adjacency:
            out << "adjacency: bin " << bin << " position " << position << " repeats color "
                << color_name(color);
            break;
        case ViolationKind::Capacity:
            out << "capacity: bin " << bin << " holds " << found << " items, limit "
                << expected;
            break;
        case ViolationKind::Conservation:
            out << "conservation: color " << color_name(color) << " expected " << expected
                << " found " << found;
            break;
        case ViolationKind::EmptyBin:
            out << "empty-bin: bin " << bin;
            break;
    }
    return out.str();
}

ValidationReport validate_packing(const Instance& instance, const Packing& packing) {
    ValidationReport report;
    const std::size_t k = instance.num_colors();
    std::vector<std::uint64_t> found(k, 0);
    std::uint64_t unknown = 0;
    ColorId first_unknown = kNoColor;

    for (std::size_t b = 0; b < packing.bins.size(); ++b) {
        const Bin& bin = packing.bins[b];
        if (bin.empty()) {
            report.violations.push_back({ViolationKind::EmptyBin, b, 0, kNoColor, 0, 0});
            continue;
        }
        if (!instance.zero_weight() && bin.size() > instance.capacity()) {
            report.violations.push_back(
                {ViolationKind::Capacity, b, 0, kNoColor, instance.capacity(), bin.size()});
        }
        for (std::size_t i = 0; i < bin.size(); ++i) {
            if (i > 0 && bin[i] == bin[i - 1]) {
                report.violations.push_back({ViolationKind::Adjacency, b, i, bin[i], 0, 0});
            }
            if (bin[i] < k) {
                ++found[bin[i]];
            } else {
                ++unknown;
                if (first_unknown == kNoColor) {
                    first_unknown = bin[i];
                }
            }
        }
    }

    for (ColorId c = 0; c < k; ++c) {
        if (found[c] != instance.count(c)) {
            report.violations.push_back(
                {ViolationKind::Conservation, 0, 0, c, instance.count(c), found[c]});
        }
    }
    if (unknown > 0) {
        report.violations.push_back(
            {ViolationKind::Conservation, 0, 0, first_unknown, 0, unknown});
    }
    return report;
}

}  // namespace cbp
