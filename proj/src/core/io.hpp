#pragma once

#include <string>
#include <string_view>

#include "core/colors.hpp"
#include "core/packing.hpp"

namespace cbp {

// Instance file format (UTF-8 text): '#' comment lines and blank lines are
// ignored; the first content line is "capacity: <non-negative integer>";
// every further line is "<name> <count>" with name matching
// [A-Za-z][A-Za-z0-9_]* and a non-negative integer count. Line order does
// not affect the interned color order.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

enum class PackingFormat {
    Text,        // bins joined by " / "; names concatenated when all are
                 // single characters, comma-separated otherwise
    Structured,  // JSON with instance echo, bins, bin_count and valid
};

std::string serialize_packing(const Packing& packing, const Instance& instance,
                              PackingFormat format);

// Reads a packing back against the instance's color table. Accepts the text
// form (ignoring '#' comments and a trailing "bins:" line) and, when the
// input starts with '{', the structured JSON form.
Packing parse_packing(std::string_view text, const Instance& instance);

}  // namespace cbp
