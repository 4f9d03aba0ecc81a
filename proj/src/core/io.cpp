#include "core/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"
#include "core/packing.hpp"

namespace cbp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(Status::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_count(std::string_view token, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        parse_fail(line, std::string(what) + " must be a non-negative integer, got '" +
                             std::string(token) + "'");
    }
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    bool have_capacity = false;
    std::uint64_t capacity = 0;
    std::vector<std::pair<std::string, std::uint64_t>> colors;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }

        if (!have_capacity) {
            constexpr std::string_view prefix = "capacity:";
            if (line.substr(0, prefix.size()) != prefix) {
                parse_fail(line_no, "expected 'capacity: <non-negative integer>'");
            }
            capacity = parse_count(trim(line.substr(prefix.size())), line_no, "capacity");
            have_capacity = true;
            continue;
        }

        std::size_t sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            parse_fail(line_no, "expected '<name> <count>'");
        }
        std::string name(line.substr(0, sep));
        std::string_view rest = trim(line.substr(sep));
        if (rest.find_first_of(" \t") != std::string_view::npos) {
            parse_fail(line_no, "unexpected extra tokens after count");
        }
        if (!ColorTable::valid_name(name)) {
            parse_fail(line_no, "invalid color name '" + name + "'");
        }
        for (const auto& [existing, count] : colors) {
            (void)count;
            if (existing == name) {
                parse_fail(line_no, "duplicate color name '" + name + "'");
            }
        }
        colors.emplace_back(std::move(name), parse_count(rest, line_no, "count"));
    }

    if (!have_capacity) {
        throw Error(Status::ParseError, "missing capacity line");
    }
    return Instance::create(capacity, std::move(colors));
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    out << "capacity: " << instance.capacity() << "\n";
    for (ColorId c = 0; c < instance.num_colors(); ++c) {
        out << instance.table().name(c) << " " << instance.count(c) << "\n";
    }
    return out.str();
}

std::string serialize_packing(const Packing& packing, const Instance& instance,
                              PackingFormat format) {
    const ColorTable& table = instance.table();
    if (format == PackingFormat::Text) {
        const bool compact = table.all_single_char();
        std::ostringstream out;
        for (std::size_t b = 0; b < packing.bins.size(); ++b) {
            if (b > 0) {
                out << " / ";
            }
            const Bin& bin = packing.bins[b];
            for (std::size_t i = 0; i < bin.size(); ++i) {
                if (i > 0 && !compact) {
                    out << ",";
                }
                out << table.name(bin[i]);
            }
        }
        return out.str();
    }

    nlohmann::ordered_json doc;
    doc["instance"]["capacity"] = instance.capacity();
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (ColorId c = 0; c < instance.num_colors(); ++c) {
        counts[table.name(c)] = instance.count(c);
    }
    doc["instance"]["counts"] = std::move(counts);
    nlohmann::ordered_json bins = nlohmann::ordered_json::array();
    for (const Bin& bin : packing.bins) {
        nlohmann::ordered_json names = nlohmann::ordered_json::array();
        for (ColorId c : bin) {
            names.push_back(c < table.size() ? table.name(c) : "id#" + std::to_string(c));
        }
        bins.push_back(std::move(names));
    }
    doc["bins"] = std::move(bins);
    doc["bin_count"] = packing.bin_count();
    doc["valid"] = validate_packing(instance, packing).valid();
    return doc.dump(2) + "\n";
}

namespace {

ColorId lookup_color(std::string_view name, const ColorTable& table) {
    auto id = table.find(name);
    if (!id) {
        throw Error(Status::ParseError, "unknown color name '" + std::string(name) + "'");
    }
    return *id;
}

Bin parse_bin_token(std::string_view token, const ColorTable& table) {
    Bin bin;
    if (token.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= token.size()) {
            std::size_t comma = token.find(',', start);
            std::string_view name =
                trim(token.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
            if (name.empty()) {
                throw Error(Status::ParseError, "empty color name in packing");
            }
            bin.push_back(lookup_color(name, table));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return bin;
    }
    // A whole-token name wins; otherwise the token is a run of single-char
    // names, which is how compact output is written.
    if (table.find(token)) {
        bin.push_back(lookup_color(token, table));
        return bin;
    }
    for (char c : token) {
        bin.push_back(lookup_color(std::string_view(&c, 1), table));
    }
    return bin;
}

Packing parse_packing_json(std::string_view text, const Instance& instance) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Status::ParseError, std::string("bad packing document: ") + e.what());
    }
    if (!doc.contains("bins") || !doc["bins"].is_array()) {
        throw Error(Status::ParseError, "packing document has no 'bins' array");
    }
    Packing packing;
    for (const auto& jbin : doc["bins"]) {
        Bin bin;
        for (const auto& jname : jbin) {
            bin.push_back(lookup_color(jname.get<std::string>(), instance.table()));
        }
        packing.bins.push_back(std::move(bin));
    }
    return packing;
}

}  // namespace

Packing parse_packing(std::string_view text, const Instance& instance) {
    // Strip comments and the optional trailing "bins:" summary line.
    std::string body;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.substr(0, 5) == "bins:") {
            continue;
        }
        if (!body.empty()) {
            body += ' ';
        }
        body += std::string(line);
    }

    std::string_view content = trim(body);
    if (content.empty()) {
        return {};
    }
    if (content.front() == '{') {
        return parse_packing_json(content, instance);
    }

    Packing packing;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t slash = content.find('/', start);
        std::string_view token =
            trim(content.substr(start, slash == std::string_view::npos ? std::string_view::npos
                                                                       : slash - start));
        if (token.empty()) {
            throw Error(Status::ParseError, "empty bin in packing text");
        }
        packing.bins.push_back(parse_bin_token(token, instance.table()));
        if (slash == std::string_view::npos) {
            break;
        }
        start = slash + 1;
    }
    return packing;
}

}  // namespace cbp
