#include "mssc/registry.hpp"

#include <charconv>

#include "mssc/error.hpp"
#include "mssc_embedded_data.hpp"

namespace mssc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}

std::vector<BestKnownEntry> parse_registry(std::string_view csv) {
    std::vector<BestKnownEntry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        auto nl = csv.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = csv.size();
        }
        const auto line = trim(csv.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (fields.size() < 4 || fields.size() > 5) {
            throw ParseError("best_known.csv", line_no, "expected 4 or 5 fields");
        }
        BestKnownEntry e;
        e.name = std::string(fields[0]);
        if (e.name.empty() || !parse_number(fields[1], e.k) || !parse_number(fields[2], e.value) ||
            !parse_number(fields[3], e.source_table)) {
            throw ParseError("best_known.csv", line_no, "malformed row");
        }
        if (!(e.value > 0)) {
            throw ParseError("best_known.csv", line_no, "best-known value must be positive");
        }
        if (fields.size() == 5 && !fields[4].empty()) {
            if (fields[4] != "new") {
                throw ParseError("best_known.csv", line_no, "unknown tag '" + std::string(fields[4]) + "'");
            }
            e.tagged_new = true;
        }
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<BestKnownEntry>& best_known_registry() {
    static const std::vector<BestKnownEntry> registry = parse_registry(embedded::kBestKnownCsv);
    return registry;
}

std::optional<BestKnownEntry> best_known_entry(std::string_view name, std::size_t k) {
    for (const auto& e : best_known_registry()) {
        if (e.name == name && e.k == k) {
            return e;
        }
    }
    return std::nullopt;
}

std::optional<double> best_known(std::string_view name, std::size_t k) {
    if (auto e = best_known_entry(name, k)) {
        return e->value;
    }
    return std::nullopt;
}

}
