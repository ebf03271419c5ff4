#include "mssc/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mssc/error.hpp"
#include "mssc_embedded_data.hpp"

namespace mssc {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

bool to_double(std::string_view token, double& out) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        if (!fn(text.substr(pos, end - pos), line_no)) {
            return;
        }
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
}

}

std::string_view to_string(DatasetFormat format) noexcept {
    return format == DatasetFormat::matrix ? "matrix" : "tsplib";
}

DatasetFormat parse_dataset_format(std::string_view text) {
    if (text == "matrix") {
        return DatasetFormat::matrix;
    }
    if (text == "tsplib") {
        return DatasetFormat::tsplib;
    }
    throw InvalidInput("unknown dataset format '" + std::string(text) + "'");
}

Dataset parse_matrix(std::string_view text, const std::string& name, const std::string& origin) {
    std::vector<double> coords;
    std::size_t d = 0;
    std::size_t n = 0;
    for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            return true;
        }
        const auto fields = split_fields(line);
        if (n == 0) {
            d = fields.size();
        } else if (fields.size() != d) {
            throw ParseError(origin, line_no,
                             "expected " + std::to_string(d) + " values, found " + std::to_string(fields.size()));
        }
        for (auto f : fields) {
            double v = 0;
            if (!to_double(f, v)) {
                throw ParseError(origin, line_no, "invalid numeric value '" + std::string(f) + "'");
            }
            coords.push_back(v);
        }
        ++n;
        return true;
    });
    if (n == 0) {
        throw ParseError(origin, 0, "no data rows");
    }
    try {
        return Dataset(n, d, std::move(coords), name);
    } catch (const InvalidInput& e) {
        throw ParseError(origin, 0, e.what());
    }
}

Dataset load_matrix(const std::string& path) {
    return parse_matrix(read_file(path), stem_of(path), path);
}

Dataset parse_tsplib(std::string_view text, const std::string& name, const std::string& origin) {
    std::optional<std::size_t> dimension;
    bool in_section = false;
    bool seen_section = false;
    std::vector<double> coords;
    for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
        const auto line = trim(raw);
        if (!in_section) {
            if (line.starts_with("NODE_COORD_SECTION")) {
                in_section = seen_section = true;
                return true;
            }
            if (line.starts_with("DIMENSION")) {
                const auto colon = line.find(':');
                const auto value = trim(colon == std::string_view::npos ? line.substr(9) : line.substr(colon + 1));
                std::size_t dim = 0;
                auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), dim);
                if (ec != std::errc() || ptr != value.data() + value.size()) {
                    throw ParseError(origin, line_no, "malformed DIMENSION");
                }
                dimension = dim;
            }
            return true;
        }
        if (line.empty()) {
            return true;
        }
        if (line == "EOF") {
            return false;
        }
        const auto fields = split_fields(line);
        double id = 0;
        double x = 0;
        double y = 0;
        if (fields.size() != 3 || !to_double(fields[0], id) || !to_double(fields[1], x) ||
            !to_double(fields[2], y)) {
            throw ParseError(origin, line_no, "expected 'id x y', found '" + std::string(line) + "'");
        }
        coords.push_back(x);
        coords.push_back(y);
        return true;
    });
    if (!seen_section) {
        throw ParseError(origin, 0, "missing NODE_COORD_SECTION");
    }
    const std::size_t n = coords.size() / 2;
    if (n == 0) {
        throw ParseError(origin, 0, "NODE_COORD_SECTION is empty");
    }
    if (dimension && *dimension != n) {
        throw ParseError(origin, 0,
                         "DIMENSION is " + std::to_string(*dimension) + " but " + std::to_string(n) + " nodes were read");
    }
    try {
        return Dataset(n, 2, std::move(coords), name);
    } catch (const InvalidInput& e) {
        throw ParseError(origin, 0, e.what());
    }
}

Dataset load_tsplib(const std::string& path) {
    return parse_tsplib(read_file(path), stem_of(path), path);
}

Dataset load_dataset(const std::string& path, DatasetFormat format, const std::string& name) {
    const std::string text = read_file(path);
    const std::string label = name.empty() ? stem_of(path) : name;
    Dataset data = format == DatasetFormat::matrix ? parse_matrix(text, label, path) : parse_tsplib(text, label, path);
    validate_against_manifest(data);
    return data;
}

const std::vector<ManifestEntry>& dataset_manifest() {
    static const std::vector<ManifestEntry> entries = [] {
        std::vector<ManifestEntry> out;
        for_each_line(embedded::kManifestCsv, [&](std::string_view raw, std::size_t line_no) {
            const auto line = trim(raw);
            if (line.empty() || line.front() == '#') {
                return true;
            }
            const auto fields = split_fields(line);
            double n = 0;
            double d = 0;
            if (fields.size() != 4 || !to_double(fields[1], n) || !to_double(fields[2], d)) {
                throw ParseError("manifest.csv", line_no, "malformed manifest row");
            }
            out.push_back(ManifestEntry{std::string(fields[0]), static_cast<std::size_t>(n),
                                        static_cast<std::size_t>(d), parse_dataset_format(fields[3])});
            return true;
        });
        return out;
    }();
    return entries;
}

std::optional<ManifestEntry> manifest_entry(std::string_view name) {
    for (const auto& e : dataset_manifest()) {
        if (e.name == name) {
            return e;
        }
    }
    return std::nullopt;
}

void validate_against_manifest(const Dataset& data) {
    auto entry = manifest_entry(data.name());
    if (!entry) {
        return;
    }
    if (entry->n != data.size() || entry->d != data.dim()) {
        throw InvalidInput("dataset '" + data.name() + "' has shape " + std::to_string(data.size()) + "x" +
                           std::to_string(data.dim()) + ", manifest expects " + std::to_string(entry->n) + "x" +
                           std::to_string(entry->d));
    }
}

std::optional<std::string> find_dataset_file(const std::string& dir, const ManifestEntry& entry) {
    namespace fs = std::filesystem;
    for (const char* ext : {"", ".txt", ".csv", ".dat", ".tsp"}) {
        const fs::path candidate = fs::path(dir) / (entry.name + ext);
        std::error_code ec;
        if (fs::is_regular_file(candidate, ec)) {
            return candidate.string();
        }
    }
    return std::nullopt;
}

}
