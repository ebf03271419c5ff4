#include "mssc/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "mssc/error.hpp"
#include "mssc/registry.hpp"

namespace mssc {

namespace {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v) {
    return v ? format_real(*v) : std::string();
}

std::string format_or(const std::optional<double>& v, const char* fmt, const char* fallback) {
    if (!v) {
        return fallback;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, *v);
    return buf;
}

template <typename T>
T parse_field(std::string_view s, std::size_t line_no, const char* what) {
    T out{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("<report>", line_no, std::string("malformed ") + what + " '" + std::string(s) + "'");
    }
    return out;
}

std::optional<double> parse_optional(std::string_view s, std::size_t line_no, const char* what) {
    if (s.empty()) {
        return std::nullopt;
    }
    return parse_field<double>(s, line_no, what);
}

}

double relative_error_pct(double found, double best_known) {
    if (!(best_known > 0)) {
        throw InvalidInput("best-known value must be positive");
    }
    return 100.0 * (found - best_known) / best_known;
}

bool ReportRow::new_best_found() const noexcept {
    return rel_error_pct && *rel_error_pct < -100.0 * kRegistryRelativePrecision;
}

ReportRow to_row(const RunReport& report) {
    ReportRow row;
    row.dataset = report.dataset;
    row.k = report.k;
    row.starter = std::string(to_string(report.starter.kind));
    row.alpha = report.starter.alpha.value();
    row.restarts = report.restarts;
    row.best_objective = report.best_objective;
    row.best_known = report.best_known;
    row.rel_error_pct = report.rel_error_pct;
    row.hits_at_best = report.hits_at_best;
    row.mean_time_s = report.mean_time_s;
    row.seed = report.seed;
    return row;
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") {
        return ReportFormat::csv;
    }
    if (text == "table") {
        return ReportFormat::table;
    }
    throw InvalidInput("unknown report format '" + std::string(text) + "'");
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.dataset << ',' << r.k << ',' << r.starter << ',' << format_real(r.alpha) << ',' << r.restarts << ','
            << format_optional(r.best_objective) << ',' << format_optional(r.best_known) << ','
            << format_optional(r.rel_error_pct) << ',' << r.hits_at_best << ',' << format_real(r.mean_time_s) << ','
            << r.seed << '\n';
    }
}

std::vector<ReportRow> parse_csv(std::string_view text) {
    std::vector<ReportRow> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw ParseError("<report>", line_no, "unexpected header");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> f;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            f.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (f.size() != 11) {
            throw ParseError("<report>", line_no, "expected 11 fields, found " + std::to_string(f.size()));
        }
        ReportRow r;
        r.dataset = std::string(f[0]);
        r.k = parse_field<std::size_t>(f[1], line_no, "k");
        r.starter = std::string(f[2]);
        r.alpha = parse_field<double>(f[3], line_no, "alpha");
        r.restarts = parse_field<std::size_t>(f[4], line_no, "restarts");
        r.best_objective = parse_optional(f[5], line_no, "best_objective");
        r.best_known = parse_optional(f[6], line_no, "best_known");
        r.rel_error_pct = parse_optional(f[7], line_no, "rel_error_pct");
        r.hits_at_best = parse_field<std::size_t>(f[8], line_no, "hits_at_best");
        r.mean_time_s = parse_field<double>(f[9], line_no, "mean_time_s");
        r.seed = parse_field<std::uint64_t>(f[10], line_no, "seed");
        rows.push_back(std::move(r));
    }
    if (!header_seen) {
        throw ParseError("<report>", 0, "missing header");
    }
    return rows;
}

void write_table(std::ostream& out, const std::vector<ReportRow>& rows) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-12s %4s %14s %-16s %5s %14s %8s %11s %11s\n", "Problem", "k", "Best known",
                  "Starter", "alpha", "Best found", "% error", "Hits", "Time (s)");
    out << buf;
    for (const auto& r : rows) {
        const std::string known = format_or(r.best_known, "%.5E", "-");
        const std::string found = format_or(r.best_objective, "%.5E", "failed");
        std::optional<double> shown_err = r.rel_error_pct;
        if (shown_err && std::fabs(*shown_err) < 0.005) {
            shown_err = 0.0;  // no "-0.00"
        }
        const std::string err = format_or(shown_err, "%.2f", "-");
        const std::string hits = std::to_string(r.hits_at_best) + "/" + std::to_string(r.restarts);
        // alpha only means something for the merging starters
        const std::string alpha =
            r.starter.starts_with("merging") ? format_or(std::optional<double>(r.alpha), "%.2f", "-") : "-";
        std::snprintf(buf, sizeof buf, "%-12s %4zu %14s %-16s %5s %14s %8s %11s %11.6f", r.dataset.c_str(), r.k,
                      known.c_str(), r.starter.c_str(), alpha.c_str(), found.c_str(), err.c_str(), hits.c_str(),
                      r.mean_time_s);
        out << buf;
        if (r.new_best_found()) {
            out << "  new best found";
        }
        out << '\n';
    }
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format) {
    if (format == ReportFormat::csv) {
        write_csv(out, rows);
    } else {
        write_table(out, rows);
    }
}

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format, const std::string& path) {
    if (path.empty() || path == "-") {
        write_report(std::cout, rows, format);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_report(out, rows, format);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

}
