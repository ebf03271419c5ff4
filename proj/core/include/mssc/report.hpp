#ifndef MSSC_REPORT_HPP
#define MSSC_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mssc/multistart.hpp"

/**
 * @file report.hpp
 * @brief CSV and text-table output of multi-start reports.
 */

namespace mssc {

/// 100 * (found - best_known) / best_known.
double relative_error_pct(double found, double best_known);

/// One report line, exactly the fields written to CSV.
struct ReportRow {
    std::string dataset;
    std::size_t k = 0;
    std::string starter;
    double alpha = 0;
    std::size_t restarts = 0;
    std::optional<double> best_objective;
    std::optional<double> best_known;
    std::optional<double> rel_error_pct;
    std::size_t hits_at_best = 0;
    double mean_time_s = 0;
    std::uint64_t seed = 0;

    bool new_best_found() const noexcept;
    bool operator==(const ReportRow&) const = default;
};

ReportRow to_row(const RunReport& report);

enum class ReportFormat { csv, table };

ReportFormat parse_report_format(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "dataset,k,starter,alpha,restarts,best_objective,best_known,rel_error_pct,hits_at_best,mean_time_s,seed";

/// Header line followed by one line per row. Reals are written with 17 significant digits.
void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_csv(std::string_view text);

/// Fixed-width table: problem, k, best known, starter, best found, percent error, hits, time.
/// Rows below the best-known value beyond its rounding are marked as a new best.
void write_table(std::ostream& out, const std::vector<ReportRow>& rows);

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format);

/// Write to `path`, or to standard output when `path` is empty or "-". Throws IoError.
void emit_report(const std::vector<ReportRow>& rows, ReportFormat format, const std::string& path);

}

#endif
