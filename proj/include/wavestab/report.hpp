#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace wavestab {

using Cell = std::variant<std::string, double, std::int64_t>;

/// Homogeneous rows under a fixed header, the unit every command emits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class ReportFormat { Csv, AlignedTable };

/// Destination for a report: a file path, or standard output when the path
/// is empty.
struct ReportSink {
    std::string out_path;
    ReportFormat format = ReportFormat::AlignedTable;
};

/// "%.17g" — round-trip precision used for every float in CSV output.
std::string format_double_csv(double v);

/// "%.10g" — the fixed-width human rendering.
std::string format_double_aligned(double v);

void write_report(const Table& table, std::ostream& out, ReportFormat format);

/// CSV: header row then data rows, comma-separated, LF line endings.
/// AlignedTable: fixed-width rendering of the same rows.
/// Throws std::runtime_error when the destination cannot be opened.
void emit_report(const Table& table, const ReportSink& sink);

}  // namespace wavestab
