#include "wavestab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace wavestab {

namespace {

std::string format_double(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string render_cell(const Cell& cell, ReportFormat format) {
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* d = std::get_if<double>(&cell))
        return format == ReportFormat::Csv ? format_double_csv(*d) : format_double_aligned(*d);
    return std::to_string(std::get<std::int64_t>(cell));
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char ch : cell) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << csv_escape(table.columns[c]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << csv_escape(render_cell(row[c], ReportFormat::Csv));
        }
        out << '\n';
    }
}

void write_aligned(const Table& table, std::ostream& out) {
    std::vector<std::size_t> widths(table.columns.size());
    std::vector<std::vector<std::string>> rendered;
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        widths[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (std::size_t c = 0; c < row.size(); ++c) {
            cells.push_back(render_cell(row[c], ReportFormat::AlignedTable));
            widths[c] = std::max(widths[c], cells.back().size());
        }
        rendered.push_back(std::move(cells));
    }

    auto write_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << "  ";
            out << cells[c];
            if (c + 1 < cells.size())
                out << std::string(widths[c] - cells[c].size(), ' ');
        }
        out << '\n';
    };
    write_row(table.columns);
    for (const auto& cells : rendered) write_row(cells);
}

}  // namespace

std::string format_double_csv(double v) { return format_double(v, "%.17g"); }

std::string format_double_aligned(double v) { return format_double(v, "%.10g"); }

void write_report(const Table& table, std::ostream& out, ReportFormat format) {
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::runtime_error("write_report: row does not match the column set");
    if (format == ReportFormat::Csv)
        write_csv(table, out);
    else
        write_aligned(table, out);
}

void emit_report(const Table& table, const ReportSink& sink) {
    if (sink.out_path.empty()) {
        write_report(table, std::cout, sink.format);
        std::cout.flush();
        return;
    }
    std::ofstream file(sink.out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("emit_report: cannot open output file: " + sink.out_path);
    write_report(table, file, sink.format);
    if (!file)
        throw std::runtime_error("emit_report: write failed: " + sink.out_path);
}

}  // namespace wavestab
