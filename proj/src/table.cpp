#include "qmsets/table.hpp"

#include <algorithm>

namespace qmsets {

namespace {

std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void append_row(std::string& out, const std::vector<std::string>& cells,
                const std::vector<std::size_t>& widths) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out += " | ";
        out += cells[c];
        if (c + 1 < cells.size()) out.append(widths[c] - display_width(cells[c]), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
}

std::string csv_cell(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string q = "\"";
    for (char c : cell) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

std::string to_text(const Table& table) {
    std::vector<std::size_t> widths(table.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size() && c < widths.size(); ++c) {
            widths[c] = std::max(widths[c], display_width(cells[c]));
        }
    };
    widen(table.header);
    for (const auto& r : table.rows) widen(r);

    std::string out;
    append_row(out, table.header, widths);
    for (std::size_t c = 0; c < widths.size(); ++c) {
        if (c) out += "-+-";
        out.append(widths[c], '-');
    }
    out += '\n';
    for (const auto& r : table.rows) append_row(out, r, widths);
    return out;
}

std::string to_csv(const Table& table) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += ',';
            out += csv_cell(cells[c]);
        }
        out += '\n';
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
    return out;
}

}  // namespace qmsets
