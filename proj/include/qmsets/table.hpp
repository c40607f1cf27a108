#pragma once

#include <string>
#include <vector>

namespace qmsets {

/// A rectangular table of already-formatted cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Aligned text: columns padded to their widest cell and joined with " | ", a
/// dashed rule under the header, no trailing whitespace. Widths count UTF-8 code points.
std::string to_text(const Table& table);

/// RFC 4180 CSV with "\n" line endings; cells containing ',', '"' or newlines are quoted.
std::string to_csv(const Table& table);

}  // namespace qmsets
