#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace smlab {

// 17 significant digits: doubles survive a write/read round trip unchanged,
// so identical runs produce identical bytes.
std::string format_double(double v);

// '#'-prefixed prologue lines, one header line, comma-joined rows.
class CsvWriter {
  public:
    void comment(const std::string& line);             // without leading '#'
    void header(const std::vector<std::string>& cols);
    void row(const std::vector<std::string>& cells);

    const std::string& text() const { return text_; }
    void write_file(const std::string& path) const;    // throws on I/O failure

  private:
    std::string text_;
};

struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int column_index(const std::string& name) const;   // -1 when absent
};

CsvTable read_csv(const std::string& path);

// FNV-1a 64-bit, used for output checksums in run manifests.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace smlab
