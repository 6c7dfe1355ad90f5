#pragma once

#include <string>
#include <vector>

namespace cslbounds {

enum class OutputFormat { Csv, Json };

/// Column-oriented numeric table with unit-carrying column names.
///
/// Serialization uses shortest round-trip decimal representation, so
/// identical inputs produce byte-identical files.  NaN or infinite cells are
/// rejected at render time.
class OutputTable {
  public:
    explicit OutputTable(std::vector<std::string> columns);

    void add_row(const std::vector<double>& row);

    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    /// RFC-4180 CSV: comma separated, LF line endings, header row.
    std::string to_csv() const;

    /// JSON array of objects keyed by column name.
    std::string to_json() const;

    std::string render(OutputFormat format) const;

    /// Writes to path (or stdout when path is "-").
    void write(const std::string& path, OutputFormat format) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

/// Shortest round-trip decimal form of a double (rejects NaN/Inf).
std::string format_double(double value);

}  // namespace cslbounds
