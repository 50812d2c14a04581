#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace warpline {

/// '.' decimal, 17 significant digits, "nan"/"inf" spelled out.
[[nodiscard]] std::string format_number(double value);

/// Writes `# <comment>` then the column header, then rows. Throws
/// std::runtime_error if the file cannot be opened.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& comment,
              std::initializer_list<std::string> columns);

    class Row {
    public:
        explicit Row(CsvWriter& w) : writer_(w) {}
        Row& operator<<(double v);
        Row& operator<<(std::size_t v);
        Row& operator<<(int v);
        Row& operator<<(const std::string& v);
        Row& operator<<(const char* v) { return *this << std::string(v); }
        ~Row();

    private:
        void sep();
        CsvWriter& writer_;
        bool first_ = true;
    };

    Row row() { return Row(*this); }

private:
    std::ofstream out_;
};

struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::size_t column(const std::string& name) const;
};

/// Reader for files produced by CsvWriter.
[[nodiscard]] CsvTable read_csv(const std::string& path);

}  // namespace warpline
