#include "warpline/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace warpline {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& comment,
                     std::initializer_list<std::string> columns)
    : out_(path) {
    if (!out_) throw std::runtime_error("cannot open '" + path + "' for writing");
    out_ << "# " << comment << '\n';
    bool first = true;
    for (const auto& c : columns) {
        if (!first) out_ << ',';
        out_ << c;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::Row::sep() {
    if (!first_) writer_.out_ << ',';
    first_ = false;
}

CsvWriter::Row& CsvWriter::Row::operator<<(double v) {
    sep();
    writer_.out_ << format_number(v);
    return *this;
}

CsvWriter::Row& CsvWriter::Row::operator<<(std::size_t v) {
    sep();
    writer_.out_ << v;
    return *this;
}

CsvWriter::Row& CsvWriter::Row::operator<<(int v) {
    sep();
    writer_.out_ << v;
    return *this;
}

CsvWriter::Row& CsvWriter::Row::operator<<(const std::string& v) {
    sep();
    writer_.out_ << v;
    return *this;
}

CsvWriter::Row::~Row() { writer_.out_ << '\n'; }

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::out_of_range("no column '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    CsvTable table;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        return out;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            table.comments.push_back(line);
            continue;
        }
        if (table.header.empty()) table.header = split(line);
        else table.rows.push_back(split(line));
    }
    return table;
}

}  // namespace warpline
