#ifndef LEVIFLAT_CSV_HPP
#define LEVIFLAT_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace leviflat {

/// Fixed 17-significant-digit formatting, locale independent, '.' decimal
/// separator.  Identical inputs give byte-identical text.
std::string format_double(double v);

/// CSV writer with unconditional '\n' line endings.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void row(const std::vector<std::string>& cells);

    static std::string cell(double v) { return format_double(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(long v) { return std::to_string(v); }
    static std::string cell(std::size_t v) { return std::to_string(v); }

private:
    std::ofstream out_;
};

} // namespace leviflat

#endif
