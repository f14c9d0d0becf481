#include "leviflat/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace leviflat {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path)
    : out_(path, std::ios::binary)
{
    if (!out_)
        throw std::runtime_error("cannot open " + path + " for writing");
}

void CsvWriter::row(const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

} // namespace leviflat
