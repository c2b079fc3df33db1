#include "abcage/csv.hpp"

#include "abcage/types.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace abcage {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out)
            throw Error("write to '" + tmp + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error("rename '" + tmp + "' -> '" + path + "': " + ec.message());
}

void write_csv(const std::string& path, const CsvRow& header,
               const std::vector<CsvRow>& rows) {
    std::string out;
    auto append_row = [&out](const CsvRow& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    };
    append_row(header);
    for (const CsvRow& row : rows) append_row(row);
    write_file_atomic(path, out);
}

} // namespace abcage
