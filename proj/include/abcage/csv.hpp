#pragma once

#include <string>
#include <vector>

namespace abcage {

// Doubles are printed with %.17g: enough significant digits to reparse to
// the identical bit pattern, so byte-identical CSV follows from determinism
// of the computation.
std::string format_double(double x);

using CsvRow = std::vector<std::string>;

// Writes header + rows, comma separated, atomically (temp file + rename).
void write_csv(const std::string& path, const CsvRow& header,
               const std::vector<CsvRow>& rows);

// Atomic whole-file write used by the SVG emitters too.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace abcage
