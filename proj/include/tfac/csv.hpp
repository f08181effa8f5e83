#pragma once

#include <string>
#include <vector>

namespace tfac {

// Deterministic CSV emission: UTF-8, '\n' newlines, header first, every float
// printed with printf "%.17g" (round-trip exact, stable across runs).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string format_g17(double value);

// Renders header plus rows; throws ValidationError if a row width differs
// from the header width.
std::string render_csv(const CsvTable& table);

// Single write on success so a failed command leaves no partial file.
void write_text_file(const std::string& path, const std::string& content);

} // namespace tfac
