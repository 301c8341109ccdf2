#pragma once

#include <string>
#include <vector>

namespace qrabi::io {

inline constexpr const char* kVersion = "qrabi 0.1.0";

// Shortest text that round-trips a double exactly (17 significant digits).
std::string format_full(double v);

struct Column {
    std::string name;
    const std::vector<double>* values = nullptr;
};

// '#'-prefixed metadata lines, then a header row, then the data.
std::string render_csv(const std::vector<std::string>& metadata,
                       const std::vector<Column>& columns);

struct SvgSeries {
    std::string label;
    std::string color;
    const std::vector<double>* x = nullptr;
    const std::vector<double>* y = nullptr;
};

// Minimal polyline plot with axes, ticks and a legend. No dependencies.
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<SvgSeries>& series);

// Writes atomically: temp file in the same directory, then rename.
void write_file(const std::string& path, const std::string& content);

}  // namespace qrabi::io
