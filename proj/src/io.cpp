#include "qrabi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qrabi::io {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_csv(const std::vector<std::string>& metadata,
                       const std::vector<Column>& columns) {
    if (columns.empty()) throw std::invalid_argument("render_csv: no columns");
    const std::size_t rows = columns.front().values->size();
    for (const Column& c : columns)
        if (c.values->size() != rows) throw std::invalid_argument("render_csv: ragged columns");

    std::string out;
    for (const std::string& line : metadata) out += "# " + line + "\n";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c].name;
    }
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += format_full((*columns[c].values)[r]);
        }
        out += '\n';
    }
    return out;
}

namespace {

struct Extent {
    double lo = 0.0, hi = 1.0;
};

Extent extent_of(const std::vector<SvgSeries>& series, bool y_axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const SvgSeries& s : series) {
        const std::vector<double>& v = y_axis ? *s.y : *s.x;
        for (double value : v) {
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
    }
    if (!(lo < hi)) {
        lo -= 1.0;
        hi += 1.0;
    }
    return {lo, hi};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<SvgSeries>& series) {
    if (series.empty()) throw std::invalid_argument("render_svg: no series");
    constexpr int width = 960, height = 540;
    constexpr int ml = 70, mr = 170, mt = 40, mb = 55;
    const double pw = width - ml - mr, ph = height - mt - mb;

    const Extent ex = extent_of(series, false);
    const Extent ey = extent_of(series, true);
    const auto sx = [&](double x) { return ml + (x - ex.lo) / (ex.hi - ex.lo) * pw; };
    const auto sy = [&](double y) { return mt + ph - (y - ey.lo) / (ey.hi - ey.lo) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

    // frame
    svg += "<rect x=\"" + std::to_string(ml) + "\" y=\"" + std::to_string(mt) + "\" width=\"" +
           num(pw) + "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double xv = ex.lo + (ex.hi - ex.lo) * i / 5.0;
        const double yv = ey.lo + (ey.hi - ey.lo) * i / 5.0;
        svg += "<line x1=\"" + num(sx(xv)) + "\" y1=\"" + num(mt + ph) + "\" x2=\"" + num(sx(xv)) +
               "\" y2=\"" + num(mt + ph + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(sx(xv)) + "\" y=\"" + num(mt + ph + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + num(xv) +
               "</text>\n";
        svg += "<line x1=\"" + num(ml - 5.0) + "\" y1=\"" + num(sy(yv)) + "\" x2=\"" +
               std::to_string(ml) + "\" y2=\"" + num(sy(yv)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(ml - 9.0) + "\" y=\"" + num(sy(yv) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(yv) +
               "</text>\n";
    }
    svg += "<text x=\"" + std::to_string(ml + static_cast<int>(pw) / 2) + "\" y=\"" +
           std::to_string(height - 12) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">" + x_label + "</text>\n";
    svg += "<text x=\"18\" y=\"" + std::to_string(mt + static_cast<int>(ph) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + std::to_string(mt + static_cast<int>(ph) / 2) +
           ")\">" + y_label + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const SvgSeries& sr = series[s];
        std::string points;
        for (std::size_t i = 0; i < sr.x->size(); ++i) {
            if (i) points += ' ';
            points += num(sx((*sr.x)[i])) + "," + num(sy((*sr.y)[i]));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + sr.color + "\" stroke-width=\"1\" points=\"" +
               points + "\"/>\n";
        const int ly = mt + 18 + 18 * static_cast<int>(s);
        svg += "<line x1=\"" + std::to_string(width - mr + 10) + "\" y1=\"" + std::to_string(ly) +
               "\" x2=\"" + std::to_string(width - mr + 36) + "\" y2=\"" + std::to_string(ly) +
               "\" stroke=\"" + sr.color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + std::to_string(width - mr + 42) + "\" y=\"" + std::to_string(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + sr.label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_file: cannot open " + tmp);
        out << content;
        if (!out) {
            out.close();
            std::remove(tmp.c_str());
            throw std::runtime_error("write_file: short write to " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("write_file: cannot rename into " + path);
    }
}

}  // namespace qrabi::io
