#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "vort/io.hpp"

namespace vort {

struct CsvTable {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> columns;
};

inline CsvTable parse_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("parse_csv: empty input");
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.headers.push_back(cell);
    table.columns.resize(table.headers.size());
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::size_t col = 0;
        while (std::getline(ls, cell, ',') && col < table.columns.size()) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            table.columns[col++].push_back(end == cell.c_str() ? 0.0 : v);
        }
    }
    return table;
}

/// Self-contained SVG line plot: the first CSV column is the x axis, every
/// numeric column after it becomes one polyline.
inline std::string plot_csv_svg(const CsvTable& table, int width = 900, int height = 540) {
    if (table.headers.size() < 2 || table.columns[0].empty())
        throw std::runtime_error("plot_csv_svg: need an x column and at least one series");
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    const auto& x = table.columns[0];
    double xmin = x[0], xmax = x[0], ymin = 0.0, ymax = 0.0;
    bool y_seen = false;
    for (double v : x) {
        xmin = std::min(xmin, v);
        xmax = std::max(xmax, v);
    }
    for (std::size_t c = 1; c < table.columns.size(); ++c)
        for (double v : table.columns[c]) {
            if (!y_seen) {
                ymin = ymax = v;
                y_seen = true;
            }
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ml = 70, mr = 20, mt = 20, mb = 45;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double v) { return mt + (1.0 - (v - ymin) / (ymax - ymin)) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        os << "<text x=\"" << px(xv) << "\" y=\"" << height - 15
           << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt_double(xv) << "</text>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
           << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_double(yv) << "</text>\n";
    }
    for (std::size_t c = 1; c < table.columns.size(); ++c) {
        const char* color = palette[(c - 1) % 10];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < table.columns[c].size() && i < x.size(); ++i)
            os << px(x[i]) << "," << py(table.columns[c][i]) << " ";
        os << "\"/>\n";
        os << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 16 * static_cast<double>(c)
           << "\" font-size=\"12\" fill=\"" << color << "\">" << table.headers[c] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace vort
