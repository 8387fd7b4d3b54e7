#include "fzwave/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fzwave::output {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_csv(const Table& table) {
    std::ostringstream os;
    os << "x,t,value\n";
    for (std::size_t i = 0; i < table.times.size(); ++i)
        for (std::size_t j = 0; j < table.xs.size(); ++j)
            os << fmt17(table.xs[j]) << ',' << fmt17(table.times[i]) << ','
               << fmt17(table.values[i][j]) << '\n';
    return os.str();
}

std::string to_json(const Table& table) {
    nlohmann::json j;
    j["params"] = table.params;
    j["grid"]["x"] = table.xs;
    j["grid"]["t"] = table.times;
    j["values"] = table.values;
    return j.dump(2) + "\n";
}

std::string to_svg(const Table& table, const std::string& title) {
    const int width = 720, height = 480;
    const int ml = 60, mr = 20, mt = 40, mb = 45;

    double x_lo = table.xs.front(), x_hi = table.xs.back();
    double y_lo = 0.0, y_hi = 0.0;
    for (const auto& row : table.values)
        for (double v : row) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    if (y_hi == y_lo) y_hi = y_lo + 1.0;
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - y_lo) / (y_hi - y_lo) * (height - mt - mb); };

    static const char* kColors[] = {"#1f6fb4", "#d64d2a", "#3a9e4f", "#8b5bb1", "#c7a422"};
    static const char* kDashes[] = {"", "8,4", "2,3,8,3", "2,3", "12,3"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
       << title << "</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
       << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
       << height - mb << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x_lo + (x_hi - x_lo) * k / 4.0;
        const double yv = y_lo + (y_hi - y_lo) * k / 4.0;
        os << "<text x=\"" << px(xv) << "\" y=\"" << height - mb + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << xv
           << "</text>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << yv
           << "</text>\n";
    }
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        os << "<polyline fill=\"none\" stroke=\"" << kColors[i % 5] << "\"";
        if (*kDashes[i % 5]) os << " stroke-dasharray=\"" << kDashes[i % 5] << "\"";
        os << " stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < table.xs.size(); ++j)
            os << px(table.xs[j]) << ',' << py(table.values[i][j]) << ' ';
        os << "\"/>\n";
        os << "<text x=\"" << width - mr - 6 << "\" y=\"" << mt + 16 + 16 * static_cast<int>(i)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
           << kColors[i % 5] << "\">t=" << table.times[i] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
        os << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace fzwave::output
