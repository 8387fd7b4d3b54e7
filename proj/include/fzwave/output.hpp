#pragma once

#include <map>
#include <string>
#include <vector>

#include "fzwave/grids.hpp"

namespace fzwave::output {

/// One labeled curve y(x) for plotting/serialization.
struct Curve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Samples over an (x, t) lattice: rows follow `times`, columns follow `xs`.
struct Table {
    std::vector<double> xs;
    std::vector<double> times;
    std::vector<std::vector<double>> values;
    std::map<std::string, double> params;
};

/// CSV with header "x,t,value", one sample per line, 17 significant digits.
std::string to_csv(const Table& table);

/// JSON object with "params", "grid" and "values".
std::string to_json(const Table& table);

/// Self-contained SVG polyline plot of the table rows (one curve per time).
std::string to_svg(const Table& table, const std::string& title);

/// Write via temp file + rename so readers never observe partial output.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace fzwave::output
