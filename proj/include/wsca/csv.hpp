#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsca/cwt.hpp"

namespace wsca {

// Coefficient CSV: header "scale,c0,c1,..."; one row per scale, first column
// holds the scale value.
inline void save_coefficients_csv(const CoefficientMatrix& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.precision(17);
    f << "scale";
    for (std::size_t j = 0; j < c.cols; ++j) f << ",c" << j;
    f << "\n";
    for (std::size_t r = 0; r < c.rows(); ++r) {
        f << c.scale_set.scales[r];
        for (std::size_t j = 0; j < c.cols; ++j) f << "," << c.at(r, j);
        f << "\n";
    }
}

inline CoefficientMatrix load_coefficients_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty coefficient file: " + path);

    std::vector<double> scales;
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() < 2)
            throw std::runtime_error("malformed coefficient row at line " +
                                     std::to_string(lineno) + ": " + path);
        if (cols == 0) cols = row.size() - 1;
        if (row.size() - 1 != cols)
            throw std::runtime_error("ragged coefficient row at line " + std::to_string(lineno) +
                                     ": " + path);
        scales.push_back(row.front());
        values.insert(values.end(), row.begin() + 1, row.end());
    }
    if (scales.empty()) throw std::runtime_error("no coefficient rows in " + path);

    CoefficientMatrix c;
    c.scale_set = ScaleSet(std::move(scales));
    c.cols = cols;
    c.values = std::move(values);
    return c;
}

// Parse "lo:hi[:step]" (inclusive bounds) into a ScaleSet.
inline ScaleSet parse_scale_range(const std::string& text) {
    std::istringstream ss(text);
    std::string part;
    std::vector<double> parts;
    while (std::getline(ss, part, ':')) parts.push_back(std::stod(part));
    if (parts.size() == 1) return ScaleSet({parts[0]});
    if (parts.size() == 2) return ScaleSet::range(parts[0], parts[1]);
    if (parts.size() == 3) return ScaleSet::range(parts[0], parts[1], parts[2]);
    throw std::invalid_argument("bad scale range (want lo:hi[:step]): " + text);
}

}  // namespace wsca
