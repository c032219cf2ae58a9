#pragma once

#include <string>
#include <vector>

#include "vbound/phi.hpp"

namespace vbound::io {

// Shortest representation that round-trips a double exactly (%.17g).
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Reads a CSV produced by write_csv back; the header row is skipped.
std::vector<std::vector<double>> read_csv(const std::string& path);

void write_phi_curve_csv(const std::string& path,
                         const std::vector<phi::PhiPoint>& points);

// Standalone SVG 1.1 line plot of the curve, 800x600 viewBox, axes
// labeled p and Phi(p).
void write_phi_curve_svg(const std::string& path,
                         const std::vector<phi::PhiPoint>& points);

}  // namespace vbound::io
