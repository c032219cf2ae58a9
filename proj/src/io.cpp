#include "vbound/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vbound::io {

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            first = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_phi_curve_csv(const std::string& path,
                         const std::vector<phi::PhiPoint>& points) {
    std::vector<std::vector<double>> rows;
    rows.reserve(points.size());
    for (const auto& pt : points)
        rows.push_back({pt.p, pt.phi,
                        pt.phi_prime ? *pt.phi_prime
                                     : std::numeric_limits<double>::quiet_NaN()});
    write_csv(path, {"p", "phi", "phi_prime"}, rows);
}

void write_phi_curve_svg(const std::string& path,
                         const std::vector<phi::PhiPoint>& points) {
    if (points.size() < 2) throw std::domain_error("svg: need at least two points");

    constexpr double kWidth = 800, kHeight = 600;
    constexpr double kLeft = 80, kRight = 30, kTop = 30, kBottom = 60;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    double x_min = points.front().p, x_max = points.back().p;
    double y_min = points.front().phi, y_max = y_min;
    for (const auto& pt : points) {
        y_min = std::min(y_min, pt.phi);
        y_max = std::max(y_max, pt.phi);
    }
    const double y_pad = 0.05 * std::max(y_max - y_min, 1e-12);
    y_min -= y_pad;
    y_max += y_pad;

    auto sx = [&](double p) { return kLeft + (p - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double v) { return kTop + (y_max - v) / (y_max - y_min) * plot_h; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n"
        << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // axes
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
        << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";

    constexpr int kTicks = 5;
    char label[64];
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / kTicks;
        const double px = sx(fx);
        out << "<line x1=\"" << px << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << px
            << "\" y2=\"" << kTop + plot_h + 6 << "\" stroke=\"black\"/>\n";
        std::snprintf(label, sizeof(label), "%.3g", fx);
        out << "<text x=\"" << px << "\" y=\"" << kTop + plot_h + 22
            << "\" font-size=\"13\" text-anchor=\"middle\">" << label << "</text>\n";

        const double fy = y_min + (y_max - y_min) * i / kTicks;
        const double py = sy(fy);
        out << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << py << "\" x2=\"" << kLeft
            << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
        std::snprintf(label, sizeof(label), "%.5g", fy);
        out << "<text x=\"" << kLeft - 10 << "\" y=\"" << py + 4
            << "\" font-size=\"13\" text-anchor=\"end\">" << label << "</text>\n";
    }

    out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" font-size=\"16\" text-anchor=\"middle\">p</text>\n";
    out << "<text x=\"20\" y=\"" << kTop + plot_h / 2
        << "\" font-size=\"16\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << kTop + plot_h / 2 << ")\">Phi(p)</text>\n";

    out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (const auto& pt : points) out << sx(pt.p) << ',' << sy(pt.phi) << ' ';
    out << "\"/>\n</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace vbound::io
