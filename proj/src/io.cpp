#include "gtb/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gtb/error.hpp"

namespace gtb::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorCode::IoError, "cannot create directory " + dir.string() + ": " + ec.message());
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) fail(ErrorCode::IoError, "write to " + path.string() + " failed");
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (k) body_ += ',';
        body_ += header[k];
    }
    body_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) body_ += ',';
        body_ += format_double(values[k]);
    }
    body_ += '\n';
}

void CsvWriter::add_row(const std::string& label, const std::vector<double>& values) {
    body_ += label;
    for (double v : values) {
        body_ += ',';
        body_ += format_double(v);
    }
    body_ += '\n';
}

std::string points_csv(const Eigen::MatrixXd& points) {
    static const char* names[] = {"x", "y", "z"};
    std::vector<std::string> header;
    for (Eigen::Index k = 0; k < points.cols(); ++k) header.emplace_back(k < 3 ? names[k] : "c" + std::to_string(k));
    CsvWriter csv(std::move(header));
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        std::vector<double> row(points.cols());
        for (Eigen::Index k = 0; k < points.cols(); ++k) row[k] = points(i, k);
        csv.add_row(row);
    }
    return csv.str();
}

std::string svg_document(const std::vector<SvgPath>& paths, const std::string& title) {
    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    for (const auto& p : paths) {
        if (p.points.cols() < 2) fail(ErrorCode::DimensionMismatch, "SVG paths must be 2D");
        for (Eigen::Index i = 0; i < p.points.rows(); ++i) {
            xmin = std::min(xmin, p.points(i, 0));
            xmax = std::max(xmax, p.points(i, 0));
            ymin = std::min(ymin, p.points(i, 1));
            ymax = std::max(ymax, p.points(i, 1));
        }
    }
    if (!(xmax >= xmin)) xmin = xmax = ymin = ymax = 0.0;
    double w = xmax - xmin, h = ymax - ymin;
    if (w == 0.0) w = 1.0;
    if (h == 0.0) h = 1.0;
    const double mx = 0.05 * w, my = 0.05 * h;
    const double stroke = 0.004 * std::max(w, h);

    std::ostringstream svg;
    // Flip y so the picture has the usual orientation: SVG y = -y.
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(xmin - mx) << ' '
        << format_double(-(ymax + my)) << ' ' << format_double(w + 2 * mx) << ' ' << format_double(h + 2 * my)
        << "\" width=\"600\" height=\"" << static_cast<int>(600.0 * (h + 2 * my) / (w + 2 * mx)) << "\">\n";
    svg << "  <title>" << title << "</title>\n";
    for (const auto& p : paths) {
        svg << "  <polyline data-label=\"" << p.label << "\" fill=\"none\" stroke=\"" << p.color
            << "\" stroke-width=\"" << format_double(stroke) << '"';
        if (p.dashed) svg << " stroke-dasharray=\"" << format_double(4 * stroke) << ' ' << format_double(3 * stroke) << '"';
        svg << " points=\"";
        for (Eigen::Index i = 0; i < p.points.rows(); ++i) {
            if (i) svg << ' ';
            svg << format_double(p.points(i, 0)) << ',' << format_double(-p.points(i, 1));
        }
        svg << "\"/>\n";
        if (p.markers) {
            for (Eigen::Index i = 0; i < p.points.rows(); ++i) {
                svg << "  <circle cx=\"" << format_double(p.points(i, 0)) << "\" cy=\"" << format_double(-p.points(i, 1))
                    << "\" r=\"" << format_double(2.5 * stroke) << "\" fill=\"" << p.color << "\"/>\n";
            }
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gtb::io
