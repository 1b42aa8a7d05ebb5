#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gtb::io {

// 17 significant digits, '.' decimal point: round-trips every double.
std::string format_double(double v);

// Creates the directory (and parents). Throws IoError.
void ensure_directory(const std::filesystem::path& dir);

// Throws IoError when the file cannot be written completely.
void write_text(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(const std::vector<double>& values);
    void add_row(const std::string& label, const std::vector<double>& values);
    std::string str() const { return body_; }
    void save(const std::filesystem::path& path) const { write_text(path, body_); }

private:
    std::size_t columns_;
    std::string body_;
};

// One point per row; header x,y[,z].
std::string points_csv(const Eigen::MatrixXd& points);

struct SvgPath {
    std::string label;
    Eigen::MatrixXd points;  // 2D, one point per row
    std::string color;
    bool dashed = false;
    bool markers = false;  // draw a dot at each vertex
};

// viewBox fitted to the bounding box of all paths plus a 5% margin; y points up.
std::string svg_document(const std::vector<SvgPath>& paths, const std::string& title);

}  // namespace gtb::io
