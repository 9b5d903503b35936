#pragma once

// CSV, JSON sidecar, and SVG emission. CSV output is byte-stable for fixed
// inputs (fixed %.17g formatting).

#include <string>
#include <vector>

namespace edgeproc::io {

std::string version_string();

std::string format_double(double v);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& fields);

private:
    struct Impl;
    Impl* impl_;
};

void write_text_file(const std::string& path, const std::string& content);

// Minimal SVG 1.1 scatter plot: axes, polyline paths, point markers,
// horizontal reference lines.
class SvgPlot {
public:
    SvgPlot(double xmin, double xmax, double ymin, double ymax, int width = 640,
            int height = 480);
    void add_path(const std::vector<double>& xs, const std::vector<double>& ys,
                  const std::string& cls, const std::string& color);
    void add_points(const std::vector<double>& xs, const std::vector<double>& ys,
                    const std::string& cls, const std::string& color);
    void add_hline(double y, const std::string& cls, const std::string& color);
    std::string render() const;

private:
    double xmin_, xmax_, ymin_, ymax_;
    int w_, h_;
    std::vector<std::string> elements_;
    double px(double x) const;
    double py(double y) const;
};

}  // namespace edgeproc::io
