#include "edgeproc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "edgeproc/errors.hpp"

#ifndef EDGEPROC_VERSION
#define EDGEPROC_VERSION "untracked"
#endif

namespace edgeproc::io {

std::string version_string() { return EDGEPROC_VERSION; }

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path) : impl_(new Impl) {
    impl_->out.open(path, std::ios::binary);
    if (!impl_->out) throw std::runtime_error("CsvWriter: cannot open " + path);
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::header(const std::vector<std::string>& names) { raw_row(names); }

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> fields;
    fields.reserve(values.size());
    for (double v : values) fields.push_back(format_double(v));
    raw_row(fields);
}

void CsvWriter::raw_row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << fields[i];
    }
    impl_->out << "\r\n";
    if (!impl_->out) throw std::runtime_error("CsvWriter: write failure");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
    out << content;
    if (!out) throw std::runtime_error("write_text_file: write failure");
}

SvgPlot::SvgPlot(double xmin, double xmax, double ymin, double ymax, int width, int height)
    : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), w_(width), h_(height) {}

double SvgPlot::px(double x) const {
    return 50.0 + (x - xmin_) / (xmax_ - xmin_) * (w_ - 70.0);
}
double SvgPlot::py(double y) const {
    return (h_ - 40.0) - (y - ymin_) / (ymax_ - ymin_) * (h_ - 60.0);
}

void SvgPlot::add_path(const std::vector<double>& xs, const std::vector<double>& ys,
                       const std::string& cls, const std::string& color) {
    std::ostringstream s;
    s << "<path class=\"" << cls << "\" fill=\"none\" stroke=\"" << color << "\" d=\"";
    for (size_t i = 0; i < xs.size(); ++i)
        s << (i ? " L " : "M ") << px(xs[i]) << ' ' << py(ys[i]);
    s << "\"/>";
    elements_.push_back(s.str());
}

void SvgPlot::add_points(const std::vector<double>& xs, const std::vector<double>& ys,
                         const std::string& cls, const std::string& color) {
    for (size_t i = 0; i < xs.size(); ++i) {
        std::ostringstream s;
        s << "<circle class=\"" << cls << "\" cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i])
          << "\" r=\"2\" fill=\"" << color << "\"/>";
        elements_.push_back(s.str());
    }
}

void SvgPlot::add_hline(double y, const std::string& cls, const std::string& color) {
    std::ostringstream s;
    s << "<line class=\"" << cls << "\" x1=\"" << px(xmin_) << "\" y1=\"" << py(y) << "\" x2=\""
      << px(xmax_) << "\" y2=\"" << py(y) << "\" stroke=\"" << color << "\"/>";
    elements_.push_back(s.str());
}

std::string SvgPlot::render() const {
    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w_
      << "\" height=\"" << h_ << "\">\n";
    // axes
    s << "<line class=\"axis\" x1=\"" << px(xmin_) << "\" y1=\"" << py(ymin_) << "\" x2=\""
      << px(xmax_) << "\" y2=\"" << py(ymin_) << "\" stroke=\"black\"/>\n";
    s << "<line class=\"axis\" x1=\"" << px(xmin_) << "\" y1=\"" << py(ymin_) << "\" x2=\""
      << px(xmin_) << "\" y2=\"" << py(ymax_) << "\" stroke=\"black\"/>\n";
    for (const std::string& e : elements_) s << e << '\n';
    s << "</svg>\n";
    return s.str();
}

}  // namespace edgeproc::io
