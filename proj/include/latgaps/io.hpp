// include/latgaps/io.hpp — deterministic CSV and SVG emission.
//
// Numbers are printed with std::to_chars (shortest round-trip form), so the
// output is locale-independent and byte-stable across runs and worker
// counts. CSV follows the usual header-row, comma, decimal-dot layout.

#pragma once

#include "latgaps/numeric.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace latgaps {

inline std::string fmt(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline std::string fmt(std::int64_t value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline std::string fmt(std::uint64_t value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline std::string fmt(Int128 value) { return to_string(value); }

inline std::string fmt(const Rational& value) { return value.to_string(); }

inline std::string fmt(bool value) { return value ? "1" : "0"; }

/// Builds a CSV document in memory; write() flushes it in one shot.
class CsvTable {
public:
    explicit CsvTable(std::initializer_list<std::string> header) {
        append_row(std::vector<std::string>(header));
    }

    void row(std::initializer_list<std::string> cells) {
        append_row(std::vector<std::string>(cells));
    }

    const std::string& text() const { return text_; }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text_;
    }

private:
    void append_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) text_.push_back(',');
            text_ += cells[i];
        }
        text_.push_back('\n');
    }

    std::string text_;
};

/// Minimal self-contained SVG: fixed 800x800 viewBox, scatter circles of
/// radius 0.8, polyline curves, light frame and axes.
class SvgCanvas {
public:
    SvgCanvas(double wx0, double wy0, double wx1, double wy1)
        : wx0_(wx0), wy0_(wy0), wx1_(wx1), wy1_(wy1) {
        if (!(wx1_ > wx0_) || !(wy1_ > wy0_)) throw std::domain_error("empty SVG world window");
    }

    void circle(double x, double y, const std::string& fill = "#1f3d7a") {
        body_ += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
                 "\" r=\"0.8\" fill=\"" + fill + "\"/>\n";
    }

    void polyline(std::span<const double> xs, std::span<const double> ys,
                  const std::string& stroke = "#2255cc") {
        if (xs.size() != ys.size() || xs.empty()) return;
        std::string pts;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i > 0) pts.push_back(' ');
            pts += fmt(sx(xs[i])) + "," + fmt(sy(ys[i]));
        }
        body_ += "<polyline fill=\"none\" stroke=\"" + stroke +
                 "\" stroke-width=\"1\" points=\"" + pts + "\"/>\n";
    }

    void axes() {
        const std::string grey = "#999999";
        if (wy0_ < 0.0 && wy1_ > 0.0) {
            body_ += line_tag(sx(wx0_), sy(0.0), sx(wx1_), sy(0.0), grey);
        }
        if (wx0_ < 0.0 && wx1_ > 0.0) {
            body_ += line_tag(sx(0.0), sy(wy0_), sx(0.0), sy(wy1_), grey);
        }
    }

    std::string document() const {
        std::string head =
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" "
            "width=\"800\" height=\"800\">\n"
            "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\" "
            "stroke=\"#444444\"/>\n";
        return head + body_ + "</svg>\n";
    }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << document();
    }

private:
    static std::string line_tag(double x1, double y1, double x2, double y2,
                                const std::string& stroke) {
        return "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
               "\" y2=\"" + fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"0.5\"/>\n";
    }

    // world -> view with a fixed margin; y grows upward in world space.
    double sx(double x) const { return margin_ + (x - wx0_) / (wx1_ - wx0_) * (800.0 - 2 * margin_); }
    double sy(double y) const { return 800.0 - margin_ - (y - wy0_) / (wy1_ - wy0_) * (800.0 - 2 * margin_); }

    double wx0_, wy0_, wx1_, wy1_;
    double margin_ = 20.0;
    std::string body_;
};

}  // namespace latgaps
