// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include "chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "corpus.hpp"
#include "csv.hpp"
#include "error.hpp"

namespace wsnet {

namespace {

struct SeriesStyle {
    const char* color;
    const char* marker;  // triangle | circle | cross
};

SeriesStyle style_for(const std::string& metric, size_t fallback_index) {
    if (metric == "levenshtein") return {"green", "triangle"};
    if (metric == "jaro") return {"red", "circle"};
    if (metric == "jaro-winkler") return {"blue", "cross"};
    static const char* extra[] = {"darkorange", "purple", "teal", "gray"};
    return {extra[fallback_index % 4], "circle"};
}

struct Point {
    double x;
    std::optional<double> y;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double nice_step(double range) {
    if (range <= 0.0) return 1.0;
    const double raw = range / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm <= 1.0) return mag;
    if (norm <= 2.0) return 2.0 * mag;
    if (norm <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

void draw_marker(std::ostringstream& svg, const char* marker, double x, double y,
                 const char* color) {
    const double r = 3.5;
    if (std::string_view(marker) == "triangle") {
        svg << "<polygon points=\"" << fmt(x) << "," << fmt(y - r) << " " << fmt(x - r) << ","
            << fmt(y + r) << " " << fmt(x + r) << "," << fmt(y + r) << "\" fill=\"" << color
            << "\"/>\n";
    } else if (std::string_view(marker) == "cross") {
        svg << "<path d=\"M" << fmt(x - r) << " " << fmt(y - r) << " L" << fmt(x + r) << " "
            << fmt(y + r) << " M" << fmt(x - r) << " " << fmt(y + r) << " L" << fmt(x + r) << " "
            << fmt(y - r) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    } else {
        svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << r << "\" fill=\""
            << color << "\"/>\n";
    }
}

}  // namespace

std::string render_chart(std::string_view sweep_csv, const std::string& property) {
    const auto rows = parse_csv(sweep_csv);
    if (rows.empty()) throw Error(ErrorCode::Schema, "sweep CSV is empty");
    const std::vector<std::string>& header = rows[0];

    auto column = [&](const std::string& name) -> std::optional<size_t> {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) return std::nullopt;
        return static_cast<size_t>(it - header.begin());
    };
    const auto metric_col = column("metric");
    const auto threshold_col = column("threshold");
    if (!metric_col || !threshold_col) {
        throw Error(ErrorCode::Schema, "sweep CSV lacks metric/threshold columns");
    }
    const auto property_col = column(property);
    if (!property_col || property == "metric" || property == "threshold") {
        std::string valid;
        for (const std::string& h : header) {
            if (h == "metric" || h == "threshold") continue;
            if (!valid.empty()) valid += ", ";
            valid += h;
        }
        throw Error(ErrorCode::Usage, "unknown property '" + property + "' (valid: " + valid + ")");
    }

    // Series keyed by metric, in first-appearance order.
    std::vector<std::string> series_names;
    std::map<std::string, std::vector<Point>> series;
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != header.size()) {
            throw Error(ErrorCode::Schema, "sweep CSV row " + std::to_string(i + 1) +
                                               ": expected " + std::to_string(header.size()) +
                                               " fields");
        }
        const std::string& metric = row[*metric_col];
        if (!series.count(metric)) series_names.push_back(metric);
        Point p;
        try {
            p.x = std::stod(row[*threshold_col]);
            if (!row[*property_col].empty()) p.y = std::stod(row[*property_col]);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse,
                        "sweep CSV row " + std::to_string(i + 1) + ": not a number");
        }
        series[metric].push_back(p);
    }
    for (auto& [name, points] : series) {
        std::stable_sort(points.begin(), points.end(),
                         [](const Point& a, const Point& b) { return a.x < b.x; });
    }

    double y_min = 0.0;
    double y_max = 1.0;
    bool have_values = false;
    for (const auto& [name, points] : series) {
        for (const Point& p : points) {
            if (!p.y) continue;
            if (!have_values) {
                y_min = y_max = *p.y;
                have_values = true;
            } else {
                y_min = std::min(y_min, *p.y);
                y_max = std::max(y_max, *p.y);
            }
        }
    }
    if (y_min == y_max) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    const double width = 800;
    const double height = 520;
    const double left = 80;
    const double right = width - 170;
    const double top = 40;
    const double bottom = height - 60;

    auto sx = [&](double t) { return left + t * (right - left); };
    auto sy = [&](double v) { return bottom - (v - y_min) / (y_max - y_min) * (bottom - top); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << (left + (right - left) / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << property << " vs threshold</text>\n";

    // Axes.
    svg << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
        << bottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << bottom
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 10; ++i) {
        const double t = i / 10.0;
        const double x = sx(t);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << bottom << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << bottom + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << bottom + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(t)
            << "</text>\n";
    }
    const double step = nice_step(y_max - y_min);
    for (double v = std::ceil(y_min / step) * step; v <= y_max + 1e-12; v += step) {
        const double y = sy(v);
        svg << "<line x1=\"" << left - 5 << "\" y1=\"" << fmt(y) << "\" x2=\"" << left
            << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
        char vb[32];
        std::snprintf(vb, sizeof(vb), "%g", v);
        svg << "<text x=\"" << left - 9 << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << vb
            << "</text>\n";
    }
    svg << "<text x=\"" << (left + (right - left) / 2) << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">threshold"
        << "</text>\n";
    svg << "<text x=\"22\" y=\"" << (top + (bottom - top) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 22 " << (top + (bottom - top) / 2) << ")\">" << property
        << "</text>\n";

    // Series.
    size_t series_index = 0;
    for (const std::string& name : series_names) {
        const SeriesStyle st = style_for(name, series_index++);
        const std::vector<Point>& points = series[name];
        std::vector<std::pair<double, double>> segment;
        auto flush = [&] {
            if (segment.size() >= 2) {
                svg << "<polyline fill=\"none\" stroke=\"" << st.color
                    << "\" stroke-width=\"1.5\" points=\"";
                for (const auto& [x, y] : segment) svg << fmt(x) << "," << fmt(y) << " ";
                svg << "\"/>\n";
            }
            segment.clear();
        };
        for (const Point& p : points) {
            if (!p.y) {
                flush();  // an undefined cell breaks the line
                continue;
            }
            segment.emplace_back(sx(p.x), sy(*p.y));
        }
        flush();
        for (const Point& p : points) {
            if (p.y) draw_marker(svg, st.marker, sx(p.x), sy(*p.y), st.color);
        }
    }

    // Legend.
    double ly = top + 10;
    for (size_t i = 0; i < series_names.size(); ++i) {
        const SeriesStyle st = style_for(series_names[i], i);
        draw_marker(svg, st.marker, right + 18, ly - 4, st.color);
        svg << "<text x=\"" << right + 30 << "\" y=\"" << fmt(ly)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series_names[i] << "</text>\n";
        ly += 20;
    }

    svg << "</svg>\n";
    return svg.str();
}

void render_chart_file(const std::string& csv_path, const std::string& property,
                       const std::string& svg_path) {
    write_file(svg_path, render_chart(read_file(csv_path), property));
}

}  // namespace wsnet
