// Copyright 2026 The Singleshot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "singleshot/harness/svg_chart.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace singleshot {

namespace {

constexpr double WIDTH = 640;
constexpr double HEIGHT = 420;
constexpr double LEFT = 70;
constexpr double RIGHT = 150;
constexpr double TOP = 40;
constexpr double BOTTOM = 50;
const char *const PALETTE[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

std::string render_svg(const LineChart &chart) {
    std::vector<ChartSeries> series = chart.series;
    for (auto &s : series) {
        if (chart.log_y) {
            std::erase_if(s.points, [](const auto &p) { return !(p.second > 0); });
        }
        std::sort(s.points.begin(), s.points.end());
    }
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto &s : series) {
        for (auto [x, y] : s.points) {
            double ty = chart.log_y ? std::log10(y) : y;
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, ty);
            y1 = std::max(y1, ty);
        }
    }
    if (!(x0 <= x1)) {
        x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    }
    if (x1 - x0 <= 0) {
        x0 -= 0.5, x1 += 0.5;
    }
    if (y1 - y0 <= 0) {
        y0 -= 0.5, y1 += 0.5;
    }
    double pw = WIDTH - LEFT - RIGHT;
    double ph = HEIGHT - TOP - BOTTOM;
    auto px = [&](double x) { return LEFT + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double ty) { return TOP + ph - (ty - y0) / (y1 - y0) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << WIDTH << "\" height=\"" << HEIGHT
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << WIDTH / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(chart.title)
        << "</text>\n";
    out << "<rect x=\"" << LEFT << "\" y=\"" << TOP << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; k++) {
        double x = x0 + (x1 - x0) * k / 4;
        double ty = y0 + (y1 - y0) * k / 4;
        out << "<line x1=\"" << px(x) << "\" y1=\"" << TOP + ph << "\" x2=\"" << px(x) << "\" y2=\"" << TOP + ph + 5
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(x) << "\" y=\"" << TOP + ph + 18 << "\" text-anchor=\"middle\">" << num(x)
            << "</text>\n";
        out << "<line x1=\"" << LEFT - 5 << "\" y1=\"" << py(ty) << "\" x2=\"" << LEFT << "\" y2=\"" << py(ty)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << LEFT - 8 << "\" y=\"" << py(ty) + 4 << "\" text-anchor=\"end\">"
            << num(chart.log_y ? std::pow(10, ty) : ty) << "</text>\n";
    }
    out << "<text x=\"" << LEFT + pw / 2 << "\" y=\"" << HEIGHT - 12 << "\" text-anchor=\"middle\">"
        << escape(chart.x_label) << "</text>\n";
    out << "<text x=\"16\" y=\"" << TOP + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << TOP + ph / 2 << ")\">" << escape(chart.y_label) << "</text>\n";
    for (size_t i = 0; i < series.size(); i++) {
        const char *color = PALETTE[i % std::size(PALETTE)];
        std::string pts;
        for (auto [x, y] : series[i].points) {
            double ty = chart.log_y ? std::log10(y) : y;
            pts += num(px(x)) + "," + num(py(ty)) + " ";
            out << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(ty)) << "\" r=\"3\" fill=\"" << color
                << "\"/>\n";
        }
        if (!pts.empty()) {
            pts.pop_back();
            out << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        }
        double ly = TOP + 10 + 18 * double(i);
        out << "<line x1=\"" << WIDTH - RIGHT + 12 << "\" y1=\"" << ly << "\" x2=\"" << WIDTH - RIGHT + 32 << "\" y2=\""
            << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << WIDTH - RIGHT + 38 << "\" y=\"" << ly + 4 << "\">" << escape(series[i].name)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace singleshot
