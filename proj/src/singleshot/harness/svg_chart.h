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


#ifndef _SINGLESHOT_HARNESS_SVG_CHART_H
#define _SINGLESHOT_HARNESS_SVG_CHART_H

#include <string>
#include <utility>
#include <vector>

namespace singleshot {

struct ChartSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct LineChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    /// Logarithmic y axis; points with y <= 0 are dropped.
    bool log_y = false;
    std::vector<ChartSeries> series;
};

/// Standalone SVG document with axes, ticks, one polyline per series and a legend.
std::string render_svg(const LineChart &chart);

}  // namespace singleshot

#endif
