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

#include "singleshot/util/stats.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace singleshot {

Interval wilson_interval(size_t successes, size_t trials, double z) {
    if (trials == 0) {
        return {0, 1};
    }
    if (successes > trials) {
        throw std::invalid_argument("wilson_interval: successes exceed trials.");
    }
    double n = (double)trials;
    double p = (double)successes / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double binomial_upper_tail(size_t successes, size_t trials, double p) {
    if (successes > trials || p < 0 || p > 1) {
        throw std::invalid_argument("binomial_upper_tail: invalid arguments.");
    }
    if (successes == 0 || p == 1) {
        return 1;
    }
    if (p == 0) {
        return 0;
    }
    double n = (double)trials;
    if ((double)successes <= n * p) {
        // Below the mean the sum is large; use the complement.
        double lower = 0;
        for (size_t k = 0; k < successes; k++) {
            double log_term = std::lgamma(n + 1) - std::lgamma((double)k + 1) - std::lgamma(n - (double)k + 1) +
                              (double)k * std::log(p) + (n - (double)k) * std::log1p(-p);
            lower += std::exp(log_term);
        }
        return std::clamp(1 - lower, 0.0, 1.0);
    }
    double total = 0;
    for (size_t k = successes; k <= trials; k++) {
        double log_term = std::lgamma(n + 1) - std::lgamma((double)k + 1) - std::lgamma(n - (double)k + 1) +
                          (double)k * std::log(p) + (n - (double)k) * std::log1p(-p);
        double term = std::exp(log_term);
        total += term;
        if (term < total * 1e-17) {
            break;
        }
    }
    return std::min(total, 1.0);
}

MannKendallResult mann_kendall(const std::vector<double> &series, double significance) {
    size_t n = series.size();
    if (n < 3) {
        throw std::invalid_argument("mann_kendall needs at least 3 points.");
    }
    double s = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            double d = series[j] - series[i];
            s += (d > 0) - (d < 0);
        }
    }
    std::map<double, size_t> ties;
    for (double v : series) {
        ties[v]++;
    }
    double dn = (double)n;
    double var = dn * (dn - 1) * (2 * dn + 5);
    for (const auto &[value, t] : ties) {
        double dt = (double)t;
        var -= dt * (dt - 1) * (2 * dt + 5);
    }
    var /= 18;
    double z = 0;
    if (var > 0) {
        if (s > 0) {
            z = (s - 1) / std::sqrt(var);
        } else if (s < 0) {
            z = (s + 1) / std::sqrt(var);
        }
    }
    double p = 2 * (1 - normal_cdf(std::abs(z)));
    return {s, z, p, p < significance};
}

std::optional<LinearFit> weighted_least_squares(
    const std::vector<double> &x, const std::vector<double> &y, const std::vector<double> &w) {
    if (x.size() != y.size() || x.size() != w.size()) {
        throw std::invalid_argument("weighted_least_squares: length mismatch.");
    }
    double sw = 0, sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
    }
    if (sw <= 0) {
        return std::nullopt;
    }
    double mx = sx / sw;
    double my = sy / sw;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += w[i] * (x[i] - mx) * (x[i] - mx);
        sxy += w[i] * (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0) {
        return std::nullopt;
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (x.size() > 2) {
        double rss = 0;
        for (size_t i = 0; i < x.size(); i++) {
            double r = y[i] - fit.intercept - fit.slope * x[i];
            rss += w[i] * r * r;
        }
        double sigma2 = rss / (double)(x.size() - 2);
        // Never report less uncertainty than the weights alone imply.
        fit.slope_stderr = std::sqrt(std::max(sigma2, 1.0) / sxx);
    } else {
        fit.slope_stderr = std::sqrt(1.0 / sxx);
    }
    return fit;
}

}  // namespace singleshot
