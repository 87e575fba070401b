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

#ifndef _SINGLESHOT_UTIL_STATS_H
#define _SINGLESHOT_UTIL_STATS_H

#include <cstddef>
#include <optional>
#include <vector>

namespace singleshot {

/// Compensated summation.
class KahanSum {
   public:
    void add(double v) {
        double y = v - carry_;
        double t = total_ + y;
        carry_ = (t - total_) - y;
        total_ = t;
    }
    double value() const {
        return total_;
    }

   private:
    double total_ = 0;
    double carry_ = 0;
};

struct Interval {
    double lo;
    double hi;
    bool contains(double v) const {
        return lo <= v && v <= hi;
    }
};

/// Wilson score interval for a binomial proportion; z = 1.96 gives 95%.
Interval wilson_interval(size_t successes, size_t trials, double z = 1.96);

double normal_cdf(double x);

/// P(Binomial(trials, p) >= successes).
double binomial_upper_tail(size_t successes, size_t trials, double p);

struct MannKendallResult {
    double s;
    double z;
    double p_value;
    /// True when the two-sided p-value is below the significance level.
    bool drift;
};

/// Mann-Kendall trend test with tie correction and the normal approximation.
/// Requires at least 3 points.
MannKendallResult mann_kendall(const std::vector<double> &series, double significance = 0.05);

struct LinearFit {
    double slope;
    double intercept;
    double slope_stderr;
};

/// Weighted least squares of y on x. Returns nullopt with fewer than 2 distinct x values.
/// The slope error uses the weighted residual variance when more than 2 points exist
/// and inverse weights as variances otherwise.
std::optional<LinearFit> weighted_least_squares(
    const std::vector<double> &x, const std::vector<double> &y, const std::vector<double> &w);

}  // namespace singleshot

#endif
