// Copyright 2026 The qbsc Authors
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

#include "qbsc/stats.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "qbsc/errors.h"

namespace qbsc {

double chi_square_survival(double statistic, double dof) {
    if (dof <= 0) return 1.0;
    if (statistic <= 0) return 1.0;
    boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult chi_square_goodness_of_fit(std::span<const std::size_t> observed, std::span<const double> probs) {
    if (observed.size() != probs.size()) {
        throw InvalidParameter("chi_square_goodness_of_fit: size mismatch");
    }
    double total = 0;
    for (auto o : observed) total += static_cast<double>(o);
    ChiSquareResult r;
    std::size_t cells = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (probs[i] <= 0.0) {
            if (observed[i] > 0) {
                r.statistic = INFINITY;
                r.p_value = 0.0;
                return r;
            }
            continue;
        }
        double expected = total * probs[i];
        double d = static_cast<double>(observed[i]) - expected;
        r.statistic += d * d / expected;
        ++cells;
    }
    r.dof = cells > 0 ? static_cast<double>(cells - 1) : 0.0;
    r.p_value = chi_square_survival(r.statistic, r.dof);
    return r;
}

ChiSquareResult chi_square_homogeneity(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    if (a.size() != b.size()) {
        throw InvalidParameter("chi_square_homogeneity: size mismatch");
    }
    double na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += static_cast<double>(a[i]);
        nb += static_cast<double>(b[i]);
    }
    ChiSquareResult r;
    if (na == 0 || nb == 0) return r;
    std::size_t cells = 0;
    const double n = na + nb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double col = static_cast<double>(a[i] + b[i]);
        if (col == 0) continue;
        ++cells;
        double ea = col * na / n;
        double eb = col * nb / n;
        double da = static_cast<double>(a[i]) - ea;
        double db = static_cast<double>(b[i]) - eb;
        r.statistic += da * da / ea + db * db / eb;
    }
    if (cells < 2) return r;
    r.dof = static_cast<double>(cells - 1);
    r.p_value = chi_square_survival(r.statistic, r.dof);
    return r;
}

double advantage_halfwidth(double pooled_rate, std::size_t trials) {
    if (trials == 0) return INFINITY;
    return 1.96 * std::sqrt(pooled_rate * (1.0 - pooled_rate) * 2.0 / static_cast<double>(trials));
}

double binomial_sigma(double p, std::size_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace qbsc
