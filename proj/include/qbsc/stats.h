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

#ifndef QBSC_STATS_H
#define QBSC_STATS_H

#include <cstddef>
#include <span>

namespace qbsc {

struct ChiSquareResult {
    double statistic = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
};

/// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, double dof);

/// Goodness of fit of observed counts to cell probabilities. Cells with zero
/// probability are dropped; any count in such a cell gives p = 0.
ChiSquareResult chi_square_goodness_of_fit(std::span<const std::size_t> observed, std::span<const double> probs);

/// Two-sample homogeneity test over the same categories. Categories empty in
/// both samples are dropped. Fewer than two populated categories gives p = 1.
ChiSquareResult chi_square_homogeneity(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// 95% normal-approximation halfwidth of a difference of two Bernoulli rates
/// with pooled rate p and `trials` samples each: 1.96 * sqrt(2 p (1-p) / N).
double advantage_halfwidth(double pooled_rate, std::size_t trials);

/// Standard deviation of a binomial proportion.
double binomial_sigma(double p, std::size_t trials);

}  // namespace qbsc

#endif  // QBSC_STATS_H
