// Copyright 2026 The cliffsim Authors
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

#ifndef CLIFFSIM_STATS_HPP
#define CLIFFSIM_STATS_HPP

#include <cstdint>
#include <vector>

namespace cliffsim {

// Upper tail of the chi-square distribution with df degrees of freedom,
// i.e. P[X >= statistic].
double chi_square_tail(double statistic, double df);

// Goodness-of-fit p-value of observed counts against expected probabilities.
// Categories with zero expectation must have zero counts (else p = 0).
double chi_square_gof(const std::vector<uint64_t>& counts, const std::vector<double>& probs);

// Two-sample chi-square homogeneity test over matched categories.
double chi_square_two_sample(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);

}  // namespace cliffsim

#endif
