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

#include "cliffsim/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffsim {

namespace {

// Regularized incomplete gamma Q(a, x) via series (x < a+1) or continued
// fraction (x >= a+1); standard Numerical-Recipes-style formulation.
double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0) return 1.0;
    double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; i++) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        double p = sum * std::exp(-x + a * std::log(x) - gln);
        return 1.0 - p;
    }
    double b = x + 1.0 - a, c = 1e308, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; i++) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-308) d = 1e-308;
        c = b + an / c;
        if (std::fabs(c) < 1e-308) c = 1e-308;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace

double chi_square_tail(double statistic, double df) {
    if (statistic <= 0) return 1.0;
    return gamma_q(df / 2.0, statistic / 2.0);
}

double chi_square_gof(const std::vector<uint64_t>& counts, const std::vector<double>& probs) {
    if (counts.size() != probs.size()) throw std::invalid_argument("chi_square_gof: size mismatch");
    uint64_t total = 0;
    for (uint64_t c : counts) total += c;
    if (total == 0) return 1.0;
    double stat = 0.0;
    size_t df = 0;
    for (size_t i = 0; i < counts.size(); i++) {
        double expected = probs[i] * double(total);
        if (expected == 0.0) {
            if (counts[i] != 0) return 0.0;
            continue;
        }
        double d = double(counts[i]) - expected;
        stat += d * d / expected;
        df++;
    }
    if (df <= 1) return 1.0;
    return chi_square_tail(stat, double(df - 1));
}

double chi_square_two_sample(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("chi_square_two_sample: size mismatch");
    double na = 0, nb = 0;
    for (size_t i = 0; i < a.size(); i++) {
        na += double(a[i]);
        nb += double(b[i]);
    }
    if (na == 0 || nb == 0) return 1.0;
    double stat = 0.0;
    size_t df = 0;
    for (size_t i = 0; i < a.size(); i++) {
        double rowsum = double(a[i]) + double(b[i]);
        if (rowsum == 0) continue;
        double ea = rowsum * na / (na + nb);
        double eb = rowsum * nb / (na + nb);
        double da = double(a[i]) - ea, db = double(b[i]) - eb;
        stat += da * da / ea + db * db / eb;
        df++;
    }
    if (df <= 1) return 1.0;
    return chi_square_tail(stat, double(df - 1));
}

}  // namespace cliffsim
