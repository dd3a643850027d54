// Copyright 2026 The topocost Authors
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

#ifndef TOPOCOST_TESTS_ORACLES_H
#define TOPOCOST_TESTS_ORACLES_H

// Independent reference computations. Nothing here calls into the library's
// model code; each oracle re-derives its answer by a different route
// (high-precision arithmetic, enumeration, iteration, exhaustive search).

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace oracle {

using Real = boost::multiprecision::cpp_dec_float_50;

struct Constants {
    double p_th = 0.0062;
    double c1 = 0.13;
    double c2 = 0.61;
};

struct Block {
    std::int64_t volume;
    std::int64_t depth;
};

inline Block block(int level) {
    switch (level) {
        case 1:
            return {5 * 21 * 2, 5};
        case 2:
            return {8 * 77 * 9 / 4, 9};
        default:
            return {10000, 15};
    }
}

/// 1 - (1 - p_f)^(lambda V) <= 1/(640 L^4), in 50-digit arithmetic.
inline bool meets_budget(int d, std::int64_t bits, std::int64_t lambda, std::int64_t volume, double p,
                         const Constants &k = {}) {
    Real base = Real(k.c2) * Real(p) / Real(k.p_th);
    Real pf = Real(k.c1) * boost::multiprecision::pow(base, (d + 1) / 2);
    Real n = Real(lambda) * Real(volume);
    Real failure = Real(1) - boost::multiprecision::pow(Real(1) - pf, n);
    Real l = Real(bits);
    Real budget = Real(1) / (Real(640) * l * l * l * l);
    return failure <= budget;
}

/// Smallest d in [1, max_d] meeting the budget, by linear scan.
inline std::optional<int> brute_force_distance(std::int64_t bits, std::int64_t lambda, std::int64_t volume, double p,
                                               const Constants &k = {}, int max_d = 300) {
    for (int d = 1; d <= max_d; ++d) {
        if (meets_budget(d, bits, lambda, volume, p, k)) {
            return d;
        }
    }
    return std::nullopt;
}

/// p_{l+1} = c * p_l^3, iterated `level` times.
inline double iterated_residual(double c, int level, double p) {
    double r = p;
    for (int i = 0; i < level; ++i) {
        r = c * r * r * r;
    }
    return r;
}

/// P(more than `spares` of n Bernoulli(q) fail) by enumerating all 2^n outcomes.
inline double enumerated_tail(int n, int spares, double q) {
    double total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int failures = __builtin_popcount(mask);
        if (failures > spares) {
            total += std::pow(q, failures) * std::pow(1 - q, n - failures);
        }
    }
    return total;
}

inline double choose(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    // Pascal's triangle row; independent of the library's product formula.
    double row[64] = {1};
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j > 0; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[k];
}

inline double binomial_pmf(int n, int k, double q) {
    return choose(n, k) * std::pow(q, k) * std::pow(1 - q, n - k);
}

/// sum_m P(demand = m) P(failures > slots - m).
inline double ycorr_double_sum(double q, int slots = 15, double demand = 0.5) {
    double total = 0;
    for (int m = 0; m <= slots; ++m) {
        double tail = 0;
        for (int f = slots - m + 1; f <= slots; ++f) {
            tail += binomial_pmf(slots, f, q);
        }
        total += binomial_pmf(slots, m, demand) * tail;
    }
    return total;
}

/// P(final correction demanded) * P(more than one of eight circuits fail).
inline double top_y_exact(double q, double demand = 0.5) {
    double tail = 0;
    for (int f = 2; f <= 8; ++f) {
        tail += binomial_pmf(8, f, q);
    }
    return demand * tail;
}

inline std::int64_t sk_length(std::int64_t bits) {
    double l = static_cast<double>(bits);
    double raw = 19.6 * (std::log10(640.0) + 4 * std::log10(l)) - 10.5;
    double c = std::ceil(raw);
    return c < 1 ? 1 : static_cast<std::int64_t>(c);
}

struct LevelDistance {
    int level;
    int d;
    double cost;  ///< proportional to runtime at fixed L: D(level) * d
};

/// Exhaustive search over (level, d) for the cheapest pair meeting the gate budget
/// and both residual conditions.
inline std::optional<LevelDistance> cheapest_feasible(std::int64_t bits, double p, const Constants &k = {},
                                                      int max_d = 200) {
    std::int64_t lambda = sk_length(bits);
    std::optional<LevelDistance> best;
    for (int level = 1; level <= 3; ++level) {
        Block b = block(level);
        double res_a = iterated_residual(35, level, p);
        double res_y = iterated_residual(7, level, p);
        for (int d = 1; d <= max_d; ++d) {
            double pf = k.c1 * std::pow(k.c2 * p / k.p_th, (d + 1) / 2);
            if (res_a > pf || res_y > pf) {
                continue;
            }
            if (!meets_budget(d, bits, lambda, b.volume, p, k)) {
                continue;
            }
            double cost = static_cast<double>(b.depth) * d;
            if (!best || cost < best->cost) {
                best = LevelDistance{level, d, cost};
            }
            break;
        }
    }
    return best;
}

/// Largest L in [lo, hi] with within(L), by scanning every L.
inline std::optional<std::int64_t> scan_max(std::int64_t lo, std::int64_t hi,
                                            const std::function<bool(std::int64_t)> &within) {
    std::optional<std::int64_t> best;
    for (std::int64_t l = lo; l <= hi; ++l) {
        if (within(l)) {
            best = l;
        }
    }
    return best;
}

}  // namespace oracle

#endif
