#ifndef MSSC_TESTS_SUPPORT_HPP
#define MSSC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mssc/core.hpp"

namespace mssc::test {

// Reference SSE with explicit per-cluster means, in long double.
inline double naive_sse(const Dataset& data, const std::vector<std::size_t>& labels, std::size_t k) {
    const std::size_t d = data.dim();
    std::vector<long double> sum(k * d, 0.0L);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        ++count[labels[i]];
        for (std::size_t t = 0; t < d; ++t) {
            sum[labels[i] * d + t] += data.row(i)[t];
        }
    }
    long double total = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::size_t c = labels[i];
        for (std::size_t t = 0; t < d; ++t) {
            const long double diff = data.row(i)[t] - sum[c * d + t] / count[c];
            total += diff * diff;
        }
    }
    return static_cast<double>(total);
}

inline bool rel_near(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Points on a coarse grid with jitter so both ties and generic positions occur.
inline Dataset random_dataset(std::size_t n, std::size_t d, std::mt19937_64& gen, double spread = 10.0) {
    std::uniform_real_distribution<double> u(-spread, spread);
    std::vector<double> coords(n * d);
    for (auto& v : coords) {
        v = u(gen);
    }
    return Dataset(n, d, std::move(coords));
}

inline std::vector<std::vector<double>> sorted_rows(const CenterSet& c) {
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < c.size(); ++j) {
        rows.emplace_back(c.row(j).begin(), c.row(j).end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}

#endif
