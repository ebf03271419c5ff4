#include "mssc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mssc/error.hpp"

namespace mssc {

namespace {

// Neumaier's compensated sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0;
    double carry_ = 0;
};

}

double brute_objective(const Dataset& data, const Assignment& labels, std::size_t k) {
    const std::size_t n = data.size();
    const std::size_t d = data.dim();
    if (labels.size() != n) {
        throw InvalidInput("assignment length does not match dataset size");
    }
    for (auto l : labels) {
        if (l >= k) {
            throw InvalidInput("label out of range");
        }
    }
    CompensatedSum total;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t count = 0;
        std::vector<double> mean(d);
        for (std::size_t dim = 0; dim < d; ++dim) {
            CompensatedSum s;
            count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (labels[i] == c) {
                    s.add(data.row(i)[dim]);
                    ++count;
                }
            }
            if (count == 0) {
                throw EmptyClusterError(c);
            }
            mean[dim] = s.value() / static_cast<double>(count);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] != c) {
                continue;
            }
            for (std::size_t dim = 0; dim < d; ++dim) {
                const double delta = data.row(i)[dim] - mean[dim];
                total.add(delta * delta);
            }
        }
    }
    return total.value();
}

double partition_count(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    // S(i, j) = j S(i-1, j) + S(i-1, j-1), one row at a time.
    std::vector<double> row(k + 1, 0.0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, k); j >= 1; --j) {
            row[j] = static_cast<double>(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return row[k];
}

ExhaustiveResult exhaustive_optimum(const Dataset& data, std::size_t k) {
    const std::size_t n = data.size();
    if (k < 1 || k > n) {
        throw InvalidInput("k must satisfy 1 <= k <= n");
    }
    const double count = partition_count(n, k);
    if (count > kExhaustiveLimit) {
        throw TooLargeError("exhaustive enumeration of " + std::to_string(count) +
                                " partitions exceeds the limit of " + std::to_string(kExhaustiveLimit),
                            count);
    }

    // Restricted growth string: label[0] = 0 and label[i] <= 1 + max(label[0..i)).
    Assignment label(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    Assignment best_labels;
    double best = std::numeric_limits<double>::infinity();

    auto evaluate = [&]() {
        const double value = brute_objective(data, label, k);
        if (value < best) {
            best = value;
            best_labels = label;
        }
    };

    // Odometer over restricted growth strings, keeping only those that use all k blocks.
    while (true) {
        if (prefix_max[n - 1] + 1 == k) {
            evaluate();
        }
        std::size_t i = n - 1;
        while (i > 0) {
            const std::size_t cap = std::min(prefix_max[i - 1] + 1, k - 1);
            if (label[i] < cap) {
                break;
            }
            --i;
        }
        if (i == 0) {
            break;
        }
        ++label[i];
        prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            label[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }

    return ExhaustiveResult{solution_from_assignment(data, best_labels, k), best};
}

TwoSquaresInstance make_two_squares(double gap) {
    if (!(gap >= 0) || !std::isfinite(gap)) {
        throw InvalidInput("two-squares gap must be a finite value >= 0");
    }
    const double r = 1.0 + gap;
    auto data = Dataset::from_rows(
        {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {r, 0}, {r, 1}, {r + 1, 0}, {r + 1, 1}},
        "two-squares");
    std::optional<double> optimum;
    if (gap < 0.5 * (std::sqrt(3.0) - 1.0)) {
        const double w = 1.0 + 2.0 * gap;
        optimum = 3.0 + w * w / 3.0;
    }
    return TwoSquaresInstance{gap, std::move(data), optimum};
}

}
