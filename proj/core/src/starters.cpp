#include "mssc/starters.hpp"

#include <algorithm>
#include <string>

#include "mssc/error.hpp"

namespace mssc {

CenterSet kmeanspp_from(const Dataset& data, std::size_t k, std::size_t first, RandomSource& rng) {
    const std::size_t n = data.size();
    if (k < 1 || k > n) {
        throw InvalidInput("k must satisfy 1 <= k <= n");
    }
    if (first >= n) {
        throw InvalidInput("first center index out of range");
    }
    std::vector<std::size_t> chosen{first};
    std::vector<char> taken(n, 0);
    taken[first] = 1;
    std::vector<double> nearest(n);
    for (std::size_t i = 0; i < n; ++i) {
        nearest[i] = squared_distance(data.row(i), data.row(first));
    }

    while (chosen.size() < k) {
        double total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            total += nearest[i];
        }
        std::size_t pick = n;
        if (total > 0) {
            const double target = rng.uniform() * total;
            double running = 0;
            std::size_t last_positive = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (nearest[i] <= 0) {
                    continue;
                }
                last_positive = i;
                running += nearest[i];
                if (running > target) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) {
                pick = last_positive;
            }
        } else {
            // Every remaining point coincides with a chosen one; pick uniformly among the rest.
            std::uint64_t r = rng.below(n - chosen.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (!taken[i] && r-- == 0) {
                    pick = i;
                    break;
                }
            }
        }
        chosen.push_back(pick);
        taken[pick] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], squared_distance(data.row(i), data.row(pick)));
        }
    }

    std::vector<double> flat;
    flat.reserve(k * data.dim());
    for (auto i : chosen) {
        auto r = data.row(i);
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return CenterSet(k, data.dim(), std::move(flat));
}

Assignment random_partition_labels(std::size_t n, std::size_t k, RandomSource& rng) {
    if (k < 1 || k > n) {
        throw InvalidInput("k must satisfy 1 <= k <= n");
    }
    Assignment labels(n);
    std::vector<std::size_t> sizes(k, 0);
    for (auto& l : labels) {
        l = rng.below(k);
        ++sizes[l];
    }
    for (std::size_t c = 0; c < k; ++c) {
        while (sizes[c] == 0) {
            const std::size_t i = rng.below(n);
            if (sizes[labels[i]] > 1) {
                --sizes[labels[i]];
                labels[i] = c;
                ++sizes[c];
            }
        }
    }
    return labels;
}

CenterSet baseline_start(const Dataset& data, std::size_t k, BaselineKind kind, RandomSource& rng) {
    const std::size_t n = data.size();
    if (k < 1 || k > n) {
        throw InvalidInput("k must satisfy 1 <= k <= n");
    }
    switch (kind) {
    case BaselineKind::random_partition: {
        const Assignment labels = random_partition_labels(n, k, rng);
        return solution_from_assignment(data, labels, k).centers();
    }
    case BaselineKind::random_points: {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) {
            order[i] = i;
        }
        std::vector<double> flat;
        flat.reserve(k * data.dim());
        for (std::size_t j = 0; j < k; ++j) {
            std::swap(order[j], order[j + rng.below(n - j)]);
            auto r = data.row(order[j]);
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return CenterSet(k, data.dim(), std::move(flat));
    }
    case BaselineKind::kmeanspp:
        return kmeanspp_from(data, k, rng.below(n), rng);
    }
    throw InvalidInput("unknown baseline kind");
}

std::string_view to_string(StarterKind kind) noexcept {
    switch (kind) {
    case StarterKind::merging:
        return "merging";
    case StarterKind::merging_basic:
        return "merging-basic";
    case StarterKind::construction:
        return "construction";
    case StarterKind::separation:
        return "separation";
    case StarterKind::random_partition:
        return "random-partition";
    case StarterKind::random_points:
        return "random-points";
    case StarterKind::kmeanspp:
        return "kmeanspp";
    }
    return "unknown";
}

StarterKind parse_starter_kind(std::string_view text) {
    for (auto kind : {StarterKind::merging, StarterKind::merging_basic, StarterKind::construction,
                      StarterKind::separation, StarterKind::random_partition, StarterKind::random_points,
                      StarterKind::kmeanspp}) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    throw InvalidInput("unknown starter '" + std::string(text) + "'");
}

Start make_start(const Dataset& data, std::size_t k, const StarterConfig& config, RandomSource& rng,
                 const ImproveConfig& improve_config) {
    switch (config.kind) {
    case StarterKind::merging:
        return merging_start(data, k, config.alpha, rng);
    case StarterKind::merging_basic:
        return merging_start_basic(data, k, config.alpha, rng);
    case StarterKind::construction:
        return construction_start(data, k, config.grasp, rng);
    case StarterKind::separation:
        return separation_start(data, k, config.grasp, rng, improve_config);
    case StarterKind::random_partition:
        return baseline_start(data, k, BaselineKind::random_partition, rng);
    case StarterKind::random_points:
        return baseline_start(data, k, BaselineKind::random_points, rng);
    case StarterKind::kmeanspp:
        return baseline_start(data, k, BaselineKind::kmeanspp, rng);
    }
    throw InvalidInput("unknown starter kind");
}

}
