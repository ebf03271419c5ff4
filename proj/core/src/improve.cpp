#include "mssc/improve.hpp"

#include <limits>
#include <string>

#include "mssc/error.hpp"
#include "mssc/incremental.hpp"

namespace mssc {

namespace {

// Moves must improve by more than this fraction of the objective; guards against
// cycling on rounding noise.
constexpr double kRelativeImprovement = 1e-12;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void record(std::vector<double>* trajectory, double value) {
    if (trajectory) {
        trajectory->push_back(value);
    }
}

}

std::string_view to_string(ImproveMode mode) noexcept {
    switch (mode) {
    case ImproveMode::hybrid:
        return "hybrid";
    case ImproveMode::lloyd_only:
        return "lloyd";
    case ImproveMode::phase3_only:
        return "phase3";
    case ImproveMode::none:
        return "none";
    }
    return "unknown";
}

ImproveMode parse_improve_mode(std::string_view text) {
    if (text == "hybrid") {
        return ImproveMode::hybrid;
    }
    if (text == "lloyd") {
        return ImproveMode::lloyd_only;
    }
    if (text == "phase3") {
        return ImproveMode::phase3_only;
    }
    if (text == "none") {
        return ImproveMode::none;
    }
    throw InvalidInput("unknown improvement mode '" + std::string(text) + "'");
}

Assignment assign_nonempty(const Dataset& data, const CenterSet& centers) {
    const std::size_t k = centers.size();
    if (k > data.size()) {
        throw InvalidInput("more centers than points");
    }
    Assignment labels = assign(data, centers);
    std::vector<std::size_t> sizes(k, 0);
    for (auto l : labels) {
        ++sizes[l];
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (sizes[j] != 0) {
            continue;
        }
        std::size_t far = kNone;
        double far_dist = -1;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (sizes[labels[i]] < 2) {
                continue;
            }
            const double dist = squared_distance(data.row(i), centers.row(labels[i]));
            if (dist > far_dist) {
                far_dist = dist;
                far = i;
            }
        }
        // k <= n guarantees some cluster holds two points while another is empty.
        --sizes[labels[far]];
        labels[far] = j;
        sizes[j] = 1;
    }
    return labels;
}

LloydResult lloyd(const Dataset& data, const CenterSet& centers, int max_iter, std::vector<double>* trajectory) {
    if (max_iter < 0) {
        throw InvalidInput("max_iter must be non-negative");
    }
    CenterSet current = centers;
    if (max_iter == 0) {
        auto sol = solution_from_assignment(data, assign_nonempty(data, current), current.size());
        record(trajectory, sol.objective);
        return {std::move(sol), 0};
    }

    LloydResult out{Solution{}, 0};
    Assignment previous;
    while (out.iterations < max_iter) {
        Assignment labels = assign_nonempty(data, current);
        ++out.iterations;
        if (labels == previous) {
            break;
        }
        out.solution = solution_from_assignment(data, labels, current.size());
        record(trajectory, out.solution.objective);
        previous = std::move(labels);

        // With one cluster the assignment can never change.
        CenterSet next = out.solution.centers();
        if (next == current || current.size() == 1) {
            break;
        }
        current = std::move(next);
    }
    return out;
}

std::optional<double> transfer_gain(const ClusterStats& src, const ClusterStats& dst, Point point) {
    auto removal = remove_delta(src, point);
    if (!removal) {
        return std::nullopt;
    }
    return add_delta(dst, point) + *removal;
}

double transfer_threshold(std::size_t src_size, std::size_t dst_size) {
    if (src_size < 2 || dst_size < 1) {
        throw InvalidInput("transfer threshold needs src_size >= 2 and dst_size >= 1");
    }
    const double m1 = static_cast<double>(src_size);
    const double m2 = static_cast<double>(dst_size);
    return (1.0 + 1.0 / m2) / (1.0 - 1.0 / m1);
}

Solution phase3_descent(const Dataset& data, Solution solution, std::vector<double>* trajectory) {
    const std::size_t n = data.size();
    const std::size_t k = solution.num_clusters();
    if (solution.labels.size() != n) {
        throw InvalidInput("solution does not match dataset");
    }
    record(trajectory, solution.objective);
    if (k < 2) {
        return solution;
    }

    auto& labels = solution.labels;
    auto& stats = solution.stats;
    const std::size_t guard = n * k * 1000;
    std::size_t moves = 0;

    while (true) {
        const double threshold = -kRelativeImprovement * solution.objective;
        double best_gain = threshold;
        std::size_t best_point = kNone;
        std::size_t best_dst = kNone;

        for (std::size_t i = 0; i < n; ++i) {
            const auto src = labels[i];
            const auto& src_stats = stats[src];
            if (src_stats.size < 2) {
                continue;
            }
            const auto x = data.row(i);
            const double removal = *remove_delta(src_stats, x);
            if (removal >= best_gain) {
                // Even a zero-cost insertion could not beat the current best.
                continue;
            }
            for (std::size_t c = 0; c < k; ++c) {
                if (c == src) {
                    continue;
                }
                const double gain = add_delta(stats[c], x) + removal;
                if (gain < best_gain) {
                    best_gain = gain;
                    best_point = i;
                    best_dst = c;
                }
            }
        }

        if (best_point == kNone) {
            break;
        }
        const auto x = data.row(best_point);
        apply_remove(stats[labels[best_point]], x);
        apply_add(stats[best_dst], x);
        labels[best_point] = best_dst;
        solution.objective += best_gain;
        record(trajectory, solution.objective);

        if (++moves > guard) {
            throw NonTermination("transfer descent exceeded " + std::to_string(guard) + " moves");
        }
    }

    return solution_from_assignment(data, labels, k);
}

Solution improve(const Dataset& data, const Start& start, const ImproveConfig& config,
                 std::vector<double>* trajectory) {
    if (config.lloyd_cap < 0) {
        throw InvalidInput("lloyd_cap must be non-negative");
    }
    const auto* start_solution = std::get_if<Solution>(&start);
    auto start_centers = [&]() {
        return start_solution ? start_solution->centers() : std::get<CenterSet>(start);
    };
    auto as_solution = [&]() {
        if (start_solution) {
            record(trajectory, start_solution->objective);
            return *start_solution;
        }
        const auto& centers = std::get<CenterSet>(start);
        auto sol = solution_from_assignment(data, assign_nonempty(data, centers), centers.size());
        record(trajectory, sse_objective(data, centers));
        record(trajectory, sol.objective);
        return sol;
    };

    switch (config.mode) {
    case ImproveMode::none:
        return as_solution();
    case ImproveMode::phase3_only: {
        auto sol = as_solution();
        return phase3_descent(data, std::move(sol), trajectory);
    }
    case ImproveMode::lloyd_only: {
        auto centers = start_centers();
        record(trajectory, start_solution ? start_solution->objective : sse_objective(data, centers));
        return lloyd(data, centers, kLloydConvergenceLimit, trajectory).solution;
    }
    case ImproveMode::hybrid: {
        Solution sol;
        if (config.lloyd_cap == 0) {
            sol = as_solution();
        } else {
            auto centers = start_centers();
            record(trajectory, start_solution ? start_solution->objective : sse_objective(data, centers));
            sol = lloyd(data, centers, config.lloyd_cap, trajectory).solution;
        }
        return phase3_descent(data, std::move(sol), trajectory);
    }
    }
    throw InvalidInput("unknown improvement mode");
}

}
