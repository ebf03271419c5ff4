#include <algorithm>
#include <limits>
#include <tuple>

#include "mssc/error.hpp"
#include "mssc/incremental.hpp"
#include "mssc/starters.hpp"

namespace mssc {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

// An insertion of `point` into `cluster`. Ordered by cost, then by scan position
// (point-major, cluster-minor), which reproduces first-found tie-breaking.
struct Insertion {
    double cost = kInf;
    std::size_t point = kNone;
    std::size_t cluster = kNone;

    bool valid() const noexcept { return point != kNone; }
    bool operator<(const Insertion& o) const noexcept {
        return std::tie(cost, point, cluster) < std::tie(o.cost, o.point, o.cluster);
    }
};

// Two cheapest clusters for one unassigned point.
struct PointChoices {
    Insertion best;
    Insertion second;

    void offer(const Insertion& ins) {
        if (ins < best) {
            second = best;
            best = ins;
        } else if (ins < second) {
            second = ins;
        }
    }
};

void check_construction_k(const Dataset& data, std::size_t k) {
    if (k < 2) {
        throw InvalidInput("construction needs k >= 2");
    }
    if (k > data.size()) {
        throw InvalidInput("k must not exceed the number of points");
    }
}

}

Solution construction_start(const Dataset& data, std::size_t k, bool grasp, RandomSource& rng) {
    check_construction_k(data, k);
    const std::size_t n = data.size();
    const std::size_t first = rng.below(n);
    std::size_t second = rng.below(n - 1);
    if (second >= first) {
        ++second;
    }
    return construction_start_from(data, k, first, second, grasp, rng);
}

Solution construction_start_from(const Dataset& data, std::size_t k, std::size_t first, std::size_t second,
                                 bool grasp, RandomSource& rng) {
    check_construction_k(data, k);
    const std::size_t n = data.size();
    if (first >= n || second >= n || first == second) {
        throw InvalidInput("initial seeds must be two distinct point indices");
    }

    // Seeding: repeatedly take the point farthest from its nearest seed.
    std::vector<std::size_t> seeds{first, second};
    std::vector<char> is_seed(n, 0);
    std::vector<double> nearest(n, kInf);
    auto add_seed_distances = [&](std::size_t s) {
        is_seed[s] = 1;
        const auto x = data.row(s);
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], squared_distance(data.row(i), x));
        }
    };
    add_seed_distances(first);
    add_seed_distances(second);
    while (seeds.size() < k) {
        TopTwo<std::size_t> far;
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_seed[i]) {
                far.offer(i, -nearest[i]);
            }
        }
        const std::size_t pick = top2_select(*far.best(), far.second(), grasp, rng);
        seeds.push_back(pick);
        add_seed_distances(pick);
    }

    // Insertion: commit the cheapest (point, cluster) pair until every point is placed.
    Assignment labels(n, kNone);
    std::vector<ClusterStats> stats(k);
    for (std::size_t c = 0; c < k; ++c) {
        labels[seeds[c]] = c;
        apply_add(stats[c], data.row(seeds[c]));
    }

    std::vector<double> cost(n * k, kInf);
    std::vector<PointChoices> choices(n);
    auto rescan = [&](std::size_t i) {
        PointChoices pc;
        for (std::size_t c = 0; c < k; ++c) {
            pc.offer(Insertion{cost[i * k + c], i, c});
        }
        choices[i] = pc;
    };
    std::size_t pending = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] != kNone) {
            continue;
        }
        ++pending;
        for (std::size_t c = 0; c < k; ++c) {
            cost[i * k + c] = add_delta(stats[c], data.row(i));
        }
        rescan(i);
    }

    while (pending > 0) {
        // The runner-up pair is either the best point's second choice or another point's best.
        std::size_t top = kNone;
        std::size_t runner = kNone;
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] != kNone) {
                continue;
            }
            if (top == kNone || choices[i].best < choices[top].best) {
                runner = top;
                top = i;
            } else if (runner == kNone || choices[i].best < choices[runner].best) {
                runner = i;
            }
        }
        const Insertion best = choices[top].best;
        Insertion second = choices[top].second;
        if (runner != kNone && choices[runner].best < second) {
            second = choices[runner].best;
        }
        const std::optional<Insertion> alt = second.valid() ? std::optional<Insertion>(second) : std::nullopt;
        const Insertion chosen = top2_select(best, alt, grasp, rng);

        labels[chosen.point] = chosen.cluster;
        --pending;
        const std::size_t c = chosen.cluster;
        apply_add(stats[c], data.row(chosen.point));

        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] != kNone) {
                continue;
            }
            const double v = add_delta(stats[c], data.row(i));
            cost[i * k + c] = v;
            auto& pc = choices[i];
            if (pc.best.cluster == c || pc.second.cluster == c) {
                rescan(i);
            } else {
                pc.offer(Insertion{v, i, c});
            }
        }
    }

    return solution_from_assignment(data, labels, k);
}

}
