#include "mssc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mssc/improve.hpp"
#include "mssc/incremental.hpp"
#include "mssc/oracle.hpp"
#include "mssc/random.hpp"
#include "mssc/starters.hpp"

namespace mssc {

namespace {

std::string fmt(const char* f, double a, double b = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

Dataset random_dataset(std::size_t n, std::size_t d, RandomSource& rng) {
    std::vector<double> coords(n * d);
    for (auto& v : coords) {
        v = std::floor(rng.uniform() * 20.0) - 10.0 + rng.uniform();
    }
    return Dataset(n, d, std::move(coords));
}

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

VerifyCheck check_deltas(RandomSource& rng) {
    constexpr int kCases = 10000;
    int bad = 0;
    for (int c = 0; c < kCases; ++c) {
        const std::size_t n = 3 + rng.below(20);
        const std::size_t d = 1 + rng.below(5);
        const Dataset data = random_dataset(n, d, rng);
        Assignment labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            labels[i] = i < 2 ? i : rng.below(2);
        }
        const Solution sol = solution_from_assignment(data, labels, 2);
        const double base = brute_objective(data, labels, 2);
        const std::size_t i = rng.below(n);
        const std::size_t src = labels[i];
        Assignment moved = labels;
        moved[i] = 1 - src;
        if (sol.stats[src].size > 1) {
            const double truth = brute_objective(data, moved, 2) - base;
            const double via = *remove_delta(sol.stats[src], data.row(i)) + add_delta(sol.stats[1 - src], data.row(i));
            bad += !rel_close(via, truth, 1e-9);
        }
        Assignment joined(n, 0);
        const double merged = brute_objective(data, joined, 1) - base;
        bad += !rel_close(merge_delta(sol.stats[0], sol.stats[1]), merged, 1e-9);
    }
    return {"incremental deltas", bad == 0, std::to_string(bad) + " mismatches in " + std::to_string(kCases) + " cases"};
}

std::vector<VerifyCheck> check_two_squares() {
    std::vector<VerifyCheck> out;
    for (double x : {0.25, 0.30, 0.35}) {
        const auto inst = make_two_squares(x);
        const double opt = *inst.optimal_objective;
        const double ex = exhaustive_optimum(inst.dataset, 2).objective;
        RandomSource rng(1);
        const double merged = hybrid_improve(inst.dataset, merging_start(inst.dataset, 2, AlphaRule(1.0), rng)).objective;
        const bool ok = std::abs(ex - opt) <= 1e-12 && std::abs(merged - opt) <= 1e-12;
        out.push_back({"two squares x=" + fmt("%.2f", x), ok,
                       "analytic " + fmt("%.15g", opt) + ", exhaustive " + fmt("%.15g", ex) + ", merging " +
                           fmt("%.15g", merged)});
    }

    // The split into the two squares is a Lloyd fixed point that a single transfer improves.
    const auto inst = make_two_squares(0.25);
    const Assignment squares{0, 0, 0, 0, 1, 1, 1, 1};
    const Solution fixed = solution_from_assignment(inst.dataset, squares, 2);
    const auto lloyd_res = lloyd(inst.dataset, fixed.centers(), 100);
    const Solution after = phase3_descent(inst.dataset, lloyd_res.solution);
    const bool ok = lloyd_res.solution.labels == squares && after.objective < fixed.objective;
    out.push_back({"transfer escapes Lloyd fixed point", ok,
                   "Lloyd " + fmt("%.15g", lloyd_res.solution.objective) + ", after transfers " +
                       fmt("%.15g", after.objective)});
    return out;
}

VerifyCheck check_exhaustive(RandomSource& rng) {
    constexpr int kInstances = 30;
    constexpr int kRestarts = 100;
    int found = 0;
    bool monotone = true;
    for (int t = 0; t < kInstances; ++t) {
        const std::size_t n = 5 + rng.below(6);
        const std::size_t d = 1 + rng.below(3);
        const std::size_t k = 2 + rng.below(2);
        const Dataset data = random_dataset(n, d, rng);
        const double opt = exhaustive_optimum(data, k).objective;
        double best = INFINITY;
        for (int r = 0; r < kRestarts; ++r) {
            std::vector<double> traj;
            const Solution s = improve(data, construction_start(data, k, true, rng), ImproveConfig{}, &traj);
            for (std::size_t j = 1; j < traj.size(); ++j) {
                monotone = monotone && traj[j] <= traj[j - 1] * (1 + 1e-12) + 1e-12;
            }
            best = std::min(best, s.objective);
        }
        found += rel_close(best, opt, 1e-9);
    }
    const bool ok = monotone && found * 100 >= 95 * kInstances;
    return {"exhaustive instances", ok,
            std::to_string(found) + "/" + std::to_string(kInstances) + " optima found, trajectories " +
                (monotone ? "monotone" : "not monotone")};
}

}

std::vector<VerifyCheck> run_verify(std::uint64_t seed) {
    RandomSource rng(seed);
    std::vector<VerifyCheck> out;
    out.push_back(check_deltas(rng));
    for (auto& c : check_two_squares()) {
        out.push_back(std::move(c));
    }
    out.push_back(check_exhaustive(rng));
    return out;
}

}
