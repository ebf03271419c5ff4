#include "mssc/multistart.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "mssc/error.hpp"
#include "mssc/registry.hpp"
#include "mssc/report.hpp"

namespace mssc {

bool RunReport::new_best_found() const noexcept {
    return rel_error_pct && *rel_error_pct < -100.0 * kRegistryRelativePrecision;
}

Solution run_single(const Dataset& data, const RunConfig& config, std::size_t index) {
    RandomSource rng = RandomSource::derive(config.seed, index);
    const Start start = make_start(data, config.k, config.starter, rng, config.improve);
    return improve(data, start, config.improve);
}

RunReport run_multistart(const Dataset& data, const RunConfig& config) {
    if (config.restarts < 1) {
        throw InvalidInput("restarts must be at least 1");
    }
    if (config.k < 1 || config.k > data.size()) {
        throw InvalidInput("k must satisfy 1 <= k <= n");
    }

    RunReport report;
    report.dataset = data.name();
    report.k = config.k;
    report.starter = config.starter;
    report.improve = config.improve;
    report.restarts = config.restarts;
    report.seed = config.seed;
    report.runs.resize(config.restarts);

    std::vector<std::optional<Solution>> solutions(config.restarts);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < config.restarts; i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                solutions[i] = run_single(data, config, i);
                report.runs[i].objective = solutions[i]->objective;
            } catch (const std::exception& e) {
                report.runs[i].error = e.what();
            }
            report.runs[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };

    std::size_t threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    threads = std::min(threads, config.restarts);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    std::size_t best_index = config.restarts;
    double total_time = 0;
    for (std::size_t i = 0; i < config.restarts; ++i) {
        total_time += report.runs[i].seconds;
        if (!solutions[i]) {
            ++report.failures;
            continue;
        }
        if (best_index == config.restarts || report.runs[i].objective < report.runs[best_index].objective) {
            best_index = i;
        }
    }
    report.mean_time_s = total_time / static_cast<double>(config.restarts);
    if (best_index == config.restarts) {
        return report;
    }

    const double best = report.runs[best_index].objective;
    report.best_objective = best;
    report.best_solution = std::move(solutions[best_index]);
    for (std::size_t i = 0; i < config.restarts; ++i) {
        if (solutions[i] && report.runs[i].objective - best <= kHitTolerance * std::abs(best)) {
            ++report.hits_at_best;
        }
    }
    report.best_known = best_known(report.dataset, report.k);
    if (report.best_known) {
        report.rel_error_pct = relative_error_pct(best, *report.best_known);
    }
    return report;
}

RunReport run_multistart(const RunConfig& config) {
    const Dataset data = load_dataset(config.dataset_path, config.format, config.dataset_name);
    return run_multistart(data, config);
}

}
