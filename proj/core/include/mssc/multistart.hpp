#ifndef MSSC_MULTISTART_HPP
#define MSSC_MULTISTART_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mssc/core.hpp"
#include "mssc/improve.hpp"
#include "mssc/io.hpp"
#include "mssc/starters.hpp"

/**
 * @file multistart.hpp
 * @brief Seeded multi-start driver: many independent (starter, improvement) runs, best kept.
 */

namespace mssc {

struct RunConfig {
    std::string dataset_path;
    DatasetFormat format = DatasetFormat::matrix;
    /// Overrides the dataset name (file stem by default) used for registry lookups.
    std::string dataset_name;
    std::size_t k = 2;
    StarterConfig starter;
    ImproveConfig improve;
    std::size_t restarts = 1000;
    std::uint64_t seed = 1;
    /// 0 picks the hardware concurrency.
    std::size_t threads = 1;
    std::string out;
};

/// Outcome of one restart. `error` is empty on success.
struct RestartResult {
    double objective = 0;
    double seconds = 0;
    std::string error;
};

struct RunReport {
    std::string dataset;
    std::size_t k = 0;
    StarterConfig starter;
    ImproveConfig improve;
    std::size_t restarts = 0;
    std::uint64_t seed = 0;

    /// Indexed by restart number, independent of execution order.
    std::vector<RestartResult> runs;
    std::optional<double> best_objective;
    std::optional<Solution> best_solution;
    std::size_t hits_at_best = 0;
    std::size_t failures = 0;
    double mean_time_s = 0;
    std::optional<double> best_known;
    std::optional<double> rel_error_pct;

    /// Below the best-known value by more than the registry's rounding.
    bool new_best_found() const noexcept;
};

/// Relative tolerance for counting a restart as a hit at the best objective.
inline constexpr double kHitTolerance = 1e-9;

/// Run `config.restarts` restarts on an already loaded dataset. The dataset path and name are ignored.
RunReport run_multistart(const Dataset& data, const RunConfig& config);

/// Load the configured dataset, then run the restarts.
RunReport run_multistart(const RunConfig& config);

/// Objective of one restart: starter from stream `derive(seed, index)`, then improvement.
Solution run_single(const Dataset& data, const RunConfig& config, std::size_t index);

}

#endif
