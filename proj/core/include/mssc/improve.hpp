#ifndef MSSC_IMPROVE_HPP
#define MSSC_IMPROVE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "mssc/core.hpp"

/**
 * @file improve.hpp
 * @brief Local improvement: Lloyd iterations, best-improvement point transfers, and their hybrid.
 */

namespace mssc {

enum class ImproveMode { hybrid, lloyd_only, phase3_only, none };

std::string_view to_string(ImproveMode mode) noexcept;
/// Parses "hybrid", "lloyd", "phase3" or "none". Throws InvalidInput otherwise.
ImproveMode parse_improve_mode(std::string_view text);

struct ImproveConfig {
    ImproveMode mode = ImproveMode::hybrid;
    /// Lloyd iterations before the transfer descent in hybrid mode.
    int lloyd_cap = 10;
};

/// Iteration limit used when Lloyd runs on its own (`ImproveMode::lloyd_only`).
inline constexpr int kLloydConvergenceLimit = 100000;

struct LloydResult {
    Solution solution;
    int iterations = 0;
};

/**
 * @brief Alternate nearest-center assignment and centroid update.
 *
 * Stops when the assignment no longer changes (detected by identical labels, by the update
 * leaving every center in place, or trivially when k = 1) or after `max_iter` assignment steps. With `max_iter == 0`
 * the centers are only used to assign points.
 *
 * A cluster left empty by an assignment is reseeded with the point farthest from its own center
 * (taken from a cluster that keeps at least one point), so the result always has k clusters.
 *
 * If `trajectory` is given, the objective after each step is appended to it.
 */
LloydResult lloyd(const Dataset& data, const CenterSet& centers, int max_iter,
                  std::vector<double>* trajectory = nullptr);

/// Labels for `centers` with empty clusters repaired as in lloyd().
Assignment assign_nonempty(const Dataset& data, const CenterSet& centers);

/**
 * Signed objective change of moving member `point` from `src` to `dst`; negative improves.
 * Returns `std::nullopt` when `src` is a singleton, since the move would delete a cluster.
 */
std::optional<double> transfer_gain(const ClusterStats& src, const ClusterStats& dst, Point point);

/// Ratio d2(dst)/d2(src) below which a transfer improves: (1 + 1/m_dst) / (1 - 1/m_src).
double transfer_threshold(std::size_t src_size, std::size_t dst_size);

/**
 * @brief Best-improvement single point transfers until no move improves.
 *
 * Each round evaluates every (point, other cluster) pair, points and clusters in ascending
 * order, and applies the most improving move (first one on ties). Moves that would empty
 * a cluster are skipped. Statistics are updated incrementally and rebuilt from scratch at
 * the end. Throws NonTermination if more than n*k*1000 moves are applied.
 */
Solution phase3_descent(const Dataset& data, Solution solution, std::vector<double>* trajectory = nullptr);

/// A starting point for improvement: either centers or a complete clustering.
using Start = std::variant<CenterSet, Solution>;

/**
 * @brief Run the configured improvement from a starting point.
 *
 * In hybrid mode, up to `lloyd_cap` Lloyd iterations are followed by the transfer descent.
 * A Solution start enters Lloyd through its centroids; phase3-only and none keep it as is.
 */
Solution improve(const Dataset& data, const Start& start, const ImproveConfig& config,
                 std::vector<double>* trajectory = nullptr);

inline Solution hybrid_improve(const Dataset& data, const CenterSet& centers, const ImproveConfig& config = {},
                               std::vector<double>* trajectory = nullptr) {
    return improve(data, Start{centers}, config, trajectory);
}

}

#endif
