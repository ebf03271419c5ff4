#ifndef MSSC_INCREMENTAL_HPP
#define MSSC_INCREMENTAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mssc/core.hpp"

/**
 * @file incremental.hpp
 * @brief O(d) changes of the objective for the three elementary cluster moves.
 *
 * For a cluster of m points with centroid c:
 *  - adding x raises its sum of squares by m/(m+1) |x - c|^2,
 *  - removing a member x lowers it by m/(m-1) |x - c|^2,
 *  - merging with a second cluster (m', c') raises the total by m m'/(m + m') |c - c'|^2.
 *
 * The `apply_*` functions mutate a ClusterStats in place using the same formulas,
 * updating the centroid as a weighted mean.
 */

namespace mssc {

/// Increase of the objective when `point` joins the cluster. Requires `stats.size >= 1`.
double add_delta(const ClusterStats& stats, Point point);

/**
 * Signed change (<= 0) of the objective when member `point` leaves the cluster.
 * Returns `std::nullopt` when the cluster is a singleton: removal would make it vanish.
 */
std::optional<double> remove_delta(const ClusterStats& stats, Point point);

/// Increase of the objective when the two clusters are combined. Symmetric in its arguments.
double merge_delta(const ClusterStats& a, const ClusterStats& b);

struct MergedCenter {
    std::vector<double> centroid;
    std::size_t size;
};

/// Centroid and size of the union of two clusters.
MergedCenter merge_centers(const ClusterStats& a, const ClusterStats& b);

/// Add `point` to `stats`. An empty cluster becomes a singleton at the point.
void apply_add(ClusterStats& stats, Point point);

/// Remove member `point` from `stats`. Throws InvalidInput on a singleton.
void apply_remove(ClusterStats& stats, Point point);

/// Merge `other` into `stats`.
void apply_merge(ClusterStats& stats, const ClusterStats& other);

}

#endif
