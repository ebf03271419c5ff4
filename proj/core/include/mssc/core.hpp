#ifndef MSSC_CORE_HPP
#define MSSC_CORE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

/**
 * @file core.hpp
 * @brief Domain types and exact evaluation for minimum sum-of-squares clustering.
 *
 * Every other module speaks in terms of these types. Points and centers are
 * stored row-major in contiguous `double` buffers; rows are exposed as spans.
 */

namespace mssc {

using Point = std::span<const double>;

/**
 * @brief Immutable n-by-d matrix of point coordinates.
 *
 * Row order is fixed at construction, so a row index is a stable point identifier.
 * All coordinates must be finite and the matrix must be non-empty.
 */
class Dataset {
public:
    Dataset(std::size_t n, std::size_t d, std::vector<double> coords, std::string name = {});

    static Dataset from_rows(const std::vector<std::vector<double>>& rows, std::string name = {});

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return d_; }
    const std::string& name() const noexcept { return name_; }

    Point row(std::size_t i) const noexcept { return {coords_.data() + i * d_, d_}; }
    std::span<const double> coords() const noexcept { return coords_; }

    /// Copy of the selected rows, in the order given.
    Dataset subset(std::span<const std::size_t> rows, std::string name = {}) const;

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<double> coords_;
    std::string name_;
};

/// k cluster centers of dimension d.
class CenterSet {
public:
    CenterSet(std::size_t k, std::size_t d, std::vector<double> coords);

    static CenterSet from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return k_; }
    std::size_t dim() const noexcept { return d_; }

    Point row(std::size_t j) const noexcept { return {coords_.data() + j * d_, d_}; }
    std::span<double> row_mut(std::size_t j) noexcept { return {coords_.data() + j * d_, d_}; }
    std::span<const double> coords() const noexcept { return coords_; }

    bool operator==(const CenterSet&) const = default;

private:
    std::size_t k_;
    std::size_t d_;
    std::vector<double> coords_;
};

/// Cluster label of each point, each in [0, k).
using Assignment = std::vector<std::size_t>;

/**
 * @brief Size, centroid and within-cluster sum of squares of one cluster.
 *
 * An empty cluster has `size == 0`, `wss == 0` and an all-zero centroid that must not be read.
 */
struct ClusterStats {
    std::size_t size = 0;
    std::vector<double> centroid;
    double wss = 0;
};

/// A full clustering: labels, per-cluster statistics and the total objective.
struct Solution {
    Assignment labels;
    std::vector<ClusterStats> stats;
    double objective = 0;

    std::size_t num_clusters() const noexcept { return stats.size(); }

    /// Centroids of all clusters as a CenterSet.
    CenterSet centers() const;
};

double squared_distance(Point a, Point b) noexcept;

/// Sum over points of the squared distance to the nearest center.
double sse_objective(const Dataset& data, const CenterSet& centers);

/// Nearest-center labels; ties go to the lowest center index.
Assignment assign(const Dataset& data, const CenterSet& centers);

/// Index of the nearest center to `point`, lowest index on ties.
std::size_t nearest_center(Point point, const CenterSet& centers) noexcept;

/// Coordinate-wise mean of the given members. Throws EmptyClusterError on an empty set.
std::vector<double> centroid(const Dataset& data, std::span<const std::size_t> members);

/**
 * @brief Build a Solution from labels with a full pass over the data.
 *
 * Statistics are accumulated per cluster and the objective is their sum.
 * Throws InvalidInput for out-of-range labels and EmptyClusterError naming the first empty cluster.
 */
Solution solution_from_assignment(const Dataset& data, const Assignment& labels, std::size_t k);

}

#endif
