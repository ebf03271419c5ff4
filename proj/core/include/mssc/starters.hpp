#ifndef MSSC_STARTERS_HPP
#define MSSC_STARTERS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "mssc/core.hpp"
#include "mssc/grasp.hpp"
#include "mssc/improve.hpp"
#include "mssc/random.hpp"

/**
 * @file starters.hpp
 * @brief Starting-solution generators.
 *
 * Three constructive generators are provided, each randomized by a GRASP rule so that
 * repeated calls give diverse starts:
 *  - merging: agglomerate n singletons, combining the cheapest pair until k remain;
 *  - construction: farthest-point seeds, then cheapest insertion of the remaining points;
 *  - separation: solve a q-cluster problem, then smaller problems inside each part.
 *
 * Random partitions, random points (Forgy) and k-means++ seeding are included as baselines.
 */

namespace mssc {

/**
 * @brief Agglomerative merging with a per-cluster cache of the cheapest partner.
 *
 * Clusters are identified by the index of the point they started from. Live clusters are
 * kept in a list with O(1) swap-with-last removal; every scan runs over that list in order.
 *
 * Construction performs the initial pass: each cluster's cheapest partner is computed and
 * coincident clusters (zero merge cost) are combined immediately. Each step() then picks a
 * cluster by the alpha rule over the cached costs, merges it with its partner, and repairs
 * the cache of every cluster that could be affected.
 */
class MergingProcess {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    MergingProcess(const Dataset& data, AlphaRule alpha, RandomSource& rng);

    std::size_t live_count() const noexcept { return live_.size(); }

    /// Perform one merge. Requires at least two live clusters.
    void step();

    /// Merge until `k` clusters remain.
    void run_until(std::size_t k);

    const std::vector<std::size_t>& live() const noexcept { return live_; }
    const ClusterStats& cluster(std::size_t id) const { return clusters_[id]; }
    double cached_cost(std::size_t id) const { return best_cost_[id]; }
    std::size_t cached_partner(std::size_t id) const { return partner_[id]; }

    /// Largest difference between a cached cost and its recomputation from scratch.
    double cache_error() const;

    /// Centroids of the live clusters, in list order.
    CenterSet centers() const;

    /// Sum of the applied merge increases, i.e. the objective of the current partition.
    double objective() const noexcept { return objective_; }

private:
    void recompute(std::size_t id);
    void remove(std::size_t id);

    AlphaRule alpha_;
    RandomSource* rng_;
    std::vector<ClusterStats> clusters_;
    std::vector<double> best_cost_;
    std::vector<std::size_t> partner_;
    std::vector<std::size_t> live_;
    std::vector<std::size_t> position_;
    double objective_ = 0;
};

/// Merging start using the cached-partner algorithm. Returns the k surviving centroids.
CenterSet merging_start(const Dataset& data, std::size_t k, AlphaRule alpha, RandomSource& rng);

/**
 * Merging start by scanning every pair (a < b, in list order) at each step, stopping a scan
 * early at a zero-cost pair. Slower reference for merging_start().
 */
CenterSet merging_start_basic(const Dataset& data, std::size_t k, AlphaRule alpha, RandomSource& rng);

/**
 * @brief Construction start: seeding followed by cheapest insertion.
 *
 * Two distinct random points seed clusters 0 and 1. Further seeds are the points whose
 * distance to the nearest seed is largest (second largest with probability 1/3 when `grasp`
 * is set). Remaining points are then inserted one by one, always committing the globally
 * cheapest (point, cluster) insertion, or the second cheapest with probability 1/3 under GRASP.
 * Requires 2 <= k <= n.
 */
Solution construction_start(const Dataset& data, std::size_t k, bool grasp, RandomSource& rng);

/// construction_start() with the two initial seeds given.
Solution construction_start_from(const Dataset& data, std::size_t k, std::size_t first, std::size_t second,
                                 bool grasp, RandomSource& rng);

/// floor(1.3 * sqrt(k)).
std::size_t choose_q(std::size_t k);

/**
 * Number of centers given to each part: proportional to part sizes, at least one each,
 * repaired to sum to k by moving centers between parts according to wss per center.
 * Throws InvalidInput if the parts hold fewer than k points in total.
 */
std::vector<std::size_t> allocate_centers(std::span<const std::size_t> part_sizes, std::span<const double> part_wss,
                                          std::size_t k);

/**
 * @brief Separation start.
 *
 * Solves the q = choose_q(k) problem with construction and the hybrid improvement, then
 * distributes the k centers among the q parts and solves each part the same way (a part
 * with one center takes its centroid). Falls back to construction_start() when q < 2 or q >= k.
 */
CenterSet separation_start(const Dataset& data, std::size_t k, bool grasp, RandomSource& rng,
                           const ImproveConfig& improve_config = {});

enum class BaselineKind { random_partition, random_points, kmeanspp };

/// Random partition (centroids of uniform labels), Forgy random points, or k-means++ seeds.
/// Uniform random labels in [0, k); empty clusters are then filled by moving random points out of larger ones.
Assignment random_partition_labels(std::size_t n, std::size_t k, RandomSource& rng);

CenterSet baseline_start(const Dataset& data, std::size_t k, BaselineKind kind, RandomSource& rng);

/// k-means++ seeding with the first center fixed.
CenterSet kmeanspp_from(const Dataset& data, std::size_t k, std::size_t first, RandomSource& rng);

enum class StarterKind {
    merging,
    merging_basic,
    construction,
    separation,
    random_partition,
    random_points,
    kmeanspp,
};

std::string_view to_string(StarterKind kind) noexcept;
/// Accepts the CLI spellings: merging, merging-basic, construction, separation,
/// random-partition, random-points, kmeanspp.
StarterKind parse_starter_kind(std::string_view text);

struct StarterConfig {
    StarterKind kind = StarterKind::merging;
    AlphaRule alpha{1.5};
    bool grasp = true;
};

/// Produce a start of the configured kind. Construction yields a Solution, the rest centers.
Start make_start(const Dataset& data, std::size_t k, const StarterConfig& config, RandomSource& rng,
                 const ImproveConfig& improve_config = {});

}

#endif
