#ifndef MSSC_ORACLE_HPP
#define MSSC_ORACLE_HPP

#include <cstddef>
#include <optional>

#include "mssc/core.hpp"

/**
 * @file oracle.hpp
 * @brief Ground truth for testing: naive objective, exhaustive optimum, and the two-squares family.
 *
 * Nothing here shares code paths with the search routines beyond the domain types.
 * Sums are compensated so the oracle is more accurate than what it checks.
 */

namespace mssc {

/// Objective of a labelling computed with naive loops and compensated sums.
double brute_objective(const Dataset& data, const Assignment& labels, std::size_t k);

/// Number of partitions of n items into k non-empty blocks (Stirling number of the second kind).
double partition_count(std::size_t n, std::size_t k);

inline constexpr double kExhaustiveLimit = 1e7;

struct ExhaustiveResult {
    Solution solution;
    double objective;
};

/**
 * Enumerate every partition into k non-empty blocks (restricted growth strings) and return
 * the best. Throws TooLargeError if partition_count(n, k) exceeds kExhaustiveLimit.
 */
ExhaustiveResult exhaustive_optimum(const Dataset& data, std::size_t k);

/**
 * The eight vertices of two unit squares side by side, their near sides `gap` apart.
 * `optimal_objective` is 3 + (1 + 2 gap)^2 / 3, present only for gap < (sqrt(3) - 1) / 2.
 */
struct TwoSquaresInstance {
    double gap;
    Dataset dataset;
    std::optional<double> optimal_objective;
};

TwoSquaresInstance make_two_squares(double gap);

}

#endif
