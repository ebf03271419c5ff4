#ifndef MSSC_GRASP_HPP
#define MSSC_GRASP_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>

#include "mssc/error.hpp"
#include "mssc/random.hpp"

/**
 * @file grasp.hpp
 * @brief Randomized greedy selection rules used by the starting-solution generators.
 *
 * Two rules are provided:
 *  - the alpha-threshold reservoir scan, where any candidate cheaper than alpha
 *    times the running minimum may displace the current choice;
 *  - the best/second-best rule, which picks the best move with probability 2/3.
 */

namespace mssc {

/// Acceptance factor of the reservoir scan; 1 means pure greedy.
class AlphaRule {
public:
    explicit AlphaRule(double alpha = 1.5) : alpha_(alpha) {
        if (!(alpha >= 1.0) || alpha == std::numeric_limits<double>::infinity()) {
            throw InvalidInput("alpha must be a finite value >= 1");
        }
    }

    double value() const noexcept { return alpha_; }
    bool greedy() const noexcept { return alpha_ == 1.0; }

private:
    double alpha_;
};

/**
 * @brief Streaming form of the alpha-threshold selection.
 *
 * Candidates are offered in the caller's scan order. A candidate strictly cheaper
 * than the running minimum becomes the selection and resets the counter r to 1.
 * Otherwise, a candidate cheaper than alpha times the minimum increments r and
 * replaces the selection with probability 1/r. With alpha = 1 no randomness is
 * consumed and the first minimum wins.
 */
template <typename Id>
class ReservoirSelector {
public:
    ReservoirSelector(AlphaRule rule, RandomSource& rng) : alpha_(rule.value()), rng_(&rng) {}

    void offer(Id id, double cost) {
        if (cost < best_) {
            best_ = cost;
            selected_ = id;
            selected_cost_ = cost;
            count_ = 1;
        } else if (cost < alpha_ * best_) {
            ++count_;
            if (rng_->below(count_) == 0) {
                selected_ = id;
                selected_cost_ = cost;
            }
        }
    }

    bool empty() const noexcept { return !selected_.has_value(); }
    const Id& selected() const { return selected_.value(); }
    double selected_cost() const noexcept { return selected_cost_; }
    double best_cost() const noexcept { return best_; }

private:
    double alpha_;
    RandomSource* rng_;
    double best_ = std::numeric_limits<double>::infinity();
    std::optional<Id> selected_;
    double selected_cost_ = 0;
    std::uint64_t count_ = 0;
};

struct Candidate {
    std::size_t id;
    double cost;
};

/// Run the reservoir scan over `candidates` in order. Throws InvalidInput if empty.
inline std::size_t reservoir_select(std::span<const Candidate> candidates, AlphaRule rule, RandomSource& rng) {
    if (candidates.empty()) {
        throw InvalidInput("reservoir_select needs at least one candidate");
    }
    ReservoirSelector<std::size_t> sel(rule, rng);
    for (const auto& c : candidates) {
        sel.offer(c.id, c.cost);
    }
    return sel.selected();
}

/**
 * @brief Tracks the two smallest scores offered, first-offered winning ties.
 */
template <typename Id>
class TopTwo {
public:
    void offer(const Id& id, double score) {
        if (!best_ || score < best_score_) {
            second_ = best_;
            second_score_ = best_score_;
            best_ = id;
            best_score_ = score;
        } else if (!second_ || score < second_score_) {
            second_ = id;
            second_score_ = score;
        }
    }

    const std::optional<Id>& best() const noexcept { return best_; }
    const std::optional<Id>& second() const noexcept { return second_; }
    double best_score() const noexcept { return best_score_; }
    double second_score() const noexcept { return second_score_; }

private:
    std::optional<Id> best_;
    std::optional<Id> second_;
    double best_score_ = std::numeric_limits<double>::infinity();
    double second_score_ = std::numeric_limits<double>::infinity();
};

/// Best with probability 2/3, second with probability 1/3. No draw when `second` is absent.
template <typename Id>
Id top2_select(const Id& best, const std::optional<Id>& second, RandomSource& rng) {
    if (!second) {
        return best;
    }
    return rng.below(3) < 2 ? best : *second;
}

/// As above; with `grasp == false` the best is returned and no randomness is consumed.
template <typename Id>
Id top2_select(const Id& best, const std::optional<Id>& second, bool grasp, RandomSource& rng) {
    return grasp ? top2_select(best, second, rng) : best;
}

}

#endif
