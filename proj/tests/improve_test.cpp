#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mssc/error.hpp"
#include "mssc/improve.hpp"
#include "mssc/oracle.hpp"
#include "mssc/starters.hpp"
#include "support.hpp"

using namespace mssc;

namespace {

Dataset line(std::vector<double> xs) {
    const std::size_t n = xs.size();
    return Dataset(n, 1, std::move(xs));
}

const Assignment kSquares{0, 0, 0, 0, 1, 1, 1, 1};

bool has_improving_transfer(const Dataset& data, const Solution& s) {
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t c = 0; c < s.num_clusters(); ++c) {
            if (c == s.labels[i] || s.stats[s.labels[i]].size < 2) {
                continue;
            }
            Assignment moved = s.labels;
            moved[i] = c;
            if (test::naive_sse(data, moved, s.num_clusters()) < s.objective - 1e-9) {
                return true;
            }
        }
    }
    return false;
}

}

TEST(ImproveMode, Parse) {
    EXPECT_EQ(parse_improve_mode("hybrid"), ImproveMode::hybrid);
    EXPECT_EQ(parse_improve_mode("lloyd"), ImproveMode::lloyd_only);
    EXPECT_EQ(parse_improve_mode("phase3"), ImproveMode::phase3_only);
    EXPECT_EQ(parse_improve_mode("none"), ImproveMode::none);
    EXPECT_THROW(parse_improve_mode("kmeans"), InvalidInput);
}

TEST(Lloyd, TwoSquaresFixedPoint) {
    const auto inst = make_two_squares(0.25);
    const auto r = lloyd(inst.dataset, CenterSet(2, 2, {0.5, 0.5, 1.75, 0.5}), 100);
    EXPECT_EQ(r.iterations, 1);
    EXPECT_DOUBLE_EQ(r.solution.objective, 4.0);
    EXPECT_EQ(r.solution.labels, kSquares);
}

TEST(Lloyd, SingleCluster) {
    const auto data = line({1, 2, 6});
    const auto r = lloyd(data, CenterSet(1, 1, {100}), 100);
    EXPECT_EQ(r.iterations, 1);
    EXPECT_EQ(r.solution.stats[0].centroid, std::vector<double>{3.0});
}

TEST(Lloyd, HandTrace) {
    const auto r = lloyd(line({0, 1, 10, 11}), CenterSet(2, 1, {0, 11}), 100);
    EXPECT_EQ(r.iterations, 2);
    EXPECT_DOUBLE_EQ(r.solution.objective, 1.0);
    EXPECT_EQ(test::sorted_rows(r.solution.centers()), (std::vector<std::vector<double>>{{0.5}, {10.5}}));
}

TEST(Lloyd, ZeroIterationsOnlyAssigns) {
    const auto r = lloyd(line({0, 1, 10, 11}), CenterSet(2, 1, {0, 11}), 0);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_EQ(r.solution.labels, (Assignment{0, 0, 1, 1}));
}

TEST(Lloyd, EmptyClusterReseeded) {
    // Center 1 attracts nothing; it is moved to the point farthest from its own center.
    const auto data = line({0, 1, 2, 10});
    const auto labels = assign_nonempty(data, CenterSet(2, 1, {1, 100}));
    EXPECT_EQ(labels, (Assignment{0, 0, 0, 1}));
    const auto r = lloyd(data, CenterSet(3, 1, {0, 50, 60}), 100);
    for (const auto& st : r.solution.stats) {
        EXPECT_GE(st.size, 1u);
    }
}

TEST(Lloyd, MonotoneTrajectory) {
    std::mt19937_64 gen(71);
    for (int t = 0; t < 100; ++t) {
        const auto data = test::random_dataset(60, 2, gen);
        RandomSource rng(t);
        std::vector<double> traj;
        lloyd(data, baseline_start(data, 5, BaselineKind::random_points, rng), 1000, &traj);
        for (std::size_t j = 1; j < traj.size(); ++j) {
            ASSERT_LE(traj[j], traj[j - 1] + 1e-9);
        }
    }
}

TEST(TransferGain, Example) {
    // m1 = m2 = 5, squared distances 1.0 to the source and 1.49 to the destination.
    const ClusterStats src{5, {0.0}, 10.0};
    const ClusterStats dst{5, {1.0 + std::sqrt(1.49)}, 10.0};
    const double p[] = {1.0};
    EXPECT_NEAR(*transfer_gain(src, dst, p), 5.0 / 6.0 * 1.49 - 5.0 / 4.0, 1e-12);
    EXPECT_LT(*transfer_gain(src, dst, p), 0.0);
}

TEST(TransferGain, SingletonForbidden) {
    const double p[] = {0.0};
    EXPECT_FALSE(transfer_gain(ClusterStats{1, {0.0}, 0}, ClusterStats{2, {3.0}, 1}, p).has_value());
}

TEST(TransferThreshold, Factors) {
    EXPECT_DOUBLE_EQ(transfer_threshold(5, 5), 1.5);
    EXPECT_DOUBLE_EQ(transfer_threshold(4, 4), 5.0 / 3.0);
    EXPECT_DOUBLE_EQ(transfer_threshold(3, 5), 9.0 / 5.0);
}

TEST(TransferGain, SignMatchesThreshold) {
    std::mt19937_64 gen(73);
    std::uniform_real_distribution<double> u(0.1, 5);
    int checked = 0;
    for (int t = 0; t < 10000; ++t) {
        const std::size_t m1 = 2 + gen() % 20;
        const std::size_t m2 = 1 + gen() % 20;
        const double d2_src = u(gen);
        const double ratio = transfer_threshold(m1, m2) * (gen() % 2 ? 1 - 1e-6 : 1 + 1e-6) * (gen() % 3 ? 1 : u(gen));
        const double d2_dst = ratio * d2_src;
        const ClusterStats src{m1, {0.0}, 0};
        const ClusterStats dst{m2, {std::sqrt(d2_src) + std::sqrt(d2_dst)}, 0};
        const double p[] = {std::sqrt(d2_src)};
        const double g = *transfer_gain(src, dst, p);
        const double measured = (dst.centroid[0] - p[0]) * (dst.centroid[0] - p[0]) / d2_src;
        if (std::abs(measured / transfer_threshold(m1, m2) - 1) < 1e-9) {
            continue;
        }
        ++checked;
        ASSERT_EQ(g < 0, measured < transfer_threshold(m1, m2)) << m1 << " " << m2 << " " << measured;
    }
    EXPECT_GT(checked, 9000);
}

TEST(Phase3, FixedPointUnchanged) {
    const auto inst = make_two_squares(0.25);
    const auto opt = exhaustive_optimum(inst.dataset, 2);
    const auto s = phase3_descent(inst.dataset, opt.solution);
    EXPECT_EQ(s.labels, opt.solution.labels);
}

TEST(Phase3, EscapesLloydFixedPoint) {
    const auto inst = make_two_squares(0.25);
    const auto start = solution_from_assignment(inst.dataset, kSquares, 2);
    std::vector<double> traj;
    const auto s = phase3_descent(inst.dataset, start, &traj);
    EXPECT_NEAR(s.objective, 3.75, 1e-12);
    for (std::size_t j = 1; j < traj.size(); ++j) {
        EXPECT_LT(traj[j], traj[j - 1]);
    }
}

TEST(Phase3, TopBottomSplit) {
    const auto inst = make_two_squares(0.25);
    const Assignment top_bottom{0, 1, 0, 1, 0, 1, 0, 1};
    const auto start = solution_from_assignment(inst.dataset, top_bottom, 2);
    EXPECT_NEAR(start.objective, 4 + 4 * 0.25 + 2 * 0.25 * 0.25, 1e-12);
    // Lloyd cannot leave this split.
    EXPECT_EQ(lloyd(inst.dataset, start.centers(), 100).solution.labels, top_bottom);
    // No single transfer improves it either: every move from this split is evaluated by brute force.
    EXPECT_FALSE(has_improving_transfer(inst.dataset, start));
    const auto s = phase3_descent(inst.dataset, start);
    EXPECT_EQ(s.labels, top_bottom);
    EXPECT_GT(s.objective, exhaustive_optimum(inst.dataset, 2).objective);
}

TEST(Phase3, LocalOptimumOnRandomInstances) {
    std::mt19937_64 gen(79);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 6 + gen() % 25;
        const std::size_t k = 2 + gen() % 4;
        const auto data = test::random_dataset(n, 2, gen);
        RandomSource rng(t);
        Assignment labels = random_partition_labels(n, k, rng);
        const auto start = solution_from_assignment(data, labels, k);
        std::vector<double> traj;
        const auto s = phase3_descent(data, start, &traj);
        ASSERT_FALSE(has_improving_transfer(data, s));
        EXPECT_LE(s.objective, start.objective + 1e-9);
        EXPECT_TRUE(test::rel_near(s.objective, test::naive_sse(data, s.labels, k), 1e-9));
        for (std::size_t j = 1; j < traj.size(); ++j) {
            ASSERT_LT(traj[j], traj[j - 1]);
        }
    }
}

TEST(Hybrid, FromOptimalCentroidsUnchanged) {
    std::mt19937_64 gen(83);
    const auto data = test::random_dataset(9, 2, gen);
    const auto opt = exhaustive_optimum(data, 3);
    const auto s = hybrid_improve(data, opt.solution.centers());
    EXPECT_NEAR(s.objective, opt.objective, 1e-9);
}

TEST(Hybrid, ObjectiveOrdering) {
    std::mt19937_64 gen(89);
    for (int t = 0; t < 50; ++t) {
        const auto data = test::random_dataset(50, 3, gen);
        RandomSource rng(t);
        const auto centers = baseline_start(data, 4, BaselineKind::random_points, rng);
        const double initial = solution_from_assignment(data, assign_nonempty(data, centers), 4).objective;
        const auto after_lloyd = lloyd(data, centers, 10).solution.objective;
        const auto s = hybrid_improve(data, centers);
        EXPECT_LE(after_lloyd, initial + 1e-9);
        EXPECT_LE(s.objective, after_lloyd + 1e-9);
    }
}

TEST(Hybrid, TwoSquaresConstructionHitRate) {
    const auto inst = make_two_squares(0.30);
    int hits = 0;
    for (std::uint64_t r = 0; r < 1000; ++r) {
        RandomSource rng = RandomSource::derive(5, r);
        const auto s = improve(inst.dataset, construction_start(inst.dataset, 2, true, rng), ImproveConfig{});
        hits += std::abs(s.objective - *inst.optimal_objective) <= 1e-9;
    }
    EXPECT_GE(hits, 800);
}

TEST(Improve, Modes) {
    const auto inst = make_two_squares(0.25);
    const auto start = solution_from_assignment(inst.dataset, kSquares, 2);
    ImproveConfig cfg;
    cfg.mode = ImproveMode::none;
    EXPECT_EQ(improve(inst.dataset, start, cfg).labels, kSquares);
    cfg.mode = ImproveMode::lloyd_only;
    EXPECT_DOUBLE_EQ(improve(inst.dataset, start, cfg).objective, 4.0);
    cfg.mode = ImproveMode::phase3_only;
    EXPECT_NEAR(improve(inst.dataset, start, cfg).objective, 3.75, 1e-12);
    cfg.mode = ImproveMode::hybrid;
    EXPECT_NEAR(improve(inst.dataset, start.centers(), cfg).objective, 3.75, 1e-12);
    cfg.lloyd_cap = -1;
    EXPECT_THROW(improve(inst.dataset, start, cfg), InvalidInput);
}

TEST(Improve, TrajectoryStartsAtInitialObjective) {
    std::mt19937_64 gen(97);
    const auto data = test::random_dataset(40, 2, gen);
    RandomSource rng(2);
    const auto centers = baseline_start(data, 3, BaselineKind::random_points, rng);
    std::vector<double> traj;
    const auto s = improve(data, centers, ImproveConfig{}, &traj);
    ASSERT_GE(traj.size(), 2u);
    EXPECT_DOUBLE_EQ(traj.front(), sse_objective(data, centers));
    EXPECT_TRUE(test::rel_near(traj.back(), s.objective, 1e-9));
}
