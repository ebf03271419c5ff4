// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mssc/improve.hpp"
#include "mssc/incremental.hpp"
#include "mssc/io.hpp"
#include "mssc/multistart.hpp"
#include "mssc/oracle.hpp"
#include "mssc/registry.hpp"
#include "mssc/starters.hpp"

using namespace mssc;

namespace {

enum class Outcome { pass, fail, skip };

struct Verdict {
    Outcome outcome;
    std::string detail;
};

Verdict pass_if(bool ok, std::string detail) { return {ok ? Outcome::pass : Outcome::fail, std::move(detail)}; }

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// SSE of the listed rows about their mean, in long double with explicit loops.
long double naive_sse(const Dataset& data, const std::vector<std::size_t>& rows) {
    const std::size_t d = data.dim();
    std::vector<long double> mean(d, 0.0L);
    for (auto i : rows) {
        for (std::size_t t = 0; t < d; ++t) {
            mean[t] += data.row(i)[t];
        }
    }
    for (auto& m : mean) {
        m /= static_cast<long double>(rows.size());
    }
    long double total = 0;
    for (auto i : rows) {
        for (std::size_t t = 0; t < d; ++t) {
            const long double diff = data.row(i)[t] - mean[t];
            total += diff * diff;
        }
    }
    return total;
}

ClusterStats stats_of(const Dataset& data, const std::vector<std::size_t>& rows) {
    ClusterStats s;
    for (auto i : rows) {
        apply_add(s, data.row(i));
    }
    return s;
}

bool rel_match(double value, long double truth, double tol) {
    const long double scale = std::max<long double>({1.0L, std::fabs(truth), std::fabs(static_cast<long double>(value))});
    return std::fabs(static_cast<long double>(value) - truth) <= tol * scale;
}

// Analytic optimum of the two-squares family, written out per gap.
double analytic_two_squares(double x) { return 3.0 + (1.0 + 2.0 * x) * (1.0 + 2.0 * x) / 3.0; }

Verdict criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const double gaps[] = {0.25, 0.30, 0.35};
    const double stated[] = {3.75, 3.0 + 64.0 / 75.0, 3.0 + 289.0 / 300.0};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        const auto inst = make_two_squares(gaps[i]);
        const auto ex = exhaustive_optimum(inst.dataset, 2);
        RandomSource rng(i);
        const auto merged = hybrid_improve(inst.dataset, merging_start(inst.dataset, 2, AlphaRule(1.0), rng));
        ok = ok && std::abs(ex.objective - stated[i]) <= 1e-12 && std::abs(merged.objective - stated[i]) <= 1e-12 &&
             std::abs(analytic_two_squares(gaps[i]) - stated[i]) <= 1e-12;
        detail += fmt("x=%.2f exhaustive %.15f merging %.15f; ", gaps[i], ex.objective, merged.objective);
    }
    const double secs = seconds_since(t0);
    return pass_if(ok && secs < 1.0, detail + fmt("%.3f s", secs));
}

Verdict criterion2() {
    bool ok = true;
    std::string detail;
    for (double x : {0.25, 0.30, 0.35}) {
        const auto inst = make_two_squares(x);
        RunConfig cfg;
        cfg.k = 2;
        cfg.starter.kind = StarterKind::construction;
        cfg.restarts = 1000;
        cfg.seed = 2;
        cfg.threads = worker_count();
        const auto report = run_multistart(inst.dataset, cfg);
        std::size_t hits = 0;
        for (const auto& r : report.runs) {
            hits += r.error.empty() && std::abs(r.objective - *inst.optimal_objective) <= 1e-9;
        }
        ok = ok && hits >= 800;
        detail += fmt("x=%.2f %zu/1000; ", x, hits);
    }
    return pass_if(ok, detail + "floor 800");
}

Verdict best_known_reproduction(const char* name, double tolerance, double time_limit) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto data = load_dataset(std::string(MSSC_TEST_DATA_DIR) + "/" + name + ".txt", DatasetFormat::matrix);
    bool ok = true;
    double worst = 0;
    std::string misses;
    for (std::size_t k = 2; k <= 10; ++k) {
        const double known = *best_known(name, k);
        for (const StarterConfig& starter : {StarterConfig{StarterKind::construction, AlphaRule(1.5), true},
                                             StarterConfig{StarterKind::merging, AlphaRule(1.5), true}}) {
            RunConfig cfg;
            cfg.k = k;
            cfg.starter = starter;
            cfg.restarts = 1000;
            cfg.seed = 3;
            cfg.threads = worker_count();
            const auto report = run_multistart(data, cfg);
            const double rel = report.best_objective ? std::abs(*report.best_objective - known) / known : INFINITY;
            worst = std::max(worst, rel);
            if (!(rel <= tolerance)) {
                ok = false;
                misses += fmt(" k=%zu %s %.6e vs %.5e;", k, std::string(to_string(starter.kind)).c_str(),
                              report.best_objective.value_or(NAN), known);
            }
        }
    }
    const double secs = seconds_since(t0);
    return pass_if(ok && secs < time_limit,
                   fmt("k=2..10, construction and merging, worst relative error %.2e (limit %.0e), %.1f s", worst,
                       tolerance, secs) +
                       misses);
}

Verdict criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-10, 10);
    constexpr int kCases = 100000;
    int bad = 0;
    double worst = 0;
    auto check = [&](double value, long double truth) {
        const long double scale = std::max<long double>({1.0L, std::fabs(truth)});
        worst = std::max(worst, static_cast<double>(std::fabs(value - truth) / scale));
        bad += !rel_match(value, truth, 1e-9);
    };
    for (int c = 0; c < kCases; ++c) {
        const std::size_t n = 3 + gen() % 48;
        const std::size_t d = 1 + gen() % 20;
        std::vector<double> coords(n * d);
        for (auto& v : coords) {
            v = u(gen);
        }
        const Dataset data(n, d, std::move(coords));
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) {
            order[i] = i;
        }
        std::shuffle(order.begin(), order.end(), gen);
        const std::size_t split = 2 + gen() % (n - 2);
        const std::vector<std::size_t> a(order.begin(), order.begin() + split);
        const std::vector<std::size_t> b(order.begin() + split, order.end());
        const auto sa = stats_of(data, a);
        const auto sb = stats_of(data, b);
        const long double fa = naive_sse(data, a);
        const long double fb = naive_sse(data, b);

        // add: the first point of b joins a
        std::vector<std::size_t> grown = a;
        grown.push_back(b.front());
        check(add_delta(sa, data.row(b.front())), naive_sse(data, grown) - fa);
        // remove: the last point of a leaves a (a has at least two members)
        std::vector<std::size_t> shrunk(a.begin(), a.end() - 1);
        check(*remove_delta(sa, data.row(a.back())), naive_sse(data, shrunk) - fa);
        // merge
        check(merge_delta(sa, sb), naive_sse(data, order) - fa - fb);
    }
    const double secs = seconds_since(t0);
    return pass_if(bad == 0, fmt("%d mismatches in %d cases x 3 deltas, worst relative %.2e, %.1f s", bad, kCases,
                                 worst, secs));
}

Verdict criterion6() {
    struct Case {
        std::size_t m1, m2;
        double factor;
    };
    const Case cases[] = {{5, 5, 1.5}, {4, 4, 5.0 / 3.0}, {3, 5, 9.0 / 5.0}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        // Point at distance 1 from the source centroid; destination centroid at squared distance r.
        auto gain = [&](double r) {
            const ClusterStats src{c.m1, {0.0}, 0.0};
            const ClusterStats dst{c.m2, {1.0 + std::sqrt(r)}, 0.0};
            const double p[] = {1.0};
            return *transfer_gain(src, dst, p);
        };
        const double below = gain(c.factor * (1 - 1e-9));
        const double above = gain(c.factor * (1 + 1e-9));
        const bool flip = below < 0 && above > 0;
        ok = ok && flip && std::abs(transfer_threshold(c.m1, c.m2) - c.factor) <= 1e-12;
        detail += fmt("m1=%zu m2=%zu factor %.6f: gain %.2e / %.2e; ", c.m1, c.m2, c.factor, below, above);
    }
    return pass_if(ok, detail);
}

Verdict criterion7() {
    const auto q10 = choose_q(10);
    const auto q25 = choose_q(25);
    return pass_if(q10 == 4 && q25 == 6, fmt("choose_q(10)=%zu, choose_q(25)=%zu", q10, q25));
}

Verdict criterion8() {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(0, 10);
    int found = 0;
    bool monotone = true;
    double worst_rise = 0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 1 + gen() % 3;
        const std::size_t k = 2 + gen() % 2;
        const std::size_t n = 4 + gen() % 9;
        std::vector<double> coords(n * d);
        for (auto& v : coords) {
            v = u(gen);
        }
        const Dataset data(n, d, std::move(coords));
        const double opt = exhaustive_optimum(data, k).objective;
        double best = INFINITY;
        for (std::uint64_t r = 0; r < 200; ++r) {
            RandomSource rng = RandomSource::derive(1000 + t, r);
            std::vector<double> traj;
            const auto s = improve(data, construction_start(data, k, true, rng), ImproveConfig{}, &traj);
            for (std::size_t j = 1; j < traj.size(); ++j) {
                worst_rise = std::max(worst_rise, traj[j] - traj[j - 1]);
                monotone = monotone && traj[j] <= traj[j - 1] + 1e-9;
            }
            best = std::min(best, s.objective);
        }
        found += std::abs(best - opt) <= 1e-9 * std::max(1.0, opt);
    }

    const auto inst = make_two_squares(0.25);
    const Assignment squares{0, 0, 0, 0, 1, 1, 1, 1};
    const auto fixed = solution_from_assignment(inst.dataset, squares, 2);
    const auto lloyd_res = lloyd(inst.dataset, fixed.centers(), 1000);
    const auto after = phase3_descent(inst.dataset, lloyd_res.solution);
    const bool escapes = lloyd_res.solution.labels == squares && after.objective < lloyd_res.solution.objective;

    return pass_if(found >= 95 && monotone && escapes,
                   fmt("%d/100 optima found (floor 95); trajectories %s (largest step %+.1e); two-squares Lloyd "
                       "fixed point %.4f -> transfers %.4f",
                       found, monotone ? "monotone" : "NOT monotone", worst_rise, lloyd_res.solution.objective,
                       after.objective));
}

std::vector<std::vector<double>> sorted_rows(const CenterSet& c) {
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < c.size(); ++j) {
        rows.emplace_back(c.row(j).begin(), c.row(j).end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

Verdict criterion9() {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(-50, 50);
    int same = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + gen() % 59;
        const std::size_t k = 1 + gen() % n;
        const std::size_t d = 1 + gen() % 4;
        std::vector<double> coords(n * d);
        for (auto& v : coords) {
            v = u(gen);
        }
        const Dataset data(n, d, std::move(coords));
        RandomSource a(t);
        RandomSource b(t);
        same += sorted_rows(merging_start(data, k, AlphaRule(1.0), a)) ==
                sorted_rows(merging_start_basic(data, k, AlphaRule(1.0), b));
    }
    return pass_if(same == 200, fmt("%d/200 instances with identical center sets", same));
}

std::string data_dir() {
    const char* env = std::getenv("MSSC_DATA_DIR");
    return env && *env ? env : MSSC_TEST_DATA_DIR;
}

Verdict criterion10() {
    const std::string dir = data_dir();
    std::vector<std::pair<ManifestEntry, std::string>> medium;
    for (const char* name : {"tsplib1060", "tsplib3038"}) {
        const auto entry = *manifest_entry(name);
        if (auto path = find_dataset_file(dir, entry)) {
            medium.emplace_back(entry, *path);
        }
    }
    if (medium.size() < 2) {
        return {Outcome::skip, "tsplib1060/tsplib3038 coordinate files not found in '" + dir +
                                   "' (set MSSC_DATA_DIR); medium-instance gate not evaluated"};
    }
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    double worst = -INFINITY;
    std::string detail;
    for (const auto& [entry, path] : medium) {
        const auto data = load_dataset(path, entry.format, entry.name);
        for (std::size_t k : {10, 15, 20, 25}) {
            RunConfig cfg;
            cfg.k = k;
            cfg.starter = StarterConfig{StarterKind::merging, AlphaRule(1.5), true};
            cfg.restarts = 200;
            cfg.seed = 10;
            cfg.threads = worker_count();
            const auto report = run_multistart(data, cfg);
            const double rel = report.rel_error_pct.value_or(INFINITY);
            worst = std::max(worst, rel);
            ok = ok && rel <= 0.5;
            detail += fmt("%s k=%zu %+.3f%%; ", entry.name.c_str(), k, rel);
        }
    }

    // Large instances: load and run one restart each, when present.
    for (const char* name : {"letter", "kegg", "pla85900"}) {
        const auto entry = *manifest_entry(name);
        const auto path = find_dataset_file(dir, entry);
        if (!path) {
            detail += fmt("%s absent; ", name);
            continue;
        }
        const auto data = load_dataset(*path, entry.format, entry.name);
        RunConfig cfg;
        cfg.k = 10;
        cfg.restarts = 1;
        const auto s = run_single(data, cfg, 0);
        const double brute = brute_objective(data, s.labels, 10);
        const bool single_ok = std::abs(brute - s.objective) <= 1e-9 * brute;
        ok = ok && single_ok;
        detail += fmt("%s single restart %.5e %s; ", name, s.objective, single_ok ? "consistent" : "INCONSISTENT");
    }
    return pass_if(ok, detail + fmt("worst %+.3f%% (limit 0.5%%), %.0f s", worst, seconds_since(t0)));
}

}

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "two-squares analytic optimum", criterion1},
        {2, "two-squares construction hit rate", criterion2},
        {3, "ruspini75 best-known reproduction",
         [] { return best_known_reproduction("ruspini75", 1e-5, 60.0); }},
        {4, "fisher best-known reproduction", [] { return best_known_reproduction("fisher", 1e-4, 120.0); }},
        {5, "incremental deltas vs brute force", criterion5},
        {6, "transfer threshold factors", criterion6},
        {7, "q-rule", criterion7},
        {8, "exhaustive-oracle properties", criterion8},
        {9, "efficient vs basic merging", criterion9},
        {10, "medium instances vs best known", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {Outcome::fail, std::string("exception: ") + e.what()};
        }
        const char* tag = v.outcome == Outcome::pass ? "PASS" : v.outcome == Outcome::fail ? "FAIL" : "SKIP";
        std::printf("%s criterion %d (%s): %s\n", tag, c.id, c.title, v.detail.c_str());
        std::fflush(stdout);
        failures += v.outcome == Outcome::fail;
    }
    return failures == 0 ? 0 : 1;
}
