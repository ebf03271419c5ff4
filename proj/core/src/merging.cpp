#include <algorithm>
#include <cmath>

#include "mssc/error.hpp"
#include "mssc/incremental.hpp"
#include "mssc/starters.hpp"

namespace mssc {

namespace {

void check_k(const Dataset& data, std::size_t k) {
    if (k < 1 || k > data.size()) {
        throw InvalidInput("k must satisfy 1 <= k <= n (k=" + std::to_string(k) +
                           ", n=" + std::to_string(data.size()) + ")");
    }
}

ClusterStats singleton(Point p) {
    return ClusterStats{1, std::vector<double>(p.begin(), p.end()), 0.0};
}

}

MergingProcess::MergingProcess(const Dataset& data, AlphaRule alpha, RandomSource& rng)
    : alpha_(alpha),
      rng_(&rng),
      best_cost_(data.size(), std::numeric_limits<double>::infinity()),
      partner_(data.size(), npos),
      live_(data.size()),
      position_(data.size()) {
    const std::size_t n = data.size();
    clusters_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        clusters_.push_back(singleton(data.row(i)));
        live_[i] = i;
        position_[i] = i;
    }

    // Initial pass. A zero-cost partner has the same centroid and is absorbed on the spot;
    // the scan for that cluster then restarts from the head of the list. Partners found at
    // earlier positions are always nonzero, so an absorbed cluster sits after `p` and the
    // swap-with-last removal never disturbs clusters already processed.
    for (std::size_t p = 0; p < live_.size(); ++p) {
        const std::size_t id = live_[p];
        bool absorbed = true;
        while (absorbed) {
            absorbed = false;
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_id = npos;
            for (std::size_t q = 0; q < live_.size(); ++q) {
                if (q == p) {
                    continue;
                }
                const std::size_t other = live_[q];
                const double cost = merge_delta(clusters_[id], clusters_[other]);
                if (cost == 0) {
                    apply_merge(clusters_[id], clusters_[other]);
                    remove(other);
                    for (std::size_t r = 0; r < p; ++r) {
                        const std::size_t c = live_[r];
                        if (partner_[c] == id || partner_[c] == other) {
                            recompute(c);
                        }
                    }
                    absorbed = true;
                    break;
                }
                if (cost < best) {
                    best = cost;
                    best_id = other;
                }
            }
            if (!absorbed) {
                best_cost_[id] = best;
                partner_[id] = best_id;
            }
        }
    }
}

void MergingProcess::remove(std::size_t id) {
    const std::size_t pos = position_[id];
    const std::size_t last = live_.back();
    live_[pos] = last;
    position_[last] = pos;
    live_.pop_back();
    position_[id] = npos;
}

void MergingProcess::recompute(std::size_t id) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_id = npos;
    for (std::size_t other : live_) {
        if (other == id) {
            continue;
        }
        const double cost = merge_delta(clusters_[id], clusters_[other]);
        if (cost < best) {
            best = cost;
            best_id = other;
        }
    }
    best_cost_[id] = best;
    partner_[id] = best_id;
}

void MergingProcess::step() {
    if (live_.size() < 2) {
        throw InvalidInput("cannot merge fewer than two clusters");
    }
    ReservoirSelector<std::size_t> selector(alpha_, *rng_);
    for (std::size_t id : live_) {
        selector.offer(id, best_cost_[id]);
    }
    const std::size_t keep = selector.selected();
    const std::size_t gone = partner_[keep];

    objective_ += merge_delta(clusters_[keep], clusters_[gone]);
    apply_merge(clusters_[keep], clusters_[gone]);
    remove(gone);

    for (std::size_t c : live_) {
        if (c == keep) {
            continue;
        }
        const double cost = merge_delta(clusters_[c], clusters_[keep]);
        if (cost < best_cost_[c]) {
            best_cost_[c] = cost;
            partner_[c] = keep;
        } else if (partner_[c] == keep || partner_[c] == gone) {
            recompute(c);
        }
    }
    recompute(keep);
}

void MergingProcess::run_until(std::size_t k) {
    while (live_.size() > k) {
        step();
    }
}

double MergingProcess::cache_error() const {
    double worst = 0;
    for (std::size_t id : live_) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t other : live_) {
            if (other != id) {
                best = std::min(best, merge_delta(clusters_[id], clusters_[other]));
            }
        }
        if (live_.size() < 2) {
            continue;
        }
        const double scale = std::max(1.0, std::abs(best));
        worst = std::max(worst, std::abs(best_cost_[id] - best) / scale);
        const double attained = merge_delta(clusters_[id], clusters_[partner_[id]]);
        worst = std::max(worst, std::abs(attained - best) / scale);
    }
    return worst;
}

CenterSet MergingProcess::centers() const {
    const std::size_t d = clusters_.front().centroid.size();
    std::vector<double> flat;
    flat.reserve(live_.size() * d);
    for (std::size_t id : live_) {
        const auto& c = clusters_[id].centroid;
        flat.insert(flat.end(), c.begin(), c.end());
    }
    return CenterSet(live_.size(), d, std::move(flat));
}

CenterSet merging_start(const Dataset& data, std::size_t k, AlphaRule alpha, RandomSource& rng) {
    check_k(data, k);
    MergingProcess process(data, alpha, rng);
    process.run_until(k);
    return process.centers();
}

CenterSet merging_start_basic(const Dataset& data, std::size_t k, AlphaRule alpha, RandomSource& rng) {
    check_k(data, k);
    std::vector<ClusterStats> list;
    list.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        list.push_back(singleton(data.row(i)));
    }

    struct Pair {
        std::size_t a;
        std::size_t b;
    };
    while (list.size() > k) {
        ReservoirSelector<Pair> selector(alpha, rng);
        bool zero = false;
        for (std::size_t a = 0; a < list.size() && !zero; ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                const double cost = merge_delta(list[a], list[b]);
                selector.offer(Pair{a, b}, cost);
                if (cost == 0) {
                    zero = true;
                    break;
                }
            }
        }
        const auto [a, b] = selector.selected();
        apply_merge(list[a], list[b]);
        list[b] = std::move(list.back());
        list.pop_back();
    }

    const std::size_t d = data.dim();
    std::vector<double> flat;
    flat.reserve(list.size() * d);
    for (const auto& c : list) {
        flat.insert(flat.end(), c.centroid.begin(), c.centroid.end());
    }
    return CenterSet(list.size(), d, std::move(flat));
}

}
