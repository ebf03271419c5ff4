#include <algorithm>
#include <cmath>
#include <numeric>

#include "mssc/error.hpp"
#include "mssc/starters.hpp"

namespace mssc {

std::size_t choose_q(std::size_t k) {
    if (k < 1) {
        throw InvalidInput("choose_q needs k >= 1");
    }
    return static_cast<std::size_t>(std::floor(1.3 * std::sqrt(static_cast<double>(k))));
}

std::vector<std::size_t> allocate_centers(std::span<const std::size_t> part_sizes, std::span<const double> part_wss,
                                          std::size_t k) {
    if (part_sizes.size() != part_wss.size()) {
        throw InvalidInput("part sizes and wss differ in length");
    }
    const std::size_t total = std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
    if (total < k) {
        throw InvalidInput("parts hold fewer points than centers");
    }
    const std::size_t q = part_sizes.size();
    std::vector<std::size_t> alloc(q, 0);
    std::size_t sum = 0;
    for (std::size_t s = 0; s < q; ++s) {
        if (part_sizes[s] == 0) {
            continue;
        }
        const double share = static_cast<double>(k) * static_cast<double>(part_sizes[s]) / static_cast<double>(total);
        alloc[s] = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(share)), 1, part_sizes[s]);
        sum += alloc[s];
    }

    auto per_center = [&](std::size_t s) { return part_wss[s] / static_cast<double>(alloc[s]); };
    while (sum > k) {
        std::size_t pick = q;
        for (std::size_t s = 0; s < q; ++s) {
            if (alloc[s] > 1 && (pick == q || per_center(s) < per_center(pick))) {
                pick = s;
            }
        }
        if (pick == q) {
            throw InvalidInput("cannot give every part a center with only " + std::to_string(k) + " centers");
        }
        --alloc[pick];
        --sum;
    }
    while (sum < k) {
        std::size_t pick = q;
        for (std::size_t s = 0; s < q; ++s) {
            if (alloc[s] < part_sizes[s] && (pick == q || per_center(s) > per_center(pick))) {
                pick = s;
            }
        }
        ++alloc[pick];
        ++sum;
    }
    return alloc;
}

CenterSet separation_start(const Dataset& data, std::size_t k, bool grasp, RandomSource& rng,
                           const ImproveConfig& improve_config) {
    if (k < 1 || k > data.size()) {
        throw InvalidInput("k must satisfy 1 <= k <= n");
    }
    if (k == 1) {
        std::vector<std::size_t> all(data.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        return CenterSet(1, data.dim(), centroid(data, all));
    }
    const std::size_t q = choose_q(k);
    if (q < 2 || q >= k) {
        return construction_start(data, k, grasp, rng).centers();
    }

    const Solution coarse = improve(data, construction_start(data, q, grasp, rng), improve_config);
    std::vector<std::vector<std::size_t>> parts(q);
    for (std::size_t i = 0; i < data.size(); ++i) {
        parts[coarse.labels[i]].push_back(i);
    }
    std::vector<std::size_t> sizes(q);
    std::vector<double> wss(q);
    for (std::size_t s = 0; s < q; ++s) {
        sizes[s] = parts[s].size();
        wss[s] = coarse.stats[s].wss;
    }
    const auto alloc = allocate_centers(sizes, wss, k);

    std::vector<double> flat;
    flat.reserve(k * data.dim());
    for (std::size_t s = 0; s < q; ++s) {
        if (alloc[s] == 0) {
            continue;
        }
        if (alloc[s] == 1) {
            const auto c = centroid(data, parts[s]);
            flat.insert(flat.end(), c.begin(), c.end());
            continue;
        }
        const Dataset sub = data.subset(parts[s]);
        if (alloc[s] == sizes[s]) {
            flat.insert(flat.end(), sub.coords().begin(), sub.coords().end());
            continue;
        }
        const Solution local = improve(sub, construction_start(sub, alloc[s], grasp, rng), improve_config);
        const auto centers = local.centers();
        flat.insert(flat.end(), centers.coords().begin(), centers.coords().end());
    }
    return CenterSet(k, data.dim(), std::move(flat));
}

}
