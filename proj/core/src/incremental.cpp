#include "mssc/incremental.hpp"

#include "mssc/error.hpp"

namespace mssc {

namespace {

void check_point(const ClusterStats& stats, Point point) {
    if (point.size() != stats.centroid.size()) {
        throw InvalidInput("point dimension does not match cluster dimension");
    }
}

}

double add_delta(const ClusterStats& stats, Point point) {
    if (stats.size == 0) {
        throw InvalidInput("add_delta is undefined for an empty cluster");
    }
    check_point(stats, point);
    const double m = static_cast<double>(stats.size);
    return m / (m + 1.0) * squared_distance(point, stats.centroid);
}

std::optional<double> remove_delta(const ClusterStats& stats, Point point) {
    if (stats.size == 0) {
        throw InvalidInput("remove_delta is undefined for an empty cluster");
    }
    check_point(stats, point);
    if (stats.size == 1) {
        return std::nullopt;
    }
    const double m = static_cast<double>(stats.size);
    return -(m / (m - 1.0) * squared_distance(point, stats.centroid));
}

double merge_delta(const ClusterStats& a, const ClusterStats& b) {
    if (a.size == 0 || b.size == 0) {
        throw InvalidInput("merge_delta is undefined for an empty cluster");
    }
    if (a.centroid.size() != b.centroid.size()) {
        throw InvalidInput("cluster dimensions differ");
    }
    const double ma = static_cast<double>(a.size);
    const double mb = static_cast<double>(b.size);
    return (ma * mb) / (ma + mb) * squared_distance(a.centroid, b.centroid);
}

MergedCenter merge_centers(const ClusterStats& a, const ClusterStats& b) {
    if (a.size == 0 || b.size == 0) {
        throw InvalidInput("merge_centers is undefined for an empty cluster");
    }
    if (a.centroid.size() != b.centroid.size()) {
        throw InvalidInput("cluster dimensions differ");
    }
    const double ma = static_cast<double>(a.size);
    const double mb = static_cast<double>(b.size);
    const double total = ma + mb;
    MergedCenter out{std::vector<double>(a.centroid.size()), a.size + b.size};
    for (std::size_t c = 0; c < out.centroid.size(); ++c) {
        out.centroid[c] = (ma * a.centroid[c] + mb * b.centroid[c]) / total;
    }
    return out;
}

void apply_add(ClusterStats& stats, Point point) {
    if (stats.size == 0) {
        stats.centroid.assign(point.begin(), point.end());
        stats.size = 1;
        stats.wss = 0;
        return;
    }
    stats.wss += add_delta(stats, point);
    const double m1 = static_cast<double>(stats.size + 1);
    for (std::size_t c = 0; c < stats.centroid.size(); ++c) {
        stats.centroid[c] += (point[c] - stats.centroid[c]) / m1;
    }
    ++stats.size;
}

void apply_remove(ClusterStats& stats, Point point) {
    auto delta = remove_delta(stats, point);
    if (!delta) {
        throw InvalidInput("cannot remove the only member of a cluster");
    }
    stats.wss += *delta;
    if (stats.wss < 0) {
        stats.wss = 0;
    }
    const double m1 = static_cast<double>(stats.size - 1);
    for (std::size_t c = 0; c < stats.centroid.size(); ++c) {
        stats.centroid[c] -= (point[c] - stats.centroid[c]) / m1;
    }
    --stats.size;
}

void apply_merge(ClusterStats& stats, const ClusterStats& other) {
    const double delta = merge_delta(stats, other);
    auto merged = merge_centers(stats, other);
    stats.wss += other.wss + delta;
    stats.centroid = std::move(merged.centroid);
    stats.size = merged.size;
}

}
