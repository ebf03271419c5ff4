#include "mssc/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mssc/error.hpp"

namespace mssc {

namespace {

void check_finite(std::span<const double> coords, const char* what) {
    for (double v : coords) {
        if (!std::isfinite(v)) {
            throw InvalidInput(std::string(what) + " contains a non-finite coordinate");
        }
    }
}

std::vector<double> flatten(const std::vector<std::vector<double>>& rows, std::size_t& d) {
    d = rows.empty() ? 0 : rows.front().size();
    std::vector<double> out;
    out.reserve(rows.size() * d);
    for (const auto& r : rows) {
        if (r.size() != d) {
            throw InvalidInput("rows have inconsistent lengths");
        }
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

}

Dataset::Dataset(std::size_t n, std::size_t d, std::vector<double> coords, std::string name)
    : n_(n), d_(d), coords_(std::move(coords)), name_(std::move(name)) {
    if (n_ == 0 || d_ == 0) {
        throw InvalidInput("dataset must have at least one point and one dimension");
    }
    if (coords_.size() != n_ * d_) {
        throw InvalidInput("dataset coordinate count does not match n*d");
    }
    check_finite(coords_, "dataset");
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows, std::string name) {
    std::size_t d = 0;
    auto flat = flatten(rows, d);
    return Dataset(rows.size(), d, std::move(flat), std::move(name));
}

Dataset Dataset::subset(std::span<const std::size_t> rows, std::string name) const {
    std::vector<double> out;
    out.reserve(rows.size() * d_);
    for (auto i : rows) {
        if (i >= n_) {
            throw InvalidInput("subset row out of range");
        }
        auto r = row(i);
        out.insert(out.end(), r.begin(), r.end());
    }
    return Dataset(rows.size(), d_, std::move(out), std::move(name));
}

CenterSet::CenterSet(std::size_t k, std::size_t d, std::vector<double> coords)
    : k_(k), d_(d), coords_(std::move(coords)) {
    if (k_ == 0 || d_ == 0) {
        throw InvalidInput("center set must have at least one center and one dimension");
    }
    if (coords_.size() != k_ * d_) {
        throw InvalidInput("center coordinate count does not match k*d");
    }
    check_finite(coords_, "center set");
}

CenterSet CenterSet::from_rows(const std::vector<std::vector<double>>& rows) {
    std::size_t d = 0;
    auto flat = flatten(rows, d);
    return CenterSet(rows.size(), d, std::move(flat));
}

CenterSet Solution::centers() const {
    const std::size_t d = stats.empty() ? 0 : stats.front().centroid.size();
    std::vector<double> flat;
    flat.reserve(stats.size() * d);
    for (const auto& s : stats) {
        flat.insert(flat.end(), s.centroid.begin(), s.centroid.end());
    }
    return CenterSet(stats.size(), d, std::move(flat));
}

double squared_distance(Point a, Point b) noexcept {
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double delta = a[i] - b[i];
        sum += delta * delta;
    }
    return sum;
}

std::size_t nearest_center(Point point, const CenterSet& centers) noexcept {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < centers.size(); ++j) {
        const double dist = squared_distance(point, centers.row(j));
        if (dist < best_dist) {
            best_dist = dist;
            best = j;
        }
    }
    return best;
}

namespace {

void check_dims(const Dataset& data, const CenterSet& centers) {
    if (centers.dim() != data.dim()) {
        throw InvalidInput("center dimension " + std::to_string(centers.dim()) +
                           " does not match dataset dimension " + std::to_string(data.dim()));
    }
}

}

double sse_objective(const Dataset& data, const CenterSet& centers) {
    check_dims(data, centers);
    double total = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < centers.size(); ++j) {
            best = std::min(best, squared_distance(data.row(i), centers.row(j)));
        }
        total += best;
    }
    return total;
}

Assignment assign(const Dataset& data, const CenterSet& centers) {
    check_dims(data, centers);
    Assignment labels(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        labels[i] = nearest_center(data.row(i), centers);
    }
    return labels;
}

std::vector<double> centroid(const Dataset& data, std::span<const std::size_t> members) {
    if (members.empty()) {
        throw EmptyClusterError(0);
    }
    std::vector<double> out(data.dim(), 0.0);
    for (auto i : members) {
        auto r = data.row(i);
        for (std::size_t c = 0; c < out.size(); ++c) {
            out[c] += r[c];
        }
    }
    const double m = static_cast<double>(members.size());
    for (auto& v : out) {
        v /= m;
    }
    return out;
}

Solution solution_from_assignment(const Dataset& data, const Assignment& labels, std::size_t k) {
    if (labels.size() != data.size()) {
        throw InvalidInput("assignment length does not match dataset size");
    }
    if (k == 0) {
        throw InvalidInput("k must be at least 1");
    }
    const std::size_t d = data.dim();
    Solution sol;
    sol.labels = labels;
    sol.stats.assign(k, ClusterStats{0, std::vector<double>(d, 0.0), 0.0});

    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= k) {
            throw InvalidInput("label " + std::to_string(labels[i]) + " of point " + std::to_string(i) +
                               " is out of range");
        }
        auto& s = sol.stats[labels[i]];
        ++s.size;
        auto r = data.row(i);
        for (std::size_t c = 0; c < d; ++c) {
            s.centroid[c] += r[c];
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        auto& s = sol.stats[j];
        if (s.size == 0) {
            throw EmptyClusterError(j);
        }
        const double m = static_cast<double>(s.size);
        for (auto& v : s.centroid) {
            v /= m;
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto& s = sol.stats[labels[i]];
        s.wss += squared_distance(data.row(i), s.centroid);
    }
    for (const auto& s : sol.stats) {
        sol.objective += s.wss;
    }
    return sol;
}

}
