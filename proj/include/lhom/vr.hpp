#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lhom/complex.hpp"
#include "lhom/simplex.hpp"

namespace lhom {

enum class Metric { geodesic_sphere, euclidean };

constexpr double kUnitNormTolerance = 1e-9;

namespace detail {

inline double dot(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

inline bool is_unit(std::span<const double> x) {
    return std::abs(std::sqrt(dot(x, x)) - 1.0) <= kUnitNormTolerance;
}

}  // namespace detail

/// Angle between two unit vectors, in degrees: arccos of the dot product,
/// clamped to [-1, 1] so floating-point drift cannot produce NaN.
inline double geodesic_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::domain_error("geodesic_distance: dimension mismatch");
    if (!detail::is_unit(x) || !detail::is_unit(y))
        throw std::domain_error("geodesic_distance: inputs must be unit vectors");
    const double c = std::clamp(detail::dot(x, y), -1.0, 1.0);
    return std::acos(c) * 180.0 / std::acos(-1.0);
}

inline double euclidean_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::domain_error("euclidean_distance: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(acc);
}

/// A finite point cloud with a fixed metric. Geodesic clouds must consist of
/// unit vectors; distances are then angles in degrees.
class MetricCloud {
public:
    MetricCloud() = default;

    static MetricCloud from_points(std::vector<std::vector<double>> points, Metric metric) {
        MetricCloud cloud;
        cloud.metric_ = metric;
        cloud.dim_ = points.empty() ? 0 : points.front().size();
        cloud.coords_.reserve(points.size() * cloud.dim_);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].size() != cloud.dim_)
                throw std::invalid_argument("MetricCloud: point " + std::to_string(i) +
                                            " has mismatched dimension");
            cloud.coords_.insert(cloud.coords_.end(), points[i].begin(), points[i].end());
        }
        cloud.size_ = points.size();
        if (metric == Metric::geodesic_sphere) {
            for (std::size_t i = 0; i < cloud.size_; ++i)
                if (!detail::is_unit(cloud.point(i)))
                    throw std::domain_error("MetricCloud: point " + std::to_string(i) +
                                            " is not unit-norm");
        }
        return cloud;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::size_t dimension() const { return dim_; }
    Metric metric() const { return metric_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }

    double distance(std::size_t i, std::size_t j) const {
        return metric_ == Metric::geodesic_sphere ? geodesic_distance(point(i), point(j))
                                                  : euclidean_distance(point(i), point(j));
    }

private:
    std::vector<double> coords_;
    std::size_t size_ = 0;
    std::size_t dim_ = 0;
    Metric metric_ = Metric::geodesic_sphere;
};

namespace detail {

inline void validate_epsilon(const MetricCloud& cloud, double eps) {
    if (cloud.metric() == Metric::geodesic_sphere) {
        if (!(eps >= 0.0 && eps <= 180.0))
            throw std::domain_error("epsilon must be in [0, 180] degrees");
    } else if (!(eps >= 0.0)) {
        throw std::domain_error("epsilon must be >= 0");
    }
}

}  // namespace detail

/// Undirected graph with an edge {i, j} whenever distance(i, j) <= eps, i != j.
/// Neighbor lists are sorted ascending.
struct NeighborhoodGraph {
    std::vector<std::vector<VertexId>> neighbors;

    std::size_t vertex_count() const { return neighbors.size(); }

    bool has_edge(VertexId i, VertexId j) const {
        const auto& n = neighbors[static_cast<std::size_t>(i)];
        return std::binary_search(n.begin(), n.end(), j);
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (const auto& n : neighbors) total += n.size();
        return total / 2;
    }
};

inline NeighborhoodGraph neighborhood_graph(const MetricCloud& cloud, double eps) {
    detail::validate_epsilon(cloud, eps);
    NeighborhoodGraph g;
    g.neighbors.resize(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t j = i + 1; j < cloud.size(); ++j) {
            if (cloud.distance(i, j) <= eps) {
                g.neighbors[i].push_back(static_cast<VertexId>(j));
                g.neighbors[j].push_back(static_cast<VertexId>(i));
            }
        }
    }
    return g;
}

namespace detail {

/// Lower-neighbor expansion: tau's vertices are descending-inserted, and
/// candidates are neighbors common to all of them with strictly smaller ids,
/// so every clique is emitted exactly once.
inline void add_cofaces(const std::vector<VertexId>& tau,
                        const std::vector<VertexId>& candidates,
                        const NeighborhoodGraph& graph, std::size_t max_card,
                        std::vector<Simplex>& out) {
    out.push_back(Simplex(std::vector<VertexId>(tau.rbegin(), tau.rend())));
    if (tau.size() >= max_card) return;
    for (VertexId u : candidates) {
        std::vector<VertexId> extended = tau;
        extended.push_back(u);
        const auto& nu = graph.neighbors[static_cast<std::size_t>(u)];
        std::vector<VertexId> narrowed;
        for (VertexId w : candidates)
            if (w < u && std::binary_search(nu.begin(), nu.end(), w)) narrowed.push_back(w);
        add_cofaces(extended, narrowed, graph, max_card, out);
    }
}

}  // namespace detail

/// Vietoris-Rips complex at scale eps, truncated to dimension max_dim: the
/// clique complex of the eps-neighborhood graph.
inline SimplicialComplex build_vr(const MetricCloud& cloud, double eps, int max_dim) {
    if (max_dim < 0) throw std::domain_error("build_vr: max_dim must be >= 0");
    if (cloud.empty()) return SimplicialComplex();
    const NeighborhoodGraph graph = neighborhood_graph(cloud, eps);
    const auto max_card = static_cast<std::size_t>(max_dim) + 1;

    std::vector<Simplex> simplices;
    for (std::size_t v = 0; v < cloud.size(); ++v) {
        const auto& nv = graph.neighbors[v];
        std::vector<VertexId> lower(
            nv.begin(), std::lower_bound(nv.begin(), nv.end(), static_cast<VertexId>(v)));
        detail::add_cofaces({static_cast<VertexId>(v)}, lower, graph, max_card, simplices);
    }
    return SimplicialComplex::from_simplices(std::move(simplices));
}

}  // namespace lhom
