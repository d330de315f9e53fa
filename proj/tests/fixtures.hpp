#pragma once

// Hand fixtures shared across the test suites, plus converters between the
// library's types and the oracle namespace's plain containers.

#include <cmath>
#include <string>
#include <vector>

#include "lhom/lhom.hpp"
#include "oracles.hpp"

namespace fixtures {

inline lhom::Simplex to_lhom(const oracles::VSimplex& s) {
    std::vector<lhom::VertexId> ids(s.begin(), s.end());
    return lhom::Simplex(std::move(ids));
}

inline lhom::SimplicialComplex to_lhom(const oracles::VComplex& k_complex) {
    std::vector<lhom::Simplex> simplices;
    for (const oracles::VSimplex& s : k_complex) simplices.push_back(to_lhom(s));
    return lhom::SimplicialComplex::from_simplices(std::move(simplices));
}

inline oracles::VSimplex to_oracle(const lhom::Simplex& s) {
    return oracles::VSimplex(s.vertices().begin(), s.vertices().end());
}

inline oracles::VComplex to_oracle(const lhom::SimplicialComplex& k_complex) {
    oracles::VComplex out;
    for (const lhom::Simplex& s : k_complex.simplices()) out.insert(to_oracle(s));
    return out;
}

/// k triangles glued along the common edge {0,1}; third vertices 2..k+1.
inline lhom::SimplicialComplex fan(int k) {
    std::vector<lhom::Simplex> generators;
    for (int i = 0; i < k; ++i)
        generators.push_back(lhom::Simplex{0, 1, static_cast<lhom::VertexId>(i + 2)});
    return lhom::SimplicialComplex::closure_of(generators);
}

/// Cycle graph C_n as a 1-dimensional complex.
inline lhom::SimplicialComplex cycle(int n) {
    std::vector<lhom::Simplex> generators;
    for (int i = 0; i < n; ++i) {
        const auto a = static_cast<lhom::VertexId>(i);
        const auto b = static_cast<lhom::VertexId>((i + 1) % n);
        generators.push_back(a < b ? lhom::Simplex{a, b} : lhom::Simplex{b, a});
    }
    return lhom::SimplicialComplex::closure_of(generators);
}

/// Path graph with n vertices (n-1 edges).
inline lhom::SimplicialComplex path(int n) {
    std::vector<lhom::Simplex> generators;
    if (n == 1) generators.push_back(lhom::Simplex{0});
    for (int i = 0; i + 1 < n; ++i)
        generators.push_back(
            lhom::Simplex{static_cast<lhom::VertexId>(i), static_cast<lhom::VertexId>(i + 1)});
    return lhom::SimplicialComplex::closure_of(generators);
}

/// Points on the z=0 great circle of the unit 2-sphere, at the given angles.
inline lhom::MetricCloud great_circle_cloud(const std::vector<double>& angles_deg) {
    const double pi = std::acos(-1.0);
    std::vector<std::vector<double>> points;
    for (double deg : angles_deg) {
        const double t = deg * pi / 180.0;
        points.push_back({std::cos(t), std::sin(t), 0.0});
    }
    return lhom::MetricCloud::from_points(std::move(points), lhom::Metric::geodesic_sphere);
}

/// Five points spaced 72 degrees apart on a great circle; the neighborhood
/// graph at eps=80 is the 5-cycle.
inline lhom::MetricCloud pentagon_cloud() {
    return great_circle_cloud({0.0, 72.0, 144.0, 216.0, 288.0});
}

/// A WordCloud over the pentagon, for pipeline tests.
inline lhom::WordCloud pentagon_word_cloud() {
    lhom::WordEmbedding emb;
    const std::vector<std::string> words = {"alpha", "bravo", "charlie", "delta", "echo"};
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const double t = 72.0 * static_cast<double>(i) * pi / 180.0;
        emb.insert(words[i], {std::cos(t), std::sin(t), 0.0});
    }
    return lhom::normalize_to_sphere(emb, words);
}

inline lhom::MetricCloud cloud_of(const std::vector<std::vector<double>>& points) {
    return lhom::MetricCloud::from_points(points, lhom::Metric::geodesic_sphere);
}

inline std::vector<std::vector<double>> distance_matrix(const lhom::MetricCloud& cloud) {
    std::vector<std::vector<double>> d(cloud.size(), std::vector<double>(cloud.size(), 0.0));
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = 0; j < cloud.size(); ++j)
            if (i != j) d[i][j] = cloud.distance(i, j);
    return d;
}

}  // namespace fixtures
