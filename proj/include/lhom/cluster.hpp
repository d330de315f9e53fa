#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lhom/complex.hpp"
#include "lhom/gf.hpp"
#include "lhom/local_homology.hpp"
#include "lhom/parallel.hpp"
#include "lhom/simplex.hpp"
#include "lhom/vr.hpp"

namespace lhom {

using Edge = std::pair<VertexId, VertexId>;

/// Local betti profiles of every vertex and edge of a complex, for degrees
/// 0..max_degree.
struct ProfileTable {
    int max_degree = 0;
    std::unordered_map<VertexId, BettiProfile> vertex_profiles;
    std::map<Edge, BettiProfile> edge_profiles;

    const BettiProfile& vertex(VertexId v) const {
        auto it = vertex_profiles.find(v);
        if (it == vertex_profiles.end())
            throw std::logic_error("ProfileTable: no profile for vertex " + std::to_string(v));
        return it->second;
    }

    const BettiProfile& edge(VertexId v, VertexId w) const {
        auto it = edge_profiles.find(std::minmax(v, w));
        if (it == edge_profiles.end())
            throw std::logic_error("ProfileTable: no profile for edge {" + std::to_string(v) +
                                   "," + std::to_string(w) + "}");
        return it->second;
    }
};

/// Compute the profile of every 0- and 1-simplex, distributing the per-simplex
/// work over the given number of workers. Output does not depend on workers.
inline ProfileTable compute_profile_table(const SimplicialComplex& k_complex, int max_degree,
                                          const PrimeField& field, std::size_t workers = 1) {
    std::vector<const Simplex*> targets;
    for (const Simplex& s : k_complex.simplices()) {
        if (s.cardinality() > 2) break;  // complex order is cardinality-major
        targets.push_back(&s);
    }

    std::vector<BettiProfile> profiles = parallel_map<BettiProfile>(
        targets.size(), workers,
        [&](std::size_t i) { return local_profile(k_complex, *targets[i], max_degree, field); });

    ProfileTable table;
    table.max_degree = max_degree;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Simplex& s = *targets[i];
        if (s.cardinality() == 1)
            table.vertex_profiles.emplace(s[0], std::move(profiles[i]));
        else
            table.edge_profiles.emplace(Edge{s[0], s[1]}, std::move(profiles[i]));
    }
    return table;
}

/// Edges whose own profile equals both endpoint profiles.
inline std::vector<Edge> kept_edges(const ProfileTable& table,
                                    const SimplicialComplex& k_complex) {
    std::vector<Edge> kept;
    for (const auto& [e, profile] : table.edge_profiles) {
        if (!k_complex.contains(Simplex{e.first, e.second}))
            throw std::logic_error("ProfileTable: edge not in complex");
        if (profile == table.vertex(e.first) && profile == table.vertex(e.second))
            kept.push_back(e);
    }
    return kept;
}

/// Connected components of an undirected graph, via depth-first search.
/// Components are ordered by smallest member; members are ascending.
inline std::vector<std::vector<VertexId>> connected_components(
    const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
    std::unordered_map<VertexId, std::vector<VertexId>> adjacency;
    for (VertexId v : vertices) adjacency.try_emplace(v);
    for (const Edge& e : edges) {
        if (!adjacency.count(e.first) || !adjacency.count(e.second))
            throw std::invalid_argument("connected_components: edge endpoint not in vertex set");
        adjacency[e.first].push_back(e.second);
        adjacency[e.second].push_back(e.first);
    }

    std::vector<VertexId> order(vertices);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    std::unordered_set<VertexId> visited;
    std::vector<std::vector<VertexId>> components;
    for (VertexId root : order) {
        if (visited.count(root)) continue;
        std::vector<VertexId> component;
        std::vector<VertexId> stack{root};
        visited.insert(root);
        while (!stack.empty()) {
            VertexId cur = stack.back();
            stack.pop_back();
            component.push_back(cur);
            for (VertexId next : adjacency[cur])
                if (visited.insert(next).second) stack.push_back(next);
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

struct Cluster {
    std::vector<VertexId> members;
    BettiProfile profile;
    bool singleton = false;
};

struct Clustering {
    std::vector<Cluster> clusters;
    ProfileTable table;
    std::vector<Edge> kept;
    std::size_t complex_size = 0;
};

/// Cluster a point cloud by local homology at scale eps: vertices are joined
/// when a path of edges preserves their betti profile. The complex is built
/// one dimension above max_degree so that degree-max_degree boundaries are
/// complete on every star.
inline Clustering cluster(const MetricCloud& cloud, double eps, int max_degree,
                          const PrimeField& field, std::size_t workers = 1) {
    if (max_degree < 0) throw std::domain_error("cluster: max_degree must be >= 0");
    const SimplicialComplex complex = build_vr(cloud, eps, max_degree + 1);

    Clustering out;
    out.complex_size = complex.size();
    out.table = compute_profile_table(complex, max_degree, field, workers);
    out.kept = kept_edges(out.table, complex);

    std::vector<VertexId> vertices;
    vertices.reserve(cloud.size());
    for (std::size_t v = 0; v < cloud.size(); ++v)
        vertices.push_back(static_cast<VertexId>(v));

    for (std::vector<VertexId>& members : connected_components(vertices, out.kept)) {
        Cluster c;
        c.profile = out.table.vertex(members.front());
        c.singleton = members.size() == 1;
        c.members = std::move(members);
        out.clusters.push_back(std::move(c));
    }
    return out;
}

}  // namespace lhom
