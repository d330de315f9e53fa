#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhom {

/// Index of a point in the originating cloud. Dense 0..n-1 within a complex.
using VertexId = std::int32_t;

/// A finite set of vertices kept in strictly ascending order.
/// Cardinality c corresponds to dimension c - 1.
class Simplex {
public:
    Simplex(std::initializer_list<VertexId> vertices)
        : Simplex(std::vector<VertexId>(vertices)) {}

    explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty())
            throw std::invalid_argument("Simplex: vertex list must be non-empty");
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i] < 0)
                throw std::invalid_argument("Simplex: vertex ids must be non-negative");
            if (i > 0 && vertices_[i - 1] >= vertices_[i])
                throw std::invalid_argument("Simplex: vertices must be strictly ascending");
        }
    }

    std::size_t cardinality() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// True iff every vertex of this simplex is a vertex of other.
    bool is_face_of(const Simplex& other) const {
        return std::includes(other.vertices_.begin(), other.vertices_.end(),
                             vertices_.begin(), vertices_.end());
    }

    /// The facet obtained by dropping the i-th vertex. Requires cardinality >= 2.
    Simplex facet_without(std::size_t i) const {
        if (vertices_.size() < 2)
            throw std::logic_error("Simplex::facet_without: no facets of a vertex");
        std::vector<VertexId> rest;
        rest.reserve(vertices_.size() - 1);
        for (std::size_t j = 0; j < vertices_.size(); ++j)
            if (j != i) rest.push_back(vertices_[j]);
        return Simplex(std::move(rest));
    }

    /// Vertices of this simplex that are not in other. May be empty.
    std::vector<VertexId> difference(const Simplex& other) const {
        std::vector<VertexId> out;
        std::set_difference(vertices_.begin(), vertices_.end(),
                            other.vertices_.begin(), other.vertices_.end(),
                            std::back_inserter(out));
        return out;
    }

    Simplex union_with(const Simplex& other) const {
        std::vector<VertexId> out;
        out.reserve(vertices_.size() + other.vertices_.size());
        std::set_union(vertices_.begin(), vertices_.end(),
                       other.vertices_.begin(), other.vertices_.end(),
                       std::back_inserter(out));
        return Simplex(std::move(out));
    }

    bool disjoint_from(const Simplex& other) const {
        std::size_t i = 0, j = 0;
        while (i < vertices_.size() && j < other.vertices_.size()) {
            if (vertices_[i] == other.vertices_[j]) return false;
            if (vertices_[i] < other.vertices_[j]) ++i; else ++j;
        }
        return true;
    }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }

    /// Complex order: by cardinality first, then lexicographic on the vertex tuple.
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.vertices_.size() != b.vertices_.size())
            return a.vertices_.size() < b.vertices_.size();
        return a.vertices_ < b.vertices_;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vertices_[i]);
        }
        s += "}";
        return s;
    }

private:
    std::vector<VertexId> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    return os << s.to_string();
}

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        // FNV-1a over the vertex ids
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices()) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace lhom
