#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lhom/simplex.hpp"

namespace lhom {

/// A finite, face-closed collection of simplices with a fixed total order
/// (cardinality-major, lexicographic within each cardinality) and an eager
/// coface index. Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build from an explicit simplex list. Sorts and deduplicates, then
    /// verifies face closure; throws std::invalid_argument on a missing face.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices) {
        SimplicialComplex k;
        std::sort(simplices.begin(), simplices.end());
        simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
        k.adopt(std::move(simplices), /*verify_closure=*/true);
        return k;
    }

    /// Build the simplicial closure of the given generators: the generators
    /// together with all of their faces.
    static SimplicialComplex closure_of(const std::vector<Simplex>& generators) {
        std::unordered_map<Simplex, char, SimplexHash> seen;
        std::vector<Simplex> stack(generators.begin(), generators.end());
        std::vector<Simplex> all;
        while (!stack.empty()) {
            Simplex s = std::move(stack.back());
            stack.pop_back();
            if (seen.emplace(s, 1).second == false) continue;
            if (s.cardinality() >= 2)
                for (std::size_t i = 0; i < s.cardinality(); ++i)
                    stack.push_back(s.facet_without(i));
            all.push_back(std::move(s));
        }
        std::sort(all.begin(), all.end());
        SimplicialComplex k;
        k.adopt(std::move(all), /*verify_closure=*/false);
        return k;
    }

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }

    /// Dimension of the complex; -1 when empty.
    int dimension() const { return static_cast<int>(max_cardinality_) - 1; }

    /// All simplices in complex order.
    const std::vector<Simplex>& simplices() const { return simplices_; }

    bool contains(const Simplex& s) const { return index_.count(s) != 0; }

    /// Members with exactly c vertices, in complex order.
    std::span<const Simplex> simplices_of_card(std::size_t c) const {
        if (c == 0)
            throw std::domain_error("simplices_of_card: cardinality must be >= 1");
        if (c > max_cardinality_) return {};
        return std::span<const Simplex>(simplices_.data() + card_begin_[c],
                                        card_begin_[c + 1] - card_begin_[c]);
    }

    std::size_t vertex_count() const {
        return max_cardinality_ == 0 ? 0 : card_begin_[2] - card_begin_[1];
    }

    /// The star of tau: every member having tau as a face, tau included,
    /// in complex order. Throws std::domain_error if tau is not a member.
    std::vector<Simplex> star(const Simplex& tau) const {
        std::vector<std::uint32_t> idx = star_indices(tau);
        std::vector<Simplex> out;
        out.reserve(idx.size());
        for (std::uint32_t i : idx) out.push_back(simplices_[i]);
        return out;
    }

    /// The link of tau: members disjoint from tau whose union with tau is a
    /// member. Always a valid subcomplex. Throws std::domain_error if absent.
    SimplicialComplex link(const Simplex& tau) const {
        std::vector<std::uint32_t> idx = star_indices(tau);
        std::vector<Simplex> members;
        members.reserve(idx.size());
        for (std::uint32_t i : idx) {
            std::vector<VertexId> rest = simplices_[i].difference(tau);
            if (!rest.empty()) members.push_back(Simplex(std::move(rest)));
        }
        return from_simplices(std::move(members));
    }

    /// The d-skeleton: members of dimension <= d (cardinality <= d + 1).
    SimplicialComplex skeleton(int d) const {
        if (d < 0) throw std::domain_error("skeleton: dimension must be >= 0");
        std::size_t max_card = static_cast<std::size_t>(d) + 1;
        std::vector<Simplex> kept;
        for (const Simplex& s : simplices_) {
            if (s.cardinality() > max_card) break;
            kept.push_back(s);
        }
        SimplicialComplex k;
        k.adopt(std::move(kept), /*verify_closure=*/false);
        return k;
    }

    /// Position of s in the total order. Throws std::domain_error if absent.
    std::uint32_t index_of(const Simplex& s) const {
        auto it = index_.find(s);
        if (it == index_.end())
            throw std::domain_error("simplex " + s.to_string() + " is not in the complex");
        return it->second;
    }

    /// Star as positions into simplices(), ascending.
    std::vector<std::uint32_t> star_indices(const Simplex& tau) const {
        std::uint32_t root = index_of(tau);
        std::vector<std::uint32_t> out;
        std::vector<std::uint32_t> stack{root};
        std::unordered_map<std::uint32_t, char> visited;
        visited.emplace(root, 1);
        while (!stack.empty()) {
            std::uint32_t cur = stack.back();
            stack.pop_back();
            out.push_back(cur);
            for (std::uint32_t c : cofacets_[cur])
                if (visited.emplace(c, 1).second) stack.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    nlohmann::json to_debug_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const Simplex& s : simplices_) arr.push_back(s.vertices());
        return nlohmann::json{{"simplices", arr}};
    }

private:
    // Takes a sorted, duplicate-free list in complex order.
    void adopt(std::vector<Simplex> sorted, bool verify_closure) {
        simplices_ = std::move(sorted);
        index_.clear();
        index_.reserve(simplices_.size());
        max_cardinality_ = 0;
        for (std::uint32_t i = 0; i < simplices_.size(); ++i) {
            index_.emplace(simplices_[i], i);
            max_cardinality_ = std::max(max_cardinality_, simplices_[i].cardinality());
        }
        card_begin_.assign(max_cardinality_ + 2, 0);
        for (const Simplex& s : simplices_) card_begin_[s.cardinality() + 1]++;
        for (std::size_t c = 1; c < card_begin_.size(); ++c) card_begin_[c] += card_begin_[c - 1];

        cofacets_.assign(simplices_.size(), {});
        for (std::uint32_t i = 0; i < simplices_.size(); ++i) {
            const Simplex& s = simplices_[i];
            if (s.cardinality() < 2) continue;
            for (std::size_t j = 0; j < s.cardinality(); ++j) {
                auto it = index_.find(s.facet_without(j));
                if (it == index_.end()) {
                    if (verify_closure)
                        throw std::invalid_argument(
                            "not face-closed: facet " + s.facet_without(j).to_string() +
                            " of " + s.to_string() + " is missing");
                    continue;
                }
                cofacets_[it->second].push_back(i);
            }
        }
    }

    std::vector<Simplex> simplices_;
    std::vector<std::size_t> card_begin_;
    std::size_t max_cardinality_ = 0;
    std::unordered_map<Simplex, std::uint32_t, SimplexHash> index_;
    std::vector<std::vector<std::uint32_t>> cofacets_;
};

}  // namespace lhom
