#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lhom/complex.hpp"
#include "lhom/gf.hpp"
#include "lhom/simplex.hpp"

namespace lhom {

/// Local betti numbers indexed by homological degree.
using BettiProfile = std::vector<int>;

/// Matrix of the boundary map from degree-k chains to degree-(k-1) chains of
/// the given simplex sequence, in the sequence's order. A face that is not in
/// the sequence contributes zero, which is what makes this correct on stars.
/// Degree-0 chains map to a single formal row of zeros; an empty domain gives
/// the empty matrix.
inline GfMatrix boundary_matrix(std::span<const Simplex> simplices, int k,
                                const PrimeField& field) {
    if (k < 0) throw std::domain_error("boundary_matrix: degree must be >= 0");
    const std::size_t domain_card = static_cast<std::size_t>(k) + 1;

    std::vector<const Simplex*> domain;
    std::unordered_map<Simplex, std::size_t, SimplexHash> codomain_row;
    for (const Simplex& s : simplices) {
        if (s.cardinality() == domain_card) domain.push_back(&s);
        else if (k >= 1 && s.cardinality() == domain_card - 1)
            codomain_row.emplace(s, codomain_row.size());
    }

    if (domain.empty()) return GfMatrix::empty_matrix(field);
    if (k == 0) return GfMatrix(1, domain.size(), field);

    GfMatrix m(codomain_row.size(), domain.size(), field);
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const Simplex& d = *domain[j];
        for (std::size_t i = 0; i < d.cardinality(); ++i) {
            auto it = codomain_row.find(d.facet_without(i));
            if (it == codomain_row.end()) continue;
            m.set(it->second, j, (i % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

/// The k-th local betti number of tau in K: dim ker d_k - dim im d_{k+1}
/// computed on the star of tau.
inline int local_betti(const SimplicialComplex& k_complex, const Simplex& tau, int k,
                       const PrimeField& field) {
    if (k < 0) throw std::domain_error("local_betti: degree must be >= 0");
    const std::vector<Simplex> star = k_complex.star(tau);
    const GfMatrix bd_k = boundary_matrix(star, k, field);
    const GfMatrix bd_k1 = boundary_matrix(star, k + 1, field);
    const auto dim_ker = static_cast<int>(zero_col_count(smith_normal_form(bd_k)));
    const auto dim_im = static_cast<int>(nonzero_col_count(smith_normal_form(bd_k1)));
    return dim_ker - dim_im;
}

/// Local betti numbers of tau for degrees 0..max_degree. Equivalent to
/// calling local_betti per degree; boundary ranks are shared across degrees.
inline BettiProfile local_profile(const SimplicialComplex& k_complex, const Simplex& tau,
                                  int max_degree, const PrimeField& field) {
    if (max_degree < 0) throw std::domain_error("local_profile: max_degree must be >= 0");
    const std::vector<Simplex> star = k_complex.star(tau);

    BettiProfile out(static_cast<std::size_t>(max_degree) + 1, 0);
    GfMatrix bd = boundary_matrix(star, 0, field);
    std::size_t dim_ker = bd.cols() - rank(bd);
    for (int k = 0; k <= max_degree; ++k) {
        const GfMatrix bd_next = boundary_matrix(star, k + 1, field);
        const std::size_t rank_next = rank(bd_next);
        out[static_cast<std::size_t>(k)] =
            static_cast<int>(dim_ker) - static_cast<int>(rank_next);
        dim_ker = bd_next.cols() - rank_next;
    }
    return out;
}

namespace detail {

/// Reduced boundary rank data for a whole complex: the degree-0 map is the
/// augmentation (the all-ones row), higher degrees are the full boundary.
inline GfMatrix reduced_boundary(const SimplicialComplex& k_complex, int n,
                                 const PrimeField& field) {
    if (n >= 1) return boundary_matrix(k_complex.simplices(), n, field);
    GfMatrix aug(1, k_complex.vertex_count(), field);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug.set(0, j, 1);
    return aug;
}

/// Reduced betti allowing degree -1, where the empty complex contributes 1.
inline int reduced_betti_any(const SimplicialComplex& k_complex, int n,
                             const PrimeField& field) {
    if (n == -1) return k_complex.empty() ? 1 : 0;
    const GfMatrix bd_n = reduced_boundary(k_complex, n, field);
    const GfMatrix bd_n1 = reduced_boundary(k_complex, n + 1, field);
    const auto dim_ker = static_cast<int>(bd_n.cols() - rank(bd_n));
    return dim_ker - static_cast<int>(rank(bd_n1));
}

}  // namespace detail

/// n-th reduced betti number of an arbitrary finite complex over the field.
inline int reduced_betti(const SimplicialComplex& k_complex, int n, const PrimeField& field) {
    if (n < 0) throw std::domain_error("reduced_betti: degree must be >= 0");
    return detail::reduced_betti_any(k_complex, n, field);
}

/// The n-th local betti number of tau computed through its link, valid for
/// n >= dim(tau) + 1: the (n - dim(tau) - 1)-th reduced betti of the link.
inline int local_betti_via_link(const SimplicialComplex& k_complex, const Simplex& tau,
                                int n, const PrimeField& field) {
    k_complex.index_of(tau);  // membership check
    if (n <= tau.dimension())
        throw std::domain_error("local_betti_via_link: requires degree >= dim(tau) + 1");
    const SimplicialComplex link = k_complex.link(tau);
    return detail::reduced_betti_any(link, n - tau.dimension() - 1, field);
}

}  // namespace lhom
