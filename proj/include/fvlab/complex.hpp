#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fvlab/bigint.hpp"
#include "fvlab/poset.hpp"

namespace fvlab {

using Face = std::vector<std::size_t>;  // sorted vertex labels

/// A finite abstract simplicial complex stored by its facets.
///
/// No facets is the void complex; a single empty facet is {emptyset}, the
/// (-1)-sphere.
class SimplicialComplexData {
public:
    SimplicialComplexData() = default;
    /// Sorts each facet and drops duplicates and non-maximal faces.
    explicit SimplicialComplexData(std::vector<Face> facets);

    const std::vector<Face>& facets() const { return facets_; }
    std::vector<std::size_t> vertices() const;
    bool is_void() const { return facets_.empty(); }
    /// Largest facet size minus one; -2 for the void complex.
    int dimension() const;

    /// All faces grouped by dimension: entry k holds the (k-1)-dimensional faces, starting with the empty face.
    std::vector<std::vector<Face>> faces_by_dimension() const;

    /// {G : G and F disjoint, G union F a face}; void when F is not a face.
    SimplicialComplexData link(const Face& f) const;

private:
    std::vector<Face> facets_;
};

/// Chains of the proper part of P, with poset elements as vertices.
SimplicialComplexData order_complex(const GradedPoset& p);

enum class HomologyField { Rational, PrimeField };

/// Rank of an integer matrix over Q (fraction-free elimination) or over Z/p with p = 2^31 - 1.
std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, HomologyField field);

/// Reduced Betti numbers b_{-1}, b_0, ..., b_{dim K}; empty for the void complex.
std::vector<std::size_t> rational_betti(const SimplicialComplexData& k,
                                        HomologyField field = HomologyField::Rational);

}  // namespace fvlab
