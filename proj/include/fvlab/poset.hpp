#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fvlab/bigint.hpp"

namespace fvlab {

/// A finite bounded graded poset given by its cover relation.
///
/// Elements are 0..size()-1. Construction validates a unique minimum of rank 0,
/// a unique maximum, and covers that raise rank by exactly one; together these
/// make every maximal chain have length rank().
class GradedPoset {
public:
    using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

    GradedPoset(std::vector<int> ranks, std::vector<Cover> covers);

    std::size_t size() const { return ranks_.size(); }
    /// Rank of the maximum, d + 1.
    int rank() const { return ranks_[top_]; }
    /// d = rank() - 1, the number of proper rank levels.
    int d() const { return rank() - 1; }
    int rank_of(std::size_t x) const { return ranks_[x]; }
    const std::vector<int>& ranks() const { return ranks_; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_[x]; }
    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_[x]; }
    const std::vector<std::size_t>& level(int r) const { return levels_[static_cast<std::size_t>(r)]; }
    /// Cover pairs sorted by (lower, upper).
    std::vector<Cover> covers() const;

    /// x <= y in the partial order.
    bool leq(std::size_t x, std::size_t y) const { return up_set_[x].test(y); }
    /// Elements >= x, as a bitset over all elements.
    const boost::dynamic_bitset<>& up_set(std::size_t x) const { return up_set_[x]; }

    /// Elements other than the minimum and maximum, in increasing index order.
    std::vector<std::size_t> proper_elements() const;

private:
    std::vector<int> ranks_;
    std::vector<std::vector<std::size_t>> down_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> levels_;
    std::vector<boost::dynamic_bitset<>> up_set_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

/// Chain counts f_S for S subset of [d], indexed by bitmask (bit i-1 set when rank i is in S).
class FlagVector {
public:
    /// counts.size() must be 2^d and counts[0] (the empty chain) must be 1.
    FlagVector(int d, std::vector<BigInt> counts);

    int d() const { return d_; }
    const std::vector<BigInt>& counts() const { return counts_; }
    const BigInt& operator[](std::uint32_t mask) const { return counts_[mask]; }
    /// f_{{rank}}, the number of elements of a given rank in 1..d.
    const BigInt& rank_count(int rank) const { return counts_[std::uint32_t{1} << (rank - 1)]; }

    bool operator==(const FlagVector&) const = default;

private:
    int d_;
    std::vector<BigInt> counts_;
};

/// Subsets of [n] ordered by inclusion (face lattice of the (n-1)-simplex); rank n.
GradedPoset boolean_lattice(int n);
/// Face poset of the m-gon with bounds; rank 3.
GradedPoset polygon(int m);
/// Two elements in every rank 1..d, each covering both below it; rank d + 1.
GradedPoset dihedral_sphere(int d);
/// Face poset of a path with the given number of edges, plus bounds; a 1-ball, not Eulerian.
GradedPoset path_poset(int edges);
/// The chain 0 < 1 of rank 1; the unit for join.
GradedPoset point_poset();

/// Star product: P minus its maximum, below Q minus its minimum.
///
/// Every proper element of P lies below every proper element of Q, so
/// rank(P * Q) = rank(P) + rank(Q) - 1 and the ab-index (hence cd-index) is
/// multiplicative. The order complex of the proper part is the simplicial
/// join of the two proper-part order complexes.
GradedPoset join(const GradedPoset& p, const GradedPoset& q);

/// Dynamic programming over rank levels using the comparability relation.
FlagVector flag_vector(const GradedPoset& p);

/// Every interval [x, y] with x < y has as many even-rank as odd-rank elements.
bool is_eulerian(const GradedPoset& p);

}  // namespace fvlab
