#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fvlab/bigint.hpp"
#include "fvlab/vector_calculus.hpp"

namespace fvlab {

/// C(n, k); zero when k > n. Negative n is rejected.
BigInt binomial(const BigInt& n, unsigned k);

struct MacaulayTerm {
    BigInt top;       // a_t
    unsigned bottom;  // t
    bool operator==(const MacaulayTerm&) const = default;
};

/// a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j) with a_i > ... > a_j >= j >= 1.
class MacaulayRep {
public:
    /// Validates the decreasing-term invariants and throws InvalidInput otherwise.
    MacaulayRep(unsigned index, std::vector<MacaulayTerm> terms);

    unsigned index() const { return index_; }
    const std::vector<MacaulayTerm>& terms() const { return terms_; }
    BigInt value() const;

    bool operator==(const MacaulayRep&) const = default;

private:
    unsigned index_;
    std::vector<MacaulayTerm> terms_;
};

/// A point of the nonnegative integer orthant.
class OrthantPoint {
public:
    explicit OrthantPoint(std::vector<BigInt> coords);

    std::size_t size() const { return coords_.size(); }
    const std::vector<BigInt>& coords() const { return coords_; }
    const BigInt& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const OrthantPoint&) const = default;

private:
    std::vector<BigInt> coords_;
};

/// The i-th Macaulay representation of a >= 1, found greedily.
MacaulayRep macaulay_rep(const BigInt& a, unsigned i);

/// a^{<i>}: shift every term C(a_t, t) of the representation to C(a_t + 1, t + 1).
BigInt pseudo_power(const BigInt& a, unsigned i);

struct MSequenceCheck {
    enum class Failure { None, NegativeEntry, MacaulayViolation };

    Failure failure = Failure::None;
    // 1-based. NegativeEntry: the offending g_i. MacaulayViolation: the i with g_{i+1} > g_i^{<i>}.
    std::size_t index = 0;

    explicit operator bool() const { return failure == Failure::None; }
};

/// Checks (1, g_1, ..., g_k) against nonnegativity and g_{i+1} <= g_i^{<i>}.
MSequenceCheck is_m_sequence(const GVector& g);

/// The reverse-lexicographically least M-sequence of length k with g_i = a and g_t = 0 for t > i.
GVector least_msequence_with_coordinate(std::size_t i, const BigInt& a, std::size_t k);

/// An M-sequence within O(|x|_1^{(k-1)/k}) of x in l1.
///
/// Returns x itself when it is already an M-sequence; otherwise sums the least
/// M-sequences for each coordinate vector x_i e_i. The sum is again an
/// M-sequence because realizable g-vectors add under connected sum.
GVector approximate_point(const OrthantPoint& x);

BigInt l1_distance(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

}  // namespace fvlab
