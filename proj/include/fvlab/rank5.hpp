#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fvlab/bigint.hpp"
#include "fvlab/caps.hpp"

// Rank-5 cd-indices with [c^4] = 1 and [cdc] = 1 are realizable exactly when
//
//   x1 + x2 + x3 = [c^2 d],  y1 + y2 + y3 = [d c^2],
//   x1 y1 + x2 y2 + x3 y3 = [c^2 d][d c^2] - [d^2]
//
// has a solution in nonnegative integers.

namespace fvlab {

struct Rank5Instance {
    BigInt c2d;  // A
    BigInt dc2;  // B
    BigInt d2;   // D2

    /// Throws InvalidInput on a negative coefficient.
    Rank5Instance(BigInt a, BigInt b, BigInt d2_coef);

    /// A * B - D2.
    BigInt target() const { return c2d * dc2 - d2; }
    /// Sum of ceil(log2) of the three coefficients.
    std::size_t encoding_bits() const;
};

struct Rank5Witness {
    std::array<BigInt, 3> x;
    std::array<BigInt, 3> y;

    bool verifies(const Rank5Instance& inst) const;
    bool operator==(const Rank5Witness&) const = default;
};

struct Rank5Result {
    bool feasible = false;
    std::optional<Rank5Witness> witness;
    std::uint64_t nodes = 0;
};

/// Pruned search with a canonical witness.
///
/// x runs over compositions of A with x1 >= x2 >= x3 in decreasing
/// lexicographic order; a sorted x is skipped when the target lies outside
/// [x3 * B, x1 * B]. For a surviving x, eliminating y3 leaves the two-variable
/// linear equation (x1 - x3) y1 + (x2 - x3) y2 = T - x3 B over the simplex
/// y1, y2 >= 0, y1 + y2 <= B, solved exactly with the extended Euclidean
/// algorithm. The first hit is the witness, with y lexicographically largest
/// for that x. `nodes` counts the x compositions visited.
Rank5Result decide_rank5(const Rank5Instance& inst);

/// Unpruned enumeration over all x and y; throws CapExceeded when A or B exceeds caps.max_brute_rank5.
Rank5Result brute_oracle_rank5(const Rank5Instance& inst, const Caps& caps = {});

/// The [cdc] = 0 facet relation D2 = A * B.
bool cdc_zero_relation(const BigInt& a, const BigInt& b, const BigInt& d2);

struct Rank5BenchRow {
    std::size_t bits = 0;  // encoding size N of the instance
    Rank5Instance instance{0, 0, 0};
    bool feasible = false;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Times decide_rank5 on one deterministic instance per requested bit size N.
///
/// The instance balances N across the three coefficients: each is 2^b - 1
/// for its share b of the bits.
std::vector<Rank5BenchRow> benchmark_rank5(const std::vector<std::size_t>& bit_sizes);

}  // namespace fvlab
