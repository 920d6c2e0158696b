#pragma once

#include <cstddef>
#include <vector>

#include "fvlab/bigint.hpp"

// Face-count vectors of simplicial d-polytopes in rank convention.
//
// f_i counts rank-i faces, i.e. (i-1)-dimensional faces, for 1 <= i <= d.
// The empty face f_0 = 1 and g_0 = 1 are implicit and never stored.

namespace fvlab {

class FVector {
public:
    /// entries = (f_1, ..., f_d); throws InvalidInput on negative entries or d < 1.
    explicit FVector(std::vector<BigInt> entries);

    int d() const { return static_cast<int>(entries_.size()); }
    const std::vector<BigInt>& entries() const { return entries_; }
    /// f_i for 0 <= i <= d, with f_0 = 1.
    BigInt at(int i) const;

    /// Sum of ceil(log2 f_i): the binary encoding size N(v).
    std::size_t encoding_bits() const;

    bool operator==(const FVector&) const = default;

private:
    std::vector<BigInt> entries_;
};

class HVector {
public:
    /// entries = (h_0, ..., h_d); requires at least two entries.
    explicit HVector(std::vector<BigInt> entries);

    int d() const { return static_cast<int>(entries_.size()) - 1; }
    const std::vector<BigInt>& entries() const { return entries_; }
    const BigInt& operator[](std::size_t i) const { return entries_[i]; }

    bool is_palindromic() const;

    bool operator==(const HVector&) const = default;

private:
    std::vector<BigInt> entries_;
};

class GVector {
public:
    GVector() = default;
    /// entries = (g_1, ..., g_k); may be empty (d = 1).
    explicit GVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    const std::vector<BigInt>& entries() const { return entries_; }
    const BigInt& operator[](std::size_t i) const { return entries_[i]; }

    bool operator==(const GVector&) const = default;

private:
    std::vector<BigInt> entries_;
};

HVector f_to_h(const FVector& f);

/// Throws InvalidInput when h_0 != 1 or when the image has a negative entry.
FVector h_to_f(const HVector& h);

/// g_i = h_i - h_{i-1} for 1 <= i <= floor(d/2); the upper half of h is ignored.
GVector h_to_g(const HVector& h);

/// Symmetric completion; throws InvalidInput unless g.size() == floor(d/2).
HVector g_to_h(const GVector& g, int d);

/// (f_2 + f_3) / (f_1 + f_4) for a 4-dimensional FVector.
///
/// In dimension indexing this is (f_1 + f_2) / (f_0 + f_3): edges plus ridges
/// over vertices plus facets. Throws InvalidInput when d != 4 or the
/// denominator vanishes.
Rational fatness(const FVector& f);

}  // namespace fvlab
