#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "fvlab/bigint.hpp"
#include "fvlab/macaulay.hpp"
#include "fvlab/vector_calculus.hpp"

namespace fvlab {

enum class RejectReason { NegativeEntry, NonPalindromicH, NonInteger, MacaulayViolation };

std::string_view to_string(RejectReason reason);

/// Outcome of deciding whether a vector is the f-vector of a simplicial polytope.
///
/// Accepted decisions carry the g-vector certificate; rejected ones carry the
/// first failing check. `index` is 1-based and only meaningful for
/// NegativeEntry, NonInteger and MacaulayViolation.
struct Decision {
    bool accepted = false;
    std::optional<GVector> certificate;
    std::optional<RejectReason> reason;
    std::size_t index = 0;
    std::optional<HVector> h;

    static Decision accept(GVector g, HVector h);
    static Decision reject(RejectReason reason, std::size_t index = 0, std::optional<HVector> h = std::nullopt);
};

/// Polynomial in the bit size of v: one f-to-h transform plus a Macaulay check per g_i.
Decision decide_simplicial_f(const FVector& v);

/// Same decision for raw rational entries; reports NonInteger/NegativeEntry before transforming.
Decision decide_simplicial_values(std::span<const Rational> values);

/// g(P # Q) = g(P) + g(Q); the implicit g_0 stays 1.
GVector connected_sum_g(const GVector& g1, const GVector& g2);

struct BoundaryClass {
    enum class Kind { Apex, Interior, Boundary, ExtremalRay };
    Kind kind = Kind::Apex;
    // Support length for Boundary and ExtremalRay (1 for ExtremalRay).
    std::size_t k = 0;

    bool operator==(const BoundaryClass&) const = default;
};

std::string_view to_string(BoundaryClass::Kind kind);

/// Position of an M-sequence in the nonnegative orthant.
///
/// Interior: no zero entry. Boundary(k): (a_1..a_k, 0..0) with every a_i > 0
/// and k < length; ExtremalRay when k = 1. The zero vector (the simplex) is
/// the Apex. Throws InvalidInput for non-M-sequences.
BoundaryClass classify_boundary(const GVector& g);

struct RayWitness {
    GVector g;
    BigInt scale;
    double angle = 0.0;
};

/// An M-sequence whose ray from the origin is within `eps` radians of the ray through x.
///
/// Tries approximate_point(t x) for t = 1, 2, 4, ... and throws CapExceeded
/// after `max_doublings` attempts.
RayWitness ray_density_witness(const OrthantPoint& x, const Rational& eps, unsigned max_doublings = 256);

/// Angle between two nonzero orthant vectors. sin^2 is formed exactly; only the final asin is inexact.
double orthant_angle(const std::vector<BigInt>& u, const std::vector<BigInt>& v);

}  // namespace fvlab
