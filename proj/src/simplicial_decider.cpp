#include "fvlab/simplicial_decider.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fvlab {

std::string_view to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::NegativeEntry: return "negative-entry";
        case RejectReason::NonPalindromicH: return "non-palindromic-h";
        case RejectReason::NonInteger: return "non-integer";
        case RejectReason::MacaulayViolation: return "macaulay-violation";
    }
    return "unknown";
}

std::string_view to_string(BoundaryClass::Kind kind) {
    switch (kind) {
        case BoundaryClass::Kind::Apex: return "apex";
        case BoundaryClass::Kind::Interior: return "interior";
        case BoundaryClass::Kind::Boundary: return "boundary";
        case BoundaryClass::Kind::ExtremalRay: return "extremal-ray";
    }
    return "unknown";
}

Decision Decision::accept(GVector g, HVector h) {
    Decision d;
    d.accepted = true;
    d.certificate = std::move(g);
    d.h = std::move(h);
    return d;
}

Decision Decision::reject(RejectReason reason, std::size_t index, std::optional<HVector> h) {
    Decision d;
    d.reason = reason;
    d.index = index;
    d.h = std::move(h);
    return d;
}

Decision decide_simplicial_f(const FVector& v) {
    HVector h = f_to_h(v);
    if (!h.is_palindromic()) return Decision::reject(RejectReason::NonPalindromicH, 0, std::move(h));
    GVector g = h_to_g(h);
    const MSequenceCheck check = is_m_sequence(g);
    switch (check.failure) {
        case MSequenceCheck::Failure::None: return Decision::accept(std::move(g), std::move(h));
        case MSequenceCheck::Failure::NegativeEntry:
            return Decision::reject(RejectReason::NegativeEntry, check.index, std::move(h));
        case MSequenceCheck::Failure::MacaulayViolation:
            return Decision::reject(RejectReason::MacaulayViolation, check.index, std::move(h));
    }
    return Decision::reject(RejectReason::MacaulayViolation, check.index, std::move(h));
}

Decision decide_simplicial_values(std::span<const Rational> values) {
    if (values.empty()) throw InvalidInput("need d >= 1 entries");
    std::vector<BigInt> entries;
    entries.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (boost::multiprecision::denominator(values[i]) != 1) {
            return Decision::reject(RejectReason::NonInteger, i + 1);
        }
        entries.push_back(boost::multiprecision::numerator(values[i]));
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0) return Decision::reject(RejectReason::NegativeEntry, i + 1);
    }
    return decide_simplicial_f(FVector(std::move(entries)));
}

GVector connected_sum_g(const GVector& g1, const GVector& g2) {
    if (g1.size() != g2.size()) throw InvalidInput("connected sum of g-vectors with different lengths");
    std::vector<BigInt> sum(g1.size());
    for (std::size_t i = 0; i < g1.size(); ++i) sum[i] = g1[i] + g2[i];
    return GVector(std::move(sum));
}

BoundaryClass classify_boundary(const GVector& g) {
    if (const auto check = is_m_sequence(g); !check) {
        throw InvalidInput("classify_boundary needs an M-sequence (fails at index " + std::to_string(check.index) +
                           ")");
    }
    std::size_t support = 0;
    while (support < g.size() && g[support] > 0) ++support;
    if (support == 0) return {BoundaryClass::Kind::Apex, 0};
    if (support == g.size()) return {BoundaryClass::Kind::Interior, 0};
    // M-sequences cannot restart after a zero, so the tail past `support` is all zero.
    if (support == 1) return {BoundaryClass::Kind::ExtremalRay, 1};
    return {BoundaryClass::Kind::Boundary, support};
}

double orthant_angle(const std::vector<BigInt>& u, const std::vector<BigInt>& v) {
    if (u.size() != v.size()) throw InvalidInput("angle between vectors of different lengths");
    BigInt dot = 0, uu = 0, vv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    if (uu == 0 || vv == 0) throw InvalidInput("angle with a zero vector");
    const BigInt norms = uu * vv;
    const Rational sin_sq(norms - dot * dot, norms);
    const double s = std::sqrt(std::max(0.0, to_double(sin_sq)));
    const double angle = std::asin(std::min(1.0, s));
    return dot < 0 ? std::numbers::pi - angle : angle;
}

RayWitness ray_density_witness(const OrthantPoint& x, const Rational& eps, unsigned max_doublings) {
    if (eps <= 0) throw InvalidInput("eps must be positive");
    bool nonzero = false;
    for (const auto& c : x.coords()) nonzero = nonzero || c != 0;
    if (!nonzero) throw InvalidInput("ray_density_witness needs x != 0");
    const double bound = to_double(eps);
    BigInt t = 1;
    for (unsigned attempt = 0; attempt <= max_doublings; ++attempt, t *= 2) {
        std::vector<BigInt> scaled(x.coords());
        for (auto& c : scaled) c *= t;
        GVector g = approximate_point(OrthantPoint(std::move(scaled)));
        const double angle = orthant_angle(g.entries(), x.coords());
        if (angle < bound) return {std::move(g), t, angle};
    }
    throw CapExceeded("no scale t <= 2^" + std::to_string(max_doublings) + " reached the angle bound");
}

}  // namespace fvlab
