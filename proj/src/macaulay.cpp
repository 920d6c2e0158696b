#include "fvlab/macaulay.hpp"

#include <string>

namespace fvlab {

BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0) throw InvalidInput("binomial with negative n");
    if (n < k) return 0;
    if (n - k < k) k = static_cast<unsigned>(n - k);
    BigInt result = 1;
    const BigInt base = n - k;
    for (unsigned j = 1; j <= k; ++j) {
        result *= base + j;
        result /= j;
    }
    return result;
}

MacaulayRep::MacaulayRep(unsigned index, std::vector<MacaulayTerm> terms)
    : index_(index), terms_(std::move(terms)) {
    if (index_ == 0) throw InvalidInput("Macaulay index must be positive");
    if (terms_.empty()) throw InvalidInput("Macaulay representation of a positive value needs a term");
    unsigned expected = index_;
    for (std::size_t n = 0; n < terms_.size(); ++n) {
        const auto& term = terms_[n];
        if (term.bottom != expected || term.bottom == 0) {
            throw InvalidInput("Macaulay bottoms must run i, i-1, ..., j >= 1");
        }
        if (term.top < term.bottom) throw InvalidInput("Macaulay term has a_t < t");
        if (n > 0 && !(term.top < terms_[n - 1].top)) throw InvalidInput("Macaulay tops must strictly decrease");
        --expected;
    }
}

BigInt MacaulayRep::value() const {
    BigInt sum = 0;
    for (const auto& term : terms_) sum += binomial(term.top, term.bottom);
    return sum;
}

OrthantPoint::OrthantPoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] < 0) throw InvalidInput("orthant coordinate " + std::to_string(i + 1) + " is negative");
    }
}

namespace {

BigInt factorial(unsigned t) {
    BigInt r = 1;
    for (unsigned j = 2; j <= t; ++j) r *= j;
    return r;
}

// Largest n with C(n, t) <= rem, for rem >= 1 and t >= 1.
BigInt largest_top(const BigInt& rem, unsigned t) {
    if (t == 1) return rem;
    // n0^t <= t! rem gives C(n0, t) <= rem; any n >= n0 + t has C(n, t) > rem.
    const BigInt root = integer_root(factorial(t) * rem, t);
    BigInt lo = root < t ? BigInt(t) : root;
    BigInt hi = root + t;
    if (BigInt cap = rem + t; cap < hi) hi = cap;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (binomial(mid, t) <= rem) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const BigInt& a, unsigned i) {
    if (a < 1) throw InvalidInput("macaulay_rep needs a >= 1");
    if (i < 1) throw InvalidInput("macaulay_rep needs i >= 1");
    std::vector<MacaulayTerm> terms;
    BigInt rem = a;
    for (unsigned t = i; rem > 0; --t) {
        BigInt top = largest_top(rem, t);
        rem -= binomial(top, t);
        terms.push_back({std::move(top), t});
    }
    return MacaulayRep(i, std::move(terms));
}

BigInt pseudo_power(const BigInt& a, unsigned i) {
    if (a < 0) throw InvalidInput("pseudo_power of a negative number");
    if (a == 0) return 0;
    BigInt sum = 0;
    const MacaulayRep rep = macaulay_rep(a, i);
    for (const auto& term : rep.terms()) sum += binomial(term.top + 1, term.bottom + 1);
    return sum;
}

MSequenceCheck is_m_sequence(const GVector& g) {
    MSequenceCheck check;
    for (std::size_t pos = 1; pos <= g.size(); ++pos) {
        if (g[pos - 1] < 0) {
            check.failure = MSequenceCheck::Failure::NegativeEntry;
            check.index = pos;
            return check;
        }
        if (pos >= 2 && g[pos - 1] > pseudo_power(g[pos - 2], static_cast<unsigned>(pos - 1))) {
            check.failure = MSequenceCheck::Failure::MacaulayViolation;
            check.index = pos - 1;
            return check;
        }
    }
    return check;
}

GVector least_msequence_with_coordinate(std::size_t i, const BigInt& a, std::size_t k) {
    if (i < 1 || i > k) throw InvalidInput("coordinate index must satisfy 1 <= i <= k");
    if (a < 0) throw InvalidInput("coordinate value must be nonnegative");
    std::vector<BigInt> g(k, BigInt(0));
    g[i - 1] = a;
    for (std::size_t t = i; t >= 2; --t) {
        const BigInt& target = g[t - 1];
        // minimal m with m^{<t-1>} >= target; pseudo_power is nondecreasing and target^{<t-1>} >= target
        BigInt lo = -1;
        BigInt hi = target;
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) / 2;
            if (pseudo_power(mid, static_cast<unsigned>(t - 1)) >= target) {
                hi = std::move(mid);
            } else {
                lo = std::move(mid);
            }
        }
        g[t - 2] = hi;
    }
    return GVector(std::move(g));
}

GVector approximate_point(const OrthantPoint& x) {
    if (x.size() == 0) throw InvalidInput("approximate_point needs k >= 1 coordinates");
    GVector as_g(x.coords());
    if (is_m_sequence(as_g)) return as_g;
    const std::size_t k = x.size();
    std::vector<BigInt> sum(k, BigInt(0));
    for (std::size_t i = 1; i <= k; ++i) {
        if (x[i - 1] == 0) continue;
        GVector part = least_msequence_with_coordinate(i, x[i - 1], k);
        for (std::size_t t = 0; t < k; ++t) sum[t] += part[t];
    }
    return GVector(std::move(sum));
}

BigInt l1_distance(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.size() != b.size()) throw InvalidInput("l1_distance of vectors with different lengths");
    BigInt total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += boost::multiprecision::abs(BigInt(a[i] - b[i]));
    return total;
}

}  // namespace fvlab
