#include "fvlab/vector_calculus.hpp"

#include <string>

#include "fvlab/macaulay.hpp"

namespace fvlab {

FVector::FVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInput("FVector needs d >= 1 entries");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0) {
            throw InvalidInput("FVector entry f_" + std::to_string(i + 1) + " is negative");
        }
    }
}

BigInt FVector::at(int i) const {
    if (i == 0) return 1;
    return entries_.at(static_cast<std::size_t>(i - 1));
}

std::size_t FVector::encoding_bits() const {
    std::size_t total = 0;
    for (const auto& v : entries_) total += ceil_log2(v);
    return total;
}

HVector::HVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw InvalidInput("HVector needs d + 1 >= 2 entries");
}

bool HVector::is_palindromic() const {
    for (std::size_t i = 0, j = entries_.size() - 1; i < j; ++i, --j) {
        if (entries_[i] != entries_[j]) return false;
    }
    return true;
}

HVector f_to_h(const FVector& f) {
    // h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_i
    const int d = f.d();
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        BigInt acc = 0;
        for (int i = 0; i <= k; ++i) {
            BigInt term = binomial(static_cast<unsigned>(d - i), static_cast<unsigned>(k - i)) * f.at(i);
            if ((k - i) % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return HVector(std::move(h));
}

FVector h_to_f(const HVector& h) {
    if (h[0] != 1) throw InvalidInput("h_0 must be 1, got " + to_string(h[0]));
    // f_k = sum_{i<=k} C(d-i, k-i) h_i
    const int d = h.d();
    std::vector<BigInt> f(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) {
        BigInt acc = 0;
        for (int i = 0; i <= k; ++i) {
            acc += binomial(static_cast<unsigned>(d - i), static_cast<unsigned>(k - i)) * h[static_cast<std::size_t>(i)];
        }
        f[static_cast<std::size_t>(k - 1)] = std::move(acc);
    }
    return FVector(std::move(f));
}

GVector h_to_g(const HVector& h) {
    const std::size_t k = static_cast<std::size_t>(h.d() / 2);
    std::vector<BigInt> g;
    g.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) g.push_back(h[i] - h[i - 1]);
    return GVector(std::move(g));
}

HVector g_to_h(const GVector& g, int d) {
    if (d < 1) throw InvalidInput("d must be positive");
    const std::size_t k = static_cast<std::size_t>(d / 2);
    if (g.size() != k) {
        throw InvalidInput("g has length " + std::to_string(g.size()) + ", expected floor(d/2) = " +
                           std::to_string(k));
    }
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
    h[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) h[i] = h[i - 1] + g[i - 1];
    for (std::size_t i = k + 1; i <= static_cast<std::size_t>(d); ++i) h[i] = h[static_cast<std::size_t>(d) - i];
    return HVector(std::move(h));
}

Rational fatness(const FVector& f) {
    if (f.d() != 4) throw InvalidInput("fatness is defined for d = 4 only");
    BigInt den = f.at(1) + f.at(4);
    if (den == 0) throw InvalidInput("fatness denominator f_1 + f_4 is zero");
    return Rational(f.at(2) + f.at(3), den);
}

}  // namespace fvlab
