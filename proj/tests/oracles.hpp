// Slow, independent reference implementations used by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "fvlab/bigint.hpp"
#include "fvlab/complex.hpp"
#include "fvlab/poset.hpp"

namespace fvlab::oracle {

// Pascal's triangle up to row n.
inline std::vector<std::vector<BigInt>> pascal(int n) {
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        rows[r].assign(static_cast<std::size_t>(r) + 1, BigInt(1));
        for (int k = 1; k < r; ++k) rows[r][k] = rows[r - 1][k - 1] + rows[r - 1][k];
    }
    return rows;
}

// h from f by expanding sum_i f_i (x-1)^(d-i) as a polynomial; h_k is the x^(d-k) coefficient.
inline std::vector<BigInt> f_to_h_by_expansion(const std::vector<BigInt>& f) {
    const int d = static_cast<int>(f.size());
    std::vector<BigInt> total(static_cast<std::size_t>(d) + 1, BigInt(0));  // index = power of x
    for (int i = 0; i <= d; ++i) {
        const BigInt fi = i == 0 ? BigInt(1) : f[i - 1];
        std::vector<BigInt> poly{BigInt(1)};
        for (int r = 0; r < d - i; ++r) {
            std::vector<BigInt> next(poly.size() + 1, BigInt(0));
            for (std::size_t p = 0; p < poly.size(); ++p) {
                next[p + 1] += poly[p];
                next[p] -= poly[p];
            }
            poly = std::move(next);
        }
        for (std::size_t p = 0; p < poly.size(); ++p) total[p] += fi * poly[p];
    }
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) h[k] = total[d - k];
    return h;
}

// Monomials as exponent vectors. Colex initial segments do not depend on the number of variables,
// which makes them the extremal order ideals for Macaulay's theorem.
using Monomial = std::vector<int>;

inline void monomials_rec(int n, int degree, int var, Monomial& cur, std::vector<Monomial>& out) {
    if (var == n - 1) {
        cur[var] = degree;
        out.push_back(cur);
        cur[var] = 0;
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur[var] = e;
        monomials_rec(n, degree - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

inline bool colex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t v = a.size(); v-- > 0;) {
        if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
}

inline std::vector<Monomial> colex_monomials(int n, int degree) {
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(n), 0);
    if (n > 0) monomials_rec(n, degree, 0, cur, out);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

// Number of variables the first `a` colex monomials of degree i touch.
inline int colex_support(long a, int i) {
    if (a <= 0) return 0;
    int n = 1;
    // C(n + i - 1, i) monomials of degree i live in the first n variables.
    while (true) {
        BigInt count = 1;
        for (int t = 1; t <= i; ++t) count = count * (n + i - t) / t;
        if (count >= a) return n;
        ++n;
    }
}

// For degree i monomials in n variables: how many degree-(i+1) monomials have all their degree-i
// divisors among the first `a` colex monomials. Independent of n once n covers the segment.
class SegmentGrowth {
public:
    SegmentGrowth(int i, int n) : i_(i) {
        const auto low = colex_monomials(n, i);
        capacity_ = static_cast<long>(low.size());
        std::map<Monomial, long> rank;
        for (std::size_t r = 0; r < low.size(); ++r) rank[low[r]] = static_cast<long>(r);
        for (const auto& m : colex_monomials(n, i + 1)) {
            long worst = -1;
            for (int v = 0; v < n; ++v) {
                if (m[v] == 0) continue;
                Monomial div = m;
                --div[v];
                worst = std::max(worst, rank.at(div));
            }
            worst_.push_back(worst);
        }
        std::sort(worst_.begin(), worst_.end());
    }

    long operator()(long a) const {
        if (a > capacity_) throw std::out_of_range("segment larger than the monomial list");
        // monomials whose largest divisor rank is below a
        return static_cast<long>(std::lower_bound(worst_.begin(), worst_.end(), a) - worst_.begin());
    }

    int degree() const { return i_; }

private:
    int i_;
    long capacity_ = 0;
    std::vector<long> worst_;
};

inline long lex_segment_growth(long a, int i) {
    if (a <= 0) return 0;
    static std::map<std::pair<int, int>, SegmentGrowth> cache;
    const int n = colex_support(a, i);
    // round the variable count up so that nearby sizes share one table
    int bucket = 1;
    while (bucket < n) bucket *= 2;
    auto it = cache.find({i, bucket});
    if (it == cache.end()) it = cache.emplace(std::make_pair(i, bucket), SegmentGrowth(i, bucket)).first;
    return it->second(a);
}

// (g_1, ..., g_k) is an M-sequence iff each g_{i+1} fits above the colex segment of size g_i.
inline bool is_m_sequence_by_segments(const std::vector<long>& g) {
    for (long x : g) {
        if (x < 0) return false;
    }
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        if (g[i + 1] > lex_segment_growth(g[i], static_cast<int>(i) + 1)) return false;
    }
    return true;
}

// Flag vector by depth-first enumeration of every maximal chain prefix.
inline std::vector<BigInt> flag_by_chains(const GradedPoset& p) {
    const int d = p.d();
    std::vector<BigInt> counts(std::size_t{1} << d, BigInt(0));
    // Every chain 0 < x_1 < ... < x_j < 1 is a path in the comparability relation.
    std::vector<std::size_t> order(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) order[x] = x;
    std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t x, std::uint32_t mask) {
        counts[mask] += 1;
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (y == x || y == p.top() || !p.leq(x, y)) continue;
            walk(y, mask | (std::uint32_t{1} << (p.rank_of(y) - 1)));
        }
    };
    walk(p.bottom(), 0);
    return counts;
}

// Rank over the rationals by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rational factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Reduced Betti numbers b_{-1}..b_dim from explicit boundary matrices.
inline std::vector<std::size_t> naive_betti(const SimplicialComplexData& k) {
    if (k.is_void()) return {};
    std::set<Face> faces;
    for (const auto& facet : k.facets()) {
        const std::size_t n = facet.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Face f;
            for (std::size_t b = 0; b < n; ++b) {
                if (mask >> b & 1) f.push_back(facet[b]);
            }
            faces.insert(f);
        }
    }
    const int dim = k.dimension();
    std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(dim) + 2);
    for (const auto& f : faces) by_size[f.size()].push_back(f);
    // rank of the boundary from size s to size s-1
    std::vector<std::size_t> ranks(by_size.size() + 1, 0);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        std::map<Face, std::size_t> index;
        for (std::size_t r = 0; r < by_size[s - 1].size(); ++r) index[by_size[s - 1][r]] = r;
        std::vector<std::vector<Rational>> m(by_size[s].size(), std::vector<Rational>(by_size[s - 1].size()));
        for (std::size_t r = 0; r < by_size[s].size(); ++r) {
            const Face& f = by_size[s][r];
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face g = f;
                g.erase(g.begin() + static_cast<long>(drop));
                m[r][index.at(g)] = drop % 2 == 0 ? 1 : -1;
            }
        }
        ranks[s] = rational_rank(std::move(m));
    }
    std::vector<std::size_t> betti;
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        betti.push_back(by_size[s].size() - ranks[s] - ranks[s + 1]);
    }
    return betti;
}

}  // namespace fvlab::oracle
