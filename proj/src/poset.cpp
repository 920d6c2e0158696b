#include "fvlab/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace fvlab {

GradedPoset::GradedPoset(std::vector<int> ranks, std::vector<Cover> covers) : ranks_(std::move(ranks)) {
    const std::size_t n = ranks_.size();
    if (n < 2) throw InvalidInput("a bounded poset of positive rank needs at least two elements");
    down_.assign(n, {});
    up_.assign(n, {});
    std::set<Cover> seen;
    for (const auto& [lo, hi] : covers) {
        if (lo >= n || hi >= n) throw InvalidInput("cover refers to an unknown element");
        if (ranks_[hi] != ranks_[lo] + 1) {
            throw InvalidInput("cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                               ") does not raise rank by one");
        }
        if (!seen.insert({lo, hi}).second) throw InvalidInput("duplicate cover pair");
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
    }
    std::vector<std::size_t> minimal, maximal;
    for (std::size_t x = 0; x < n; ++x) {
        std::sort(up_[x].begin(), up_[x].end());
        std::sort(down_[x].begin(), down_[x].end());
        if (down_[x].empty()) minimal.push_back(x);
        if (up_[x].empty()) maximal.push_back(x);
    }
    if (minimal.size() != 1) throw InvalidInput("poset must have a unique minimum");
    if (maximal.size() != 1) throw InvalidInput("poset must have a unique maximum");
    bottom_ = minimal.front();
    top_ = maximal.front();
    if (ranks_[bottom_] != 0) throw InvalidInput("the minimum must have rank 0");
    // Every element reaches the minimum by covers lowering rank by one, so all ranks lie in [0, rank(top)].
    const int max_rank = ranks_[top_];
    levels_.assign(static_cast<std::size_t>(max_rank) + 1, {});
    for (std::size_t x = 0; x < n; ++x) {
        if (ranks_[x] < 0 || ranks_[x] > max_rank) throw InvalidInput("rank outside [0, rank(max)]");
        levels_[static_cast<std::size_t>(ranks_[x])].push_back(x);
    }
    up_set_.assign(n, boost::dynamic_bitset<>(n));
    for (int r = max_rank; r >= 0; --r) {
        for (std::size_t x : levels_[static_cast<std::size_t>(r)]) {
            up_set_[x].set(x);
            for (std::size_t y : up_[x]) up_set_[x] |= up_set_[y];
        }
    }
}

std::vector<GradedPoset::Cover> GradedPoset::covers() const {
    std::vector<Cover> out;
    for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y : up_[x]) out.emplace_back(x, y);
    }
    return out;
}

std::vector<std::size_t> GradedPoset::proper_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
        if (x != bottom_ && x != top_) out.push_back(x);
    }
    return out;
}

FlagVector::FlagVector(int d, std::vector<BigInt> counts) : d_(d), counts_(std::move(counts)) {
    if (d_ < 0 || d_ > 30) throw InvalidInput("flag vector rank parameter out of range");
    if (counts_.size() != (std::size_t{1} << d_)) throw InvalidInput("flag vector needs 2^d entries");
    if (counts_[0] != 1) throw InvalidInput("flag vector needs f_emptyset = 1");
    for (const auto& c : counts_) {
        if (c < 0) throw InvalidInput("flag vector entries must be nonnegative");
    }
}

GradedPoset boolean_lattice(int n) {
    if (n < 1 || n > 20) throw InvalidInput("boolean_lattice needs 1 <= n <= 20");
    const std::size_t count = std::size_t{1} << n;
    std::vector<int> ranks(count);
    std::vector<GradedPoset::Cover> covers;
    for (std::size_t s = 0; s < count; ++s) {
        ranks[s] = std::popcount(s);
        for (int i = 0; i < n; ++i) {
            if (!(s >> i & 1U)) covers.emplace_back(s, s | (std::size_t{1} << i));
        }
    }
    return GradedPoset(std::move(ranks), std::move(covers));
}

GradedPoset polygon(int m) {
    if (m < 3) throw InvalidInput("polygon needs m >= 3");
    const auto mm = static_cast<std::size_t>(m);
    // 0: bottom, 1..m: vertices, m+1..2m: edges, 2m+1: top
    std::vector<int> ranks(2 * mm + 2);
    ranks[0] = 0;
    std::vector<GradedPoset::Cover> covers;
    for (std::size_t j = 0; j < mm; ++j) {
        ranks[1 + j] = 1;
        ranks[1 + mm + j] = 2;
        covers.emplace_back(0, 1 + j);
        covers.emplace_back(1 + j, 1 + mm + j);
        covers.emplace_back(1 + (j + 1) % mm, 1 + mm + j);
        covers.emplace_back(1 + mm + j, 2 * mm + 1);
    }
    ranks[2 * mm + 1] = 3;
    return GradedPoset(std::move(ranks), std::move(covers));
}

GradedPoset dihedral_sphere(int d) {
    if (d < 1) throw InvalidInput("dihedral_sphere needs d >= 1");
    const auto dd = static_cast<std::size_t>(d);
    // 0: bottom, rank r in 1..d at 2r-1 and 2r, top at 2d+1
    std::vector<int> ranks(2 * dd + 2);
    std::vector<GradedPoset::Cover> covers;
    for (std::size_t r = 1; r <= dd; ++r) {
        for (std::size_t e : {2 * r - 1, 2 * r}) {
            ranks[e] = static_cast<int>(r);
            if (r == 1) {
                covers.emplace_back(0, e);
            } else {
                covers.emplace_back(2 * r - 3, e);
                covers.emplace_back(2 * r - 2, e);
            }
            if (r == dd) covers.emplace_back(e, 2 * dd + 1);
        }
    }
    ranks[2 * dd + 1] = d + 1;
    return GradedPoset(std::move(ranks), std::move(covers));
}

GradedPoset path_poset(int edges) {
    if (edges < 1) throw InvalidInput("path_poset needs at least one edge");
    const auto e = static_cast<std::size_t>(edges);
    // 0: bottom, 1..e+1: vertices, e+2..2e+1: edges, 2e+2: top
    std::vector<int> ranks(2 * e + 3);
    std::vector<GradedPoset::Cover> covers;
    for (std::size_t v = 0; v <= e; ++v) {
        ranks[1 + v] = 1;
        covers.emplace_back(0, 1 + v);
    }
    for (std::size_t j = 0; j < e; ++j) {
        const std::size_t id = e + 2 + j;
        ranks[id] = 2;
        covers.emplace_back(1 + j, id);
        covers.emplace_back(2 + j, id);
        covers.emplace_back(id, 2 * e + 2);
    }
    ranks[2 * e + 2] = 3;
    return GradedPoset(std::move(ranks), std::move(covers));
}

GradedPoset point_poset() { return GradedPoset({0, 1}, {{0, 1}}); }

GradedPoset join(const GradedPoset& p, const GradedPoset& q) {
    const std::size_t np = p.size();
    const std::size_t nq = q.size();
    // P minus its top keeps its order; Q minus its bottom is shifted up by rank(P) - 1.
    std::vector<std::size_t> p_index(np, SIZE_MAX), q_index(nq, SIZE_MAX);
    std::vector<int> ranks;
    ranks.reserve(np + nq - 2);
    for (std::size_t x = 0; x < np; ++x) {
        if (x == p.top()) continue;
        p_index[x] = ranks.size();
        ranks.push_back(p.rank_of(x));
    }
    const int shift = p.rank() - 1;
    for (std::size_t y = 0; y < nq; ++y) {
        if (y == q.bottom()) continue;
        q_index[y] = ranks.size();
        ranks.push_back(q.rank_of(y) + shift);
    }
    std::vector<GradedPoset::Cover> covers;
    for (const auto& [lo, hi] : p.covers()) {
        if (hi != p.top()) covers.emplace_back(p_index[lo], p_index[hi]);
    }
    for (const auto& [lo, hi] : q.covers()) {
        if (lo != q.bottom()) covers.emplace_back(q_index[lo], q_index[hi]);
    }
    for (std::size_t coatom : p.lower_covers(p.top())) {
        for (std::size_t atom : q.upper_covers(q.bottom())) covers.emplace_back(p_index[coatom], q_index[atom]);
    }
    return GradedPoset(std::move(ranks), std::move(covers));
}

FlagVector flag_vector(const GradedPoset& p) {
    const int d = p.d();
    if (d > 20) throw InvalidInput("flag_vector supports d <= 20");
    const std::uint32_t subsets = std::uint32_t{1} << d;
    std::vector<BigInt> counts(subsets);
    std::vector<BigInt> chains(p.size());
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        if (mask == 0) {
            counts[0] = 1;
            continue;
        }
        int prev = -1;
        for (int r = 1; r <= d; ++r) {
            if (!(mask >> (r - 1) & 1U)) continue;
            for (std::size_t y : p.level(r)) {
                if (prev < 0) {
                    chains[y] = 1;
                    continue;
                }
                BigInt acc = 0;
                for (std::size_t x : p.level(prev)) {
                    if (p.leq(x, y)) acc += chains[x];
                }
                chains[y] = std::move(acc);
            }
            prev = r;
        }
        BigInt total = 0;
        for (std::size_t y : p.level(prev)) total += chains[y];
        counts[mask] = std::move(total);
    }
    return FlagVector(d, std::move(counts));
}

bool is_eulerian(const GradedPoset& p) {
    const std::size_t n = p.size();
    std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
    boost::dynamic_bitset<> even(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (p.rank_of(x) % 2 == 0) even.set(x);
        for (std::size_t y = p.up_set(x).find_first(); y != boost::dynamic_bitset<>::npos; y = p.up_set(x).find_next(y)) {
            down[y].set(x);
        }
    }
    boost::dynamic_bitset<> interval(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto& above = p.up_set(x);
        for (std::size_t y = above.find_first(); y != boost::dynamic_bitset<>::npos; y = above.find_next(y)) {
            if (y == x) continue;
            interval = above;
            interval &= down[y];
            const std::size_t total = interval.count();
            interval &= even;
            if (2 * interval.count() != total) return false;
        }
    }
    return true;
}

}  // namespace fvlab
