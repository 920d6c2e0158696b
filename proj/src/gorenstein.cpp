#include "fvlab/gorenstein.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace fvlab {

namespace {

bool is_sphere_betti(const std::vector<std::size_t>& betti, int dim) {
    if (betti.size() != static_cast<std::size_t>(dim + 2)) return false;
    for (std::size_t i = 0; i + 1 < betti.size(); ++i) {
        if (betti[i] != 0) return false;
    }
    return betti.back() == 1;
}

}  // namespace

GorensteinCheck is_gorenstein_star(const GradedPoset& p, const Caps& caps, HomologyField field) {
    if (p.rank() > caps.max_gorenstein_rank) {
        throw CapExceeded("poset rank " + std::to_string(p.rank()) + " exceeds max_gorenstein_rank " +
                          std::to_string(caps.max_gorenstein_rank));
    }
    if (p.size() - 2 > caps.max_gorenstein_proper) {
        throw CapExceeded("poset has " + std::to_string(p.size() - 2) + " proper elements, above max_gorenstein_proper " +
                          std::to_string(caps.max_gorenstein_proper));
    }
    const SimplicialComplexData complex = order_complex(p);
    const int dim = complex.dimension();
    for (const auto& level : complex.faces_by_dimension()) {
        for (const Face& face : level) {
            const SimplicialComplexData link = complex.link(face);
            const int expected = dim - static_cast<int>(face.size());
            if (link.dimension() != expected || !is_sphere_betti(rational_betti(link, field), expected)) {
                return {false, face};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

struct SearchAbort {};

class FlagSearch {
public:
    FlagSearch(const FlagVector& v, const Caps& caps, std::vector<std::size_t> sizes)
        : v_(v), caps_(caps), d_(v.d()), sizes_(std::move(sizes)) {
        offsets_.assign(static_cast<std::size_t>(d_) + 2, 0);
        for (int r = 1; r <= d_; ++r) offsets_[r + 1] = offsets_[r] + sizes_[r];
        total_ = offsets_[d_ + 1];
        masks_.assign(static_cast<std::size_t>(d_) + 1, {});
        below_.assign(total_, boost::dynamic_bitset<>(total_));
        for (int r = 1; r <= d_; ++r) masks_[r].assign(sizes_[r], 0);
    }

    FlagDecision run() {
        try {
            if (check_partial_flags(1)) finish_level(1);
        } catch (const SearchAbort&) {
            result_.verdict = FlagDecision::Verdict::CapExceeded;
            result_.witness.reset();
            return result_;
        }
        return result_;
    }

private:
    std::size_t id(int r, std::size_t j) const { return offsets_[r] + j; }

    // Returns true once a witness has been found.
    bool finish_level(int r) {
        if (r == d_) return try_candidate();
        // Chains through consecutive ranks are exactly the cover pairs.
        const BigInt& edges = v_[(std::uint32_t{1} << (r - 1)) | (std::uint32_t{1} << r)];
        if (edges > sizes_[r] * sizes_[r + 1]) return false;
        return assign(r + 1, 0, edges.convert_to<std::size_t>(), 1, 0);
    }

    bool assign(int r, std::size_t j, std::size_t remaining, std::uint64_t min_mask, std::uint64_t seen) {
        if (++result_.nodes > caps_.max_search_nodes) throw SearchAbort{};
        const std::size_t lower = sizes_[r - 1];
        const std::uint64_t full = lower == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lower) - 1;
        if (j == sizes_[r]) {
            if (remaining != 0 || seen != full) return false;
            for (std::size_t t = 0; t < sizes_[r]; ++t) {
                auto& below = below_[id(r, t)];
                below.reset();
                for (std::size_t x = 0; x < lower; ++x) {
                    if (masks_[r][t] >> x & 1U) {
                        below.set(id(r - 1, x));
                        below |= below_[id(r - 1, x)];
                    }
                }
            }
            if (!check_partial_flags(r)) return false;
            return finish_level(r);
        }
        const std::size_t left_after = sizes_[r] - j - 1;
        for (std::uint64_t mask = min_mask; mask <= full && mask != 0; ++mask) {
            const auto bits = static_cast<std::size_t>(std::popcount(mask));
            if (bits + left_after > remaining) continue;
            if (remaining - bits > left_after * lower) continue;
            masks_[r][j] = mask;
            if (!diamond_ok(r, mask)) continue;
            if (assign(r, j + 1, remaining - bits, mask, seen | mask)) return true;
            if (mask == full) break;
        }
        return false;
    }

    // Rank-2 intervals of an Eulerian poset have exactly two middle elements.
    bool diamond_ok(int r, std::uint64_t mask) const {
        if (r == 2) return std::popcount(mask) == 2;
        for (std::size_t x = 0; x < sizes_[r - 2]; ++x) {
            int between = 0;
            for (std::size_t y = 0; y < sizes_[r - 1]; ++y) {
                if ((mask >> y & 1U) && (masks_[r - 1][y] >> x & 1U)) ++between;
            }
            if (between != 0 && between != 2) return false;
        }
        return true;
    }

    // Every coatom lies in a rank-2 interval below the top.
    bool coatoms_ok() const {
        if (d_ < 2) return true;
        std::vector<int> up(sizes_[d_ - 1], 0);
        for (std::size_t t = 0; t < sizes_[d_]; ++t) {
            for (std::size_t x = 0; x < sizes_[d_ - 1]; ++x) up[x] += static_cast<int>(masks_[d_][t] >> x & 1U);
        }
        return std::all_of(up.begin(), up.end(), [](int n) { return n == 2; });
    }

    // f_S for every S subset of [r] containing r.
    bool check_partial_flags(int r) {
        const std::uint32_t top_bit = std::uint32_t{1} << (r - 1);
        std::vector<BigInt> chains(total_);
        for (std::uint32_t low = 0; low < top_bit; ++low) {
            const std::uint32_t mask = low | top_bit;
            int prev = -1;
            for (int s = 1; s <= r; ++s) {
                if (!(mask >> (s - 1) & 1U)) continue;
                for (std::size_t t = 0; t < sizes_[s]; ++t) {
                    const std::size_t y = id(s, t);
                    if (prev < 0) {
                        chains[y] = 1;
                        continue;
                    }
                    BigInt acc = 0;
                    for (std::size_t u = 0; u < sizes_[prev]; ++u) {
                        const std::size_t x = id(prev, u);
                        if (below_[y].test(x)) acc += chains[x];
                    }
                    chains[y] = std::move(acc);
                }
                prev = s;
            }
            BigInt total = 0;
            for (std::size_t t = 0; t < sizes_[r]; ++t) total += chains[id(r, t)];
            if (total != v_[mask]) return false;
        }
        return true;
    }

    GradedPoset build() const {
        // 0: bottom, 1..total: levels, total + 1: top
        std::vector<int> ranks(total_ + 2);
        std::vector<GradedPoset::Cover> covers;
        ranks[total_ + 1] = d_ + 1;
        for (int r = 1; r <= d_; ++r) {
            for (std::size_t t = 0; t < sizes_[r]; ++t) {
                const std::size_t y = 1 + id(r, t);
                ranks[y] = r;
                if (r == 1) {
                    covers.emplace_back(0, y);
                } else {
                    for (std::size_t x = 0; x < sizes_[r - 1]; ++x) {
                        if (masks_[r][t] >> x & 1U) covers.emplace_back(1 + id(r - 1, x), y);
                    }
                }
                if (r == d_) covers.emplace_back(y, total_ + 1);
            }
        }
        return GradedPoset(std::move(ranks), std::move(covers));
    }

    bool try_candidate() {
        if (d_ == 1 ? sizes_[1] != 2 : !coatoms_ok()) return false;
        ++result_.candidates;
        GradedPoset poset = build();
        if (!is_gorenstein_star(poset, caps_)) return false;
        result_.verdict = FlagDecision::Verdict::Realizable;
        result_.witness = std::move(poset);
        return true;
    }

    const FlagVector& v_;
    const Caps& caps_;
    int d_;
    std::vector<std::size_t> sizes_;  // sizes_[r] for r in 1..d; sizes_[0] = 1
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
    std::vector<std::vector<std::uint64_t>> masks_;
    std::vector<boost::dynamic_bitset<>> below_;
    FlagDecision result_;
};

}  // namespace

FlagDecision decide_flag_gorenstein(const FlagVector& v, const Caps& caps) {
    const int d = v.d();
    if (d + 1 > caps.max_gorenstein_rank) return {FlagDecision::Verdict::CapExceeded, std::nullopt, 0, 0};
    if (d == 0) {
        GradedPoset point = point_poset();
        if (is_gorenstein_star(point, caps)) return {FlagDecision::Verdict::Realizable, point, 0, 1};
        return {FlagDecision::Verdict::NotRealizable, std::nullopt, 0, 1};
    }
    std::vector<std::size_t> sizes(static_cast<std::size_t>(d) + 1, 1);
    BigInt total = 0;
    for (int r = 1; r <= d; ++r) {
        const BigInt& n = v.rank_count(r);
        if (n == 0) return {FlagDecision::Verdict::NotRealizable, std::nullopt, 0, 0};
        total += n;
        if (total > caps.max_flag_elements) return {FlagDecision::Verdict::CapExceeded, std::nullopt, 0, 0};
        sizes[static_cast<std::size_t>(r)] = n.convert_to<std::size_t>();
    }
    for (int r = 1; r <= d; ++r) {
        if (sizes[r] > 64) return {FlagDecision::Verdict::CapExceeded, std::nullopt, 0, 0};
    }
    return FlagSearch(v, caps, std::move(sizes)).run();
}

}  // namespace fvlab
