#include "fvlab/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fvlab {

SimplicialComplexData::SimplicialComplexData(std::vector<Face> facets) {
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto& f : facets) {
        const bool contained = std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) {
            return std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!contained) facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
}

std::vector<std::size_t> SimplicialComplexData::vertices() const {
    std::set<std::size_t> v;
    for (const auto& f : facets_) v.insert(f.begin(), f.end());
    return {v.begin(), v.end()};
}

int SimplicialComplexData::dimension() const {
    int dim = -2;
    for (const auto& f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

std::vector<std::vector<Face>> SimplicialComplexData::faces_by_dimension() const {
    if (is_void()) return {};
    const auto levels = static_cast<std::size_t>(dimension() + 2);
    std::vector<std::set<Face>> faces(levels);
    for (const auto& facet : facets_) {
        const std::size_t n = facet.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1U) sub.push_back(facet[i]);
            }
            faces[sub.size()].insert(std::move(sub));
        }
    }
    std::vector<std::vector<Face>> out;
    out.reserve(levels);
    for (auto& s : faces) out.emplace_back(s.begin(), s.end());
    return out;
}

SimplicialComplexData SimplicialComplexData::link(const Face& f) const {
    Face sorted = f;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Face> out;
    for (const auto& facet : facets_) {
        if (!std::includes(facet.begin(), facet.end(), sorted.begin(), sorted.end())) continue;
        Face rest;
        std::set_difference(facet.begin(), facet.end(), sorted.begin(), sorted.end(), std::back_inserter(rest));
        out.push_back(std::move(rest));
    }
    return SimplicialComplexData(std::move(out));
}

SimplicialComplexData order_complex(const GradedPoset& p) {
    // Maximal chains of the proper part run through every rank 1..d.
    std::vector<Face> chains;
    if (p.d() == 0) return SimplicialComplexData({Face{}});
    std::vector<Face> partial;
    for (std::size_t x : p.level(1)) partial.push_back({x});
    for (int r = 2; r <= p.d(); ++r) {
        std::vector<Face> next;
        for (const auto& chain : partial) {
            for (std::size_t y : p.upper_covers(chain.back())) {
                Face extended = chain;
                extended.push_back(y);
                next.push_back(std::move(extended));
            }
        }
        partial = std::move(next);
    }
    return SimplicialComplexData(std::move(partial));
}

namespace {

constexpr std::int64_t kPrime = 2147483647;

std::int64_t mod_inverse(std::int64_t a) {
    std::int64_t result = 1, base = a % kPrime, exp = kPrime - 2;
    while (exp > 0) {
        if (exp & 1) result = result * base % kPrime;
        base = base * base % kPrime;
        exp >>= 1;
    }
    return result;
}

std::size_t rank_mod_prime(std::vector<std::vector<std::int64_t>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m) {
        for (auto& v : row) v = ((v % kPrime) + kPrime) % kPrime;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const std::int64_t inv = mod_inverse(m[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const std::int64_t factor = m[r][c] * inv % kPrime;
            for (std::size_t j = c; j < cols; ++j) {
                m[r][j] = ((m[r][j] - factor * m[rank][j]) % kPrime + kPrime) % kPrime;
            }
        }
        ++rank;
    }
    return rank;
}

// Bareiss fraction-free elimination; every intermediate entry is a minor, so divisions are exact.
std::size_t rank_rational(const std::vector<std::vector<std::int64_t>>& input) {
    if (input.empty()) return 0;
    const std::size_t rows = input.size(), cols = input[0].size();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = input[r][c];
    }
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[r][j] = (m[r][j] * m[rank][c] - m[r][c] * m[rank][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, HomologyField field) {
    return field == HomologyField::Rational ? rank_rational(rows) : rank_mod_prime(std::move(rows));
}

std::vector<std::size_t> rational_betti(const SimplicialComplexData& k, HomologyField field) {
    const auto faces = k.faces_by_dimension();
    if (faces.empty()) return {};
    const std::size_t levels = faces.size();
    // boundary_rank[j] = rank of the map from level j to level j-1 (level j holds faces with j vertices)
    std::vector<std::size_t> boundary_rank(levels + 1, 0);
    for (std::size_t j = 1; j < levels; ++j) {
        std::map<Face, std::size_t> index;
        for (std::size_t i = 0; i < faces[j - 1].size(); ++i) index[faces[j - 1][i]] = i;
        std::vector<std::vector<std::int64_t>> matrix(faces[j].size(),
                                                      std::vector<std::int64_t>(faces[j - 1].size(), 0));
        for (std::size_t row = 0; row < faces[j].size(); ++row) {
            const Face& face = faces[j][row];
            for (std::size_t drop = 0; drop < face.size(); ++drop) {
                Face sub;
                sub.reserve(face.size() - 1);
                for (std::size_t t = 0; t < face.size(); ++t) {
                    if (t != drop) sub.push_back(face[t]);
                }
                matrix[row][index.at(sub)] = drop % 2 == 0 ? 1 : -1;
            }
        }
        boundary_rank[j] = matrix_rank(std::move(matrix), field);
    }
    std::vector<std::size_t> betti(levels);
    for (std::size_t j = 0; j < levels; ++j) {
        betti[j] = faces[j].size() - boundary_rank[j] - boundary_rank[j + 1];
    }
    return betti;
}

}  // namespace fvlab
