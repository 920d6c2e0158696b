#include "fvlab/cd_algebra.hpp"

#include <algorithm>
#include <cstdint>

namespace fvlab {

AbPolynomial::AbPolynomial(int degree) : degree_(degree) {
    if (degree < 0) throw InvalidInput("negative degree");
}

BigInt AbPolynomial::coefficient(std::string_view word) const {
    auto it = terms_.find(std::string(word));
    return it == terms_.end() ? BigInt(0) : it->second;
}

void AbPolynomial::add(std::string_view word, const BigInt& coef) {
    if (static_cast<int>(word.size()) != degree_) {
        throw InvalidInput("ab-word '" + std::string(word) + "' does not have degree " + std::to_string(degree_));
    }
    if (word.find_first_not_of("ab") != std::string_view::npos) {
        throw InvalidInput("ab-word '" + std::string(word) + "' has letters other than a, b");
    }
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::string(word), coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

AbPolynomial& AbPolynomial::operator-=(const AbPolynomial& other) {
    if (other.degree_ != degree_) throw InvalidInput("subtracting ab-polynomials of different degrees");
    for (const auto& [word, coef] : other.terms_) add(word, -coef);
    return *this;
}

int cd_word_degree(std::string_view word) {
    int deg = 0;
    for (char ch : word) {
        if (ch == 'c') {
            deg += 1;
        } else if (ch == 'd') {
            deg += 2;
        } else {
            throw InvalidInput("cd-word '" + std::string(word) + "' has letters other than c, d");
        }
    }
    return deg;
}

CdPolynomial::CdPolynomial(int degree) : degree_(degree) {
    if (degree < 0) throw InvalidInput("negative degree");
}

BigInt CdPolynomial::coefficient(std::string_view word) const {
    auto it = terms_.find(std::string(word));
    return it == terms_.end() ? BigInt(0) : it->second;
}

void CdPolynomial::add(std::string_view word, const BigInt& coef) {
    if (cd_word_degree(word) != degree_) {
        throw InvalidInput("cd-word '" + std::string(word) + "' does not have degree " + std::to_string(degree_));
    }
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::string(word), coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

CdInexpressible::CdInexpressible(AbPolynomial residual)
    : std::domain_error("ab-polynomial is not expressible in c = a + b, d = ab + ba"),
      residual_(std::move(residual)) {}

AbPolynomial flag_to_ab(const FlagVector& v) {
    AbPolynomial gamma(v.d());
    const std::uint32_t subsets = std::uint32_t{1} << v.d();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::string word(static_cast<std::size_t>(v.d()), 'a');
        for (int i = 0; i < v.d(); ++i) {
            if (mask >> i & 1U) word[static_cast<std::size_t>(i)] = 'b';
        }
        gamma.add(word, v[mask]);
    }
    return gamma;
}

namespace {

// a -> a + sign * b, expanded letterwise.
AbPolynomial substitute_a(const AbPolynomial& p, int sign) {
    AbPolynomial out(p.degree());
    for (const auto& [word, coef] : p.terms()) {
        std::vector<std::size_t> a_positions;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (word[i] == 'a') a_positions.push_back(i);
        }
        const std::uint64_t choices = std::uint64_t{1} << a_positions.size();
        for (std::uint64_t pick = 0; pick < choices; ++pick) {
            std::string image = word;
            int flipped = 0;
            for (std::size_t t = 0; t < a_positions.size(); ++t) {
                if (pick >> t & 1U) {
                    image[a_positions[t]] = 'b';
                    ++flipped;
                }
            }
            out.add(image, sign < 0 && flipped % 2 == 1 ? BigInt(-coef) : coef);
        }
    }
    return out;
}

void expand_word(std::string_view word, std::size_t pos, std::string& prefix, const BigInt& coef,
                 AbPolynomial& out) {
    if (pos == word.size()) {
        out.add(prefix, coef);
        return;
    }
    const std::size_t mark = prefix.size();
    if (word[pos] == 'c') {
        for (const char* image : {"a", "b"}) {
            prefix += image;
            expand_word(word, pos + 1, prefix, coef, out);
            prefix.resize(mark);
        }
    } else {
        for (const char* image : {"ab", "ba"}) {
            prefix += image;
            expand_word(word, pos + 1, prefix, coef, out);
            prefix.resize(mark);
        }
    }
}

AbPolynomial expand_single(std::string_view word, const BigInt& coef, int degree) {
    AbPolynomial out(degree);
    std::string prefix;
    expand_word(word, 0, prefix, coef, out);
    return out;
}

std::string indicator_word(std::string_view cd_word) {
    std::string out;
    for (char ch : cd_word) out += ch == 'c' ? "a" : "ab";
    return out;
}

void collect_words(int remaining, std::string& prefix, std::vector<std::string>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    prefix.push_back('c');
    collect_words(remaining - 1, prefix, out);
    prefix.pop_back();
    if (remaining >= 2) {
        prefix.push_back('d');
        collect_words(remaining - 2, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

AbPolynomial ab_index(const AbPolynomial& gamma) { return substitute_a(gamma, -1); }

AbPolynomial ab_index_inverse(const AbPolynomial& psi) { return substitute_a(psi, +1); }

std::vector<std::string> cd_words(int degree) {
    if (degree < 0) throw InvalidInput("negative degree");
    std::vector<std::string> out;
    std::string prefix;
    collect_words(degree, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

CdPolynomial ab_to_cd(const AbPolynomial& p) {
    std::vector<std::string> order = cd_words(p.degree());
    std::stable_sort(order.begin(), order.end(), [](const std::string& x, const std::string& y) {
        return std::count(x.begin(), x.end(), 'd') < std::count(y.begin(), y.end(), 'd');
    });
    AbPolynomial residual = p;
    CdPolynomial phi(p.degree());
    for (const auto& word : order) {
        const BigInt coef = residual.coefficient(indicator_word(word));
        if (coef == 0) continue;
        phi.add(word, coef);
        residual -= expand_single(word, coef, p.degree());
    }
    if (!residual.is_zero()) throw CdInexpressible(std::move(residual));
    return phi;
}

AbPolynomial cd_expand(const CdPolynomial& q) {
    AbPolynomial out(q.degree());
    std::string prefix;
    for (const auto& [word, coef] : q.terms()) expand_word(word, 0, prefix, coef, out);
    return out;
}

FlagVector cd_to_flag(const CdPolynomial& q, int d) {
    if (q.degree() != d) throw InvalidInput("cd-polynomial degree does not match d");
    const AbPolynomial gamma = ab_index_inverse(cd_expand(q));
    const std::uint32_t subsets = std::uint32_t{1} << d;
    std::vector<BigInt> counts(subsets);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::string word(static_cast<std::size_t>(d), 'a');
        for (int i = 0; i < d; ++i) {
            if (mask >> i & 1U) word[static_cast<std::size_t>(i)] = 'b';
        }
        counts[mask] = gamma.coefficient(word);
    }
    return FlagVector(d, std::move(counts));
}

CdPolynomial cd_index(const GradedPoset& p) { return ab_to_cd(ab_index(flag_to_ab(flag_vector(p)))); }

CdPolynomial cd_mul(const CdPolynomial& p, const CdPolynomial& q) {
    CdPolynomial out(p.degree() + q.degree());
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) out.add(wp + wq, cp * cq);
    }
    return out;
}

CdPolynomial polygon_cd(int m) {
    if (m < 3) throw InvalidInput("polygon needs m >= 3");
    CdPolynomial out(2);
    out.add("cc", 1);
    out.add("d", m - 2);
    return out;
}

StanleySphere stanley_sphere(std::string_view word, int m) {
    if (word.empty()) throw InvalidInput("stanley_sphere needs a nonempty cd-word");
    cd_word_degree(word);
    if (m < 3) throw InvalidInput("stanley_sphere needs m >= 3");
    CdPolynomial cd(0);
    cd.add("", 1);
    GradedPoset poset = point_poset();
    CdPolynomial c_factor(1);
    c_factor.add("c", 1);
    const CdPolynomial d_factor = polygon_cd(m);
    for (char letter : word) {
        if (letter == 'c') {
            cd = cd_mul(cd, c_factor);
            poset = join(poset, boolean_lattice(2));
        } else {
            cd = cd_mul(cd, d_factor);
            poset = join(poset, polygon(m));
        }
    }
    if (cd_index(poset) != cd) {
        throw std::logic_error("join poset and factor product disagree for word '" + std::string(word) + "'");
    }
    return {std::move(cd), std::move(poset)};
}

OrthantPoint cone_coordinates(const CdPolynomial& q) {
    const std::string apex(static_cast<std::size_t>(q.degree()), 'c');
    if (q.coefficient(apex) != 1) throw InvalidInput("cone coordinates need [c^d] = 1");
    std::vector<BigInt> coords;
    for (const auto& word : cd_words(q.degree())) {
        if (word != apex) coords.push_back(q.coefficient(word));
    }
    return OrthantPoint(std::move(coords));
}

}  // namespace fvlab
