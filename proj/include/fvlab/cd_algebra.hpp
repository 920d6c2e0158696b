#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fvlab/bigint.hpp"
#include "fvlab/macaulay.hpp"
#include "fvlab/poset.hpp"

namespace fvlab {

/// Homogeneous noncommutative polynomial over {a, b}; words map to nonzero coefficients.
class AbPolynomial {
public:
    explicit AbPolynomial(int degree = 0);

    int degree() const { return degree_; }
    const std::map<std::string, BigInt>& terms() const { return terms_; }
    BigInt coefficient(std::string_view word) const;
    bool is_zero() const { return terms_.empty(); }

    /// Adds coef * word; throws InvalidInput on foreign letters or wrong length.
    void add(std::string_view word, const BigInt& coef);

    AbPolynomial& operator-=(const AbPolynomial& other);
    bool operator==(const AbPolynomial&) const = default;

private:
    int degree_;
    std::map<std::string, BigInt> terms_;
};

/// Homogeneous noncommutative polynomial over {c, d} with deg c = 1 and deg d = 2.
class CdPolynomial {
public:
    explicit CdPolynomial(int degree = 0);

    int degree() const { return degree_; }
    const std::map<std::string, BigInt>& terms() const { return terms_; }
    BigInt coefficient(std::string_view word) const;
    bool is_zero() const { return terms_.empty(); }

    void add(std::string_view word, const BigInt& coef);

    bool operator==(const CdPolynomial&) const = default;

private:
    int degree_;
    std::map<std::string, BigInt> terms_;
};

/// Raised by ab_to_cd when the input is not in the span of expanded cd-words.
class CdInexpressible : public std::domain_error {
public:
    explicit CdInexpressible(AbPolynomial residual);
    const AbPolynomial& residual() const { return residual_; }

private:
    AbPolynomial residual_;
};

/// Degree of a cd-word (c counts 1, d counts 2); throws on other letters.
int cd_word_degree(std::string_view word);

/// Gamma: f_S on the word with b exactly at the positions in S.
AbPolynomial flag_to_ab(const FlagVector& v);

/// Psi(a, b) = Gamma(a - b, b).
AbPolynomial ab_index(const AbPolynomial& gamma);

/// Gamma(a, b) = Psi(a + b, b), the inverse of ab_index.
AbPolynomial ab_index_inverse(const AbPolynomial& psi);

/// The cd-polynomial whose expansion under c = a + b, d = ab + ba equals p.
///
/// Triangular elimination: the indicator of a cd-word (c -> a, d -> ab)
/// occurs once in its own expansion and never in the expansion of a word
/// with more d's, or of a lexicographically larger word with as many d's.
/// Words are therefore solved by increasing d-count, then lexicographically.
/// Throws CdInexpressible with the leftover residual.
CdPolynomial ab_to_cd(const AbPolynomial& p);

AbPolynomial cd_expand(const CdPolynomial& q);

/// The flag vector of rank parameter d whose cd-index is q; needs [c^d] = 1.
FlagVector cd_to_flag(const CdPolynomial& q, int d);

/// Full pipeline from chain counts: flag vector, Gamma, Psi, Phi.
CdPolynomial cd_index(const GradedPoset& p);

CdPolynomial cd_mul(const CdPolynomial& p, const CdPolynomial& q);

/// All cd-words of the given degree in lexicographic order with c < d.
std::vector<std::string> cd_words(int degree);

/// Phi of the m-gon: c^2 + (m - 2) d.
CdPolynomial polygon_cd(int m);

struct StanleySphere {
    CdPolynomial cd;
    GradedPoset poset;
};

/// Join of B_2 for each c and the m-gon for each d in `word`.
///
/// The cd-index is built by multiplying factor indices and checked against
/// the chain-counting pipeline on the joined poset; a mismatch throws
/// std::logic_error.
StanleySphere stanley_sphere(std::string_view word, int m);

/// Coefficients of every non-c^d word in cd_words order; needs [c^d] = 1 and nonnegative coefficients.
OrthantPoint cone_coordinates(const CdPolynomial& q);

}  // namespace fvlab
