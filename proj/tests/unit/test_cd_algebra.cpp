#include <doctest.h>

#include "fvlab/cd_algebra.hpp"
#include "fvlab/poset.hpp"

using namespace fvlab;

namespace {
CdPolynomial cd(int degree, std::initializer_list<std::pair<const char*, long>> terms) {
    CdPolynomial q(degree);
    for (const auto& [w, c] : terms) q.add(w, c);
    return q;
}

AbPolynomial ab(int degree, std::initializer_list<std::pair<const char*, long>> terms) {
    AbPolynomial p(degree);
    for (const auto& [w, c] : terms) p.add(w, c);
    return p;
}
}  // namespace

TEST_CASE("flag to ab") {
    CHECK(flag_to_ab(flag_vector(boolean_lattice(2))) == ab(1, {{"a", 1}, {"b", 2}}));
    for (int m = 3; m <= 7; ++m) {
        CHECK(flag_to_ab(flag_vector(polygon(m))) == ab(2, {{"aa", 1}, {"ba", m}, {"ab", m}, {"bb", 2 * m}}));
    }
    // (a + 2b)^3
    const AbPolynomial gamma = flag_to_ab(flag_vector(dihedral_sphere(3)));
    CHECK(gamma.coefficient("aaa") == 1);
    CHECK(gamma.coefficient("aba") == 2);
    CHECK(gamma.coefficient("bbb") == 8);
}

TEST_CASE("ab-index substitution") {
    CHECK(ab_index(ab(1, {{"a", 1}, {"b", 2}})) == ab(1, {{"a", 1}, {"b", 1}}));
    CHECK(ab_index(ab(1, {{"b", 1}})) == ab(1, {{"b", 1}}));
    for (int m = 3; m <= 7; ++m) {
        CHECK(ab_index(flag_to_ab(flag_vector(polygon(m)))) ==
              ab(2, {{"aa", 1}, {"ab", m - 1}, {"ba", m - 1}, {"bb", 1}}));
    }
    const AbPolynomial gamma = flag_to_ab(flag_vector(boolean_lattice(4)));
    CHECK(ab_index_inverse(ab_index(gamma)) == gamma);
}

TEST_CASE("cd extraction and expansion") {
    CHECK(ab_to_cd(ab(1, {{"a", 1}, {"b", 1}})) == cd(1, {{"c", 1}}));
    for (int m = 3; m <= 12; ++m) {
        const CdPolynomial phi = cd_index(polygon(m));
        CHECK(phi == cd(2, {{"cc", 1}, {"d", m - 2}}));
        CHECK(cd_expand(phi) == ab_index(flag_to_ab(flag_vector(polygon(m)))));
        CHECK(cd_to_flag(phi, 2) == flag_vector(polygon(m)));
    }
    for (int d = 1; d <= 5; ++d) CHECK(cd_index(dihedral_sphere(d)) == cd(d, {{std::string(d, 'c').c_str(), 1}}));
    CHECK(cd_expand(cd(2, {{"cc", 1}})) == ab(2, {{"aa", 1}, {"ab", 1}, {"ba", 1}, {"bb", 1}}));
    CHECK(cd_expand(cd(2, {{"d", 1}})) == ab(2, {{"ab", 1}, {"ba", 1}}));
    CHECK(cd_to_flag(cd(1, {{"c", 1}}), 1) == flag_vector(boolean_lattice(2)));
    CHECK(cd_to_flag(cd(4, {{"cccc", 1}}), 4) == flag_vector(dihedral_sphere(4)));
    CHECK(cd_index(boolean_lattice(4)) == cd(3, {{"ccc", 1}, {"cd", 2}, {"dc", 2}}));
}

TEST_CASE("non-Eulerian input has no cd-index") {
    CHECK_THROWS_AS(cd_index(path_poset(2)), CdInexpressible);
    try {
        ab_to_cd(ab(2, {{"ab", 1}}));
        FAIL("expected CdInexpressible");
    } catch (const CdInexpressible& e) {
        CHECK_FALSE(e.residual().is_zero());
    }
}

TEST_CASE("round trip on constructed Eulerian posets") {
    std::vector<GradedPoset> corpus{boolean_lattice(5), boolean_lattice(6), polygon(7), dihedral_sphere(5),
                                    join(polygon(4), polygon(5)), join(boolean_lattice(3), polygon(3)),
                                    stanley_sphere("cdc", 4).poset};
    for (const auto& p : corpus) {
        const FlagVector v = flag_vector(p);
        CHECK(cd_to_flag(ab_to_cd(ab_index(flag_to_ab(v))), v.d()) == v);
    }
}

TEST_CASE("cd multiplication and joins") {
    CHECK(cd_mul(cd(1, {{"c", 1}}), cd(1, {{"c", 1}})) == cd(2, {{"cc", 1}}));
    CHECK(cd_mul(cd(1, {{"c", 1}}), cd(2, {{"cc", 1}, {"d", 3}})) == cd(3, {{"ccc", 1}, {"cd", 3}}));
    const CdPolynomial q = cd(2, {{"cc", 1}, {"d", 1}});
    CHECK(cd_mul(q, q) == cd(4, {{"cccc", 1}, {"ccd", 1}, {"dcc", 1}, {"dd", 1}}));
    for (int m = 3; m <= 8; ++m) {
        const CdPolynomial joined = cd_index(join(boolean_lattice(2), polygon(m)));
        CHECK(joined == cd(3, {{"ccc", 1}, {"cd", m - 2}}));
        CHECK(joined == cd_mul(cd_index(boolean_lattice(2)), cd_index(polygon(m))));
    }
    CHECK(cd_index(join(polygon(4), polygon(6))) == cd_mul(polygon_cd(4), polygon_cd(6)));
}

TEST_CASE("cd words") {
    const std::vector<std::size_t> fib{1, 1, 2, 3, 5, 8, 13, 21};
    for (int d = 0; d < 8; ++d) CHECK(cd_words(d).size() == fib[d]);
    CHECK(cd_words(1) == std::vector<std::string>{"c"});
    CHECK(cd_words(3) == std::vector<std::string>{"ccc", "cd", "dc"});
    CHECK(cd_words(4) == std::vector<std::string>{"cccc", "ccd", "cdc", "dcc", "dd"});
    CHECK(cd_word_degree("cdc") == 4);
    CHECK_THROWS_AS(cd_word_degree("cx"), InvalidInput);
}

TEST_CASE("Stanley spheres") {
    const StanleySphere c = stanley_sphere("c", 5);
    CHECK(c.cd == cd(1, {{"c", 1}}));
    CHECK(flag_vector(c.poset) == flag_vector(boolean_lattice(2)));
    CHECK(stanley_sphere("d", 5).cd == cd(2, {{"cc", 1}, {"d", 3}}));
    const StanleySphere cd4 = stanley_sphere("cd", 4);
    CHECK(cd4.cd == cd(3, {{"ccc", 1}, {"cd", 2}}));
    CHECK(cd_index(cd4.poset) == cd4.cd);
    for (const auto& w : cd_words(4)) {
        for (int m = 3; m <= 6; ++m) {
            const StanleySphere s = stanley_sphere(w, m);
            for (const auto& [word, coef] : s.cd.terms()) CHECK(coef >= 0);
        }
    }
}

TEST_CASE("cone coordinates") {
    CHECK(cone_coordinates(cd(4, {{"cccc", 1}})).coords() == std::vector<BigInt>{0, 0, 0, 0});
    CHECK(cone_coordinates(polygon_cd(9)).coords() == std::vector<BigInt>{7});
    for (int m = 3; m <= 10; ++m) {
        const BigInt k = m - 2;
        CHECK(cone_coordinates(stanley_sphere("dd", m).cd).coords() == std::vector<BigInt>{k, 0, k, k * k});
    }
    CHECK_THROWS_AS(cone_coordinates(cd(2, {{"cc", 2}})), InvalidInput);
}
