#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlie/structure.hpp"

using namespace qlie;

namespace {
const QScalar kOne = QScalar::one();
QScalar q(int k = 1) { return QScalar::q_pow(k); }
FreeElt word2(Gen a, Gen b, QScalar c = QScalar::one()) { return FreeElt(Word{a, b}, c); }
}  // namespace

TEST_CASE("structure constants from the matrix-unit oracle") {
    ClassicalOracle oracle{3};
    CHECK(oracle.c_const(Gen{1, 2}, Gen{2, 3}) == -1);
    CHECK(oracle.c_const(Gen{1, 2}, Gen{1, 3}) == 1);
    for (int n = 1; n <= 4; ++n) {
        ClassicalOracle o{n};
        TLieStructure s = make_sl_q(n);
        for (const Gen& g : s.gens) CHECK(o.c_const(g, g) == 2);
    }
}

TEST_CASE("oracle agrees with the Cartan pairing closed form, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        ClassicalOracle o{n};
        TLieStructure s = make_sl_q(n);
        for (const Gen& x : s.gens)
            for (const Gen& y : s.gens) {
                int delta = (x.i == y.i) - (x.j == y.i) - (x.i == y.j) + (x.j == y.j);
                CHECK(o.c_const(x, y) == delta);
                CHECK(o.c_const(x, y) == o.c_const(y, x));
            }
    }
}

TEST_CASE("classical bracket on matrix units") {
    ClassicalOracle o{3};
    CHECK(o.bracket(Gen{1, 2}, Gen{2, 3}) == FreeElt(Word{Gen{1, 3}}));
    CHECK(o.bracket(Gen{1, 3}, Gen{2, 4}).is_zero());
    CHECK(o.bracket(Gen{2, 3}, Gen{1, 2}) == FreeElt(Word{Gen{1, 3}}, QScalar(-1)));
    for (const Gen& g : make_sl_q(3).gens) CHECK(o.bracket(g, g).is_zero());
}

TEST_CASE("presymmetry on ascending, descending, and equal pairs") {
    TLieStructure s = make_sl_q(3);
    CHECK(presymmetry(s, word2(Gen{1, 2}, Gen{2, 3})) == word2(Gen{2, 3}, Gen{1, 2}, q(-1)));
    CHECK(presymmetry(s, word2(Gen{2, 3}, Gen{1, 2})) == word2(Gen{1, 2}, Gen{2, 3}, q(1)));
    CHECK(presymmetry(s, word2(Gen{1, 2}, Gen{1, 2})) == word2(Gen{1, 2}, Gen{1, 2}));
    CHECK_THROWS_AS(presymmetry(s, FreeElt(Word{Gen{1, 2}})), std::invalid_argument);
}

TEST_CASE("swap scalars multiply to one and the presymmetry squares to one, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        TLieStructure s = make_sl_q(n);
        for (const Gen& x : s.gens)
            for (const Gen& y : s.gens) {
                CHECK(s.swap_scalar(x, y) * s.swap_scalar(y, x) == kOne);
                FreeElt xy = word2(x, y);
                CHECK(presymmetry(s, presymmetry(s, xy)) == xy);
            }
    }
}

TEST_CASE("deformed bracket table") {
    TLieStructure s = make_sl_q(3);
    CHECK(bracket(s, word2(Gen{1, 2}, Gen{2, 3})) == FreeElt(Word{Gen{1, 3}}));
    CHECK(bracket(s, word2(Gen{2, 3}, Gen{1, 2})) == FreeElt(Word{Gen{1, 3}}, -q(1)));
    CHECK(bracket(s, word2(Gen{1, 3}, Gen{2, 4})).is_zero());
    for (const Gen& g : s.gens) CHECK(bracket(s, word2(g, g)).is_zero());
}

TEST_CASE("pseudobracket table") {
    TLieStructure s = make_sl_q(3);
    const QScalar qq = q(1) - q(-1);
    CHECK(pseudobracket(s, word2(Gen{1, 3}, Gen{2, 4})) == word2(Gen{2, 3}, Gen{1, 4}, qq));
    CHECK(pseudobracket(s, word2(Gen{1, 2}, Gen{2, 3})).is_zero());
    CHECK(pseudobracket(s, word2(Gen{2, 4}, Gen{1, 3})) == word2(Gen{2, 3}, Gen{1, 4}, -qq));
    for (const Gen& g : s.gens) CHECK(pseudobracket(s, word2(g, g)).is_zero());
}

TEST_CASE("structure constant additivity along nonzero brackets, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        TLieStructure s = make_sl_q(n);
        ClassicalOracle o{n};
        for (const Gen& ab : s.gens)
            for (const Gen& x : s.gens)
                for (const Gen& y : s.gens) {
                    FreeElt br = bracket(s, word2(x, y));
                    if (br.is_zero()) continue;
                    REQUIRE(br.term_count() == 1);
                    const Word& w = br.terms().begin()->first;
                    REQUIRE(w.size() == 1);
                    CHECK(o.c_const(ab, w[0]) == o.c_const(ab, x) + o.c_const(ab, y));
                }
    }
}

TEST_CASE("bracket outputs respect the order sandwich, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        TLieStructure s = make_sl_q(n);
        for (const Gen& a : s.gens)
            for (const Gen& b : s.gens)
                for (const Gen& c : s.gens) {
                    if (!(a < b && b < c)) continue;
                    FreeElt ab = bracket(s, word2(a, b));
                    if (!ab.is_zero()) {
                        const Word& w = ab.terms().begin()->first;
                        CHECK(w[0] < c);
                    }
                    FreeElt bc = bracket(s, word2(b, c));
                    if (!bc.is_zero()) {
                        const Word& w = bc.terms().begin()->first;
                        CHECK(a < w[0]);
                    }
                }
    }
}

TEST_CASE("sign presymmetry from a degree assignment") {
    TLieStructure g = make_sign_structure({1, 5, 2, 2});
    const Gen s1 = g.gens[0], s2 = g.gens[1], s3 = g.gens[2], s4 = g.gens[3];
    // (deg-1)(deg-1) even: plain swap.
    CHECK(presymmetry(g, word2(s1, s2)) == word2(s2, s1));
    // deg 2, deg 2: exponent 1, sign flip.
    CHECK(presymmetry(g, word2(s3, s4)) == word2(s4, s3, QScalar(-1)));
    // S squares to one for any degrees.
    for (const Gen& x : g.gens)
        for (const Gen& y : g.gens) {
            FreeElt xy = word2(x, y);
            CHECK(presymmetry(g, presymmetry(g, xy)) == xy);
            CHECK(g.swap_scalar(x, y) * g.swap_scalar(y, x) == kOne);
        }
}

TEST_CASE("corrupted copies differ only at the requested entry") {
    TLieStructure s = make_sl_q(2);
    TLieStructure c = s.with_bracket_entry(Gen{1, 2}, Gen{2, 3}, FreeElt(Word{Gen{1, 3}}, QScalar(2)));
    CHECK(bracket(c, word2(Gen{1, 2}, Gen{2, 3})) == FreeElt(Word{Gen{1, 3}}, QScalar(2)));
    CHECK(bracket(c, word2(Gen{2, 3}, Gen{1, 2})) == bracket(s, word2(Gen{2, 3}, Gen{1, 2})));
    CHECK(bracket(s, word2(Gen{1, 2}, Gen{2, 3})) == FreeElt(Word{Gen{1, 3}}));
}
