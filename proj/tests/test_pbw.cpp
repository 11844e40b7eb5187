#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlie/graded.hpp"
#include "qlie/parse.hpp"
#include "qlie/pbw.hpp"

using namespace qlie;

namespace {

QScalar q(int k = 1) { return QScalar::q_pow(k); }

RewriteSystem env(int n) { return {make_sl_q(n), RewriteMode::Enveloping, 10000}; }
RewriteSystem sym(int n) { return {make_sl_q(n), RewriteMode::Symmetric, 10000}; }

std::vector<Word> all_words(const TLieStructure& s, int max_len) {
    std::vector<Word> words{Word{}};
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (const Gen& g : s.gens) {
                Word e = w;
                e.factors.push_back(g);
                next.push_back(e);
            }
        words.insert(words.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return words;
}

}  // namespace

TEST_CASE("single rewrite steps match the defining relation") {
    RewriteSystem rs = env(3);
    CHECK(rewrite_step(rs, Word{Gen{2, 3}, Gen{1, 2}}) ==
          parse_element("q*e(1,2)*e(2,3) - q*e(1,3)", 3));
    CHECK(rewrite_step(sym(3), Word{Gen{2, 3}, Gen{1, 2}}) ==
          parse_element("q*e(1,2)*e(2,3)", 3));
    CHECK(rewrite_step(rs, Word{Gen{2, 4}, Gen{1, 3}}) ==
          parse_element("e(1,3)*e(2,4) - (q - q^-1)*e(2,3)*e(1,4)", 3));
    CHECK_THROWS_AS(rewrite_step(rs, Word{Gen{1, 2}, Gen{2, 3}}), NoRedex);
}

TEST_CASE("normal forms of the golden words") {
    RewriteSystem rs = env(3);
    CHECK(normal_form(rs, FreeElt(Word{Gen{1, 3}, Gen{1, 2}})) ==
          parse_element("q^-1*e(1,2)*e(1,3)", 3));
    FreeElt sorted_word(Word{Gen{1, 2}, Gen{2, 3}});
    CHECK(normal_form(rs, sorted_word) == sorted_word);

    FreeElt reduced = normal_form(rs, FreeElt(Word{Gen{2, 3}, Gen{1, 3}, Gen{1, 2}}));
    for (const auto& [w, c] : reduced.terms()) {
        CHECK(w.nondecreasing());
        CHECK(w.size() <= 3);
    }
}

TEST_CASE("normal form is the identity on nondecreasing words") {
    RewriteSystem rs = env(3);
    for (const Word& w : sorted_monomials(rs.structure, 3)) {
        FreeElt x(w);
        CHECK(normal_form(rs, x) == x);
    }
}

TEST_CASE("reduction strategies agree on all short words, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        RewriteSystem rs = env(n);
        for (const Word& w : all_words(rs.structure, 3)) {
            FreeElt x(w);
            FreeElt left = normal_form(rs, x, Strategy::Leftmost);
            FreeElt right = normal_form(rs, x, Strategy::Rightmost);
            INFO("n=" << n << " word=" << w.str());
            CHECK(left == right);
        }
    }
}

TEST_CASE("normal forms never lengthen words and their tops are bracket free") {
    TLieStructure s = make_sl_q(3);
    RewriteSystem rs{s, RewriteMode::Enveloping, 10000};

    // The same structure with the brackets erased computes the
    // length-preserving part of the rewriting.
    TLieStructure flat = s;
    for (auto& [key, value] : flat.bracket_table) value = FreeElt::zero();
    RewriteSystem flat_rs{flat, RewriteMode::Enveloping, 10000};

    for (const Word& w : all_words(s, 3)) {
        FreeElt nf = normal_form(rs, FreeElt(w));
        FreeElt top;
        for (const auto& [u, c] : nf.terms()) {
            CHECK(u.size() <= w.size());
            if (u.size() == w.size()) top.add_term(u, c);
        }
        INFO("word=" << w.str());
        CHECK(top == normal_form(flat_rs, FreeElt(w)));
    }
}

TEST_CASE("length-two tops equal the symmetric sort exactly in the pseudo-free range") {
    for (int n = 1; n <= 2; ++n) {
        TLieStructure s = make_sl_q(n);
        RewriteSystem e{s, RewriteMode::Enveloping, 10000};
        RewriteSystem m{s, RewriteMode::Symmetric, 10000};
        for (const Gen& x : s.gens)
            for (const Gen& y : s.gens) {
                FreeElt xy(Word{x, y});
                FreeElt nf = normal_form(e, xy);
                FreeElt top;
                for (const auto& [u, c] : nf.terms())
                    if (u.size() == 2) top.add_term(u, c);
                CHECK(top == normal_form(m, xy));
            }
    }
    // From three generator rows on, pseudobracket corrections live at full
    // length; the first such pair is frozen here.
    RewriteSystem e3 = env(3);
    FreeElt nf = normal_form(e3, FreeElt(Word{Gen{2, 4}, Gen{1, 3}}));
    CHECK(nf == parse_element("e(1,3)*e(2,4) - (q - q^-1)*e(2,3)*e(1,4)", 3));
    CHECK(nf != normal_form(sym(3), FreeElt(Word{Gen{2, 4}, Gen{1, 3}})));
}

TEST_CASE("symmetric normal forms of swapped pairs differ by the swap scalar") {
    for (int n = 1; n <= 4; ++n) {
        RewriteSystem rs = sym(n);
        const TLieStructure& s = rs.structure;
        for (const Gen& x : s.gens)
            for (const Gen& y : s.gens) {
                FreeElt xy = normal_form(rs, FreeElt(Word{x, y}));
                FreeElt yx = normal_form(rs, FreeElt(Word{y, x}));
                CHECK(xy == s.swap_scalar(x, y) * yx);
            }
    }
}

TEST_CASE("overlap confluence holds for n <= 4 in both modes") {
    for (int n = 1; n <= 4; ++n) {
        ConfluenceReport r = overlap_confluence(env(n));
        CHECK(r.pass);
        const long long N = static_cast<long long>(make_sl_q(n).gens.size());
        CHECK(r.overlap_count == N * (N - 1) * (N - 2) / 6 + N * (N - 1));
        ConfluenceReport rs = overlap_confluence(sym(n));
        CHECK(rs.pass);
    }
}

TEST_CASE("confluence counts for the six-generator structure") {
    ConfluenceReport r = overlap_confluence(env(3));
    CHECK(r.overlap_count == 20 + 30);
    for (const auto& o : r.outcomes) CHECK(o.agree);
}

TEST_CASE("independence ranks at small scale") {
    RankReport r1 = pbw_independence(env(1), 5);
    CHECK(r1.monomial_count == 6);
    CHECK(r1.rank == 6);
    CHECK(r1.independent);

    RankReport r2 = pbw_independence(env(2), 2);
    CHECK(r2.monomial_count == 10);
    CHECK(r2.rank == 10);
    CHECK(r2.independent);

    RankReport r2s = pbw_independence(sym(2), 3);
    CHECK(r2s.independent);
}

TEST_CASE("termination guard raises a diagnosable error") {
    RewriteSystem rs = env(2);
    rs.max_steps = 1;
    try {
        normal_form(rs, FreeElt(Word{Gen{2, 3}, Gen{1, 3}, Gen{1, 2}}));
        CHECK(false);
    } catch (const GuardExceeded& e) {
        CHECK(e.trace().size() == 1);
        CHECK(e.trace()[0].word == Word{Gen{2, 3}, Gen{1, 3}, Gen{1, 2}});
    }
}

TEST_CASE("traces replay the reduction") {
    RewriteSystem rs = env(2);
    std::vector<TraceStep> trace;
    FreeElt nf = normal_form(rs, FreeElt(Word{Gen{2, 3}, Gen{1, 2}}), Strategy::Leftmost, &trace);
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].word == Word{Gen{2, 3}, Gen{1, 2}});
    CHECK(trace[0].position == 1);
    CHECK(trace[0].replacement == nf);
}

TEST_CASE("normal form rejects unit markers") {
    RewriteSystem rs = env(2);
    CHECK_THROWS_AS(normal_form(rs, FreeElt(Word{Gen::unit_marker(), Gen{1, 2}})),
                    std::invalid_argument);
}
