#include "qlie/pbw.hpp"

#include "qlie/graded.hpp"

#include <algorithm>

namespace qlie {

int find_redex(const Word& w, Strategy strategy) {
    if (strategy == Strategy::Leftmost) {
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k + 1] < w[k]) return static_cast<int>(k) + 1;
        return 0;
    }
    for (size_t k = w.size(); k >= 2; --k)
        if (w[k - 1] < w[k - 2]) return static_cast<int>(k) - 1;
    return 0;
}

namespace {

QPairRule relation_rule(const RewriteSystem& rs) {
    const TLieStructure& s = rs.structure;
    const bool enveloping = rs.mode == RewriteMode::Enveloping;
    return {[&s, enveloping](const Gen& a, const Gen& b) {
                const TLieStructure::SEntry& e = s.s_entry(a, b);
                FreeElt r(Word{e.out1, e.out2}, e.scalar);
                if (enveloping) {
                    r += s.pseudo_entry(a, b);
                    r += s.bracket_entry(a, b);
                }
                return r;
            },
            false};
}

FreeElt rewrite_at(const RewriteSystem& rs, const Word& w, int position) {
    return extend_bilinear(relation_rule(rs), position, FreeElt(w));
}

}  // namespace

FreeElt rewrite_step(const RewriteSystem& rs, const Word& w, Strategy strategy) {
    int pos = find_redex(w, strategy);
    if (pos == 0) throw NoRedex(w);
    return rewrite_at(rs, w, pos);
}

FreeElt normal_form(const RewriteSystem& rs, const FreeElt& x, Strategy strategy,
                    std::vector<TraceStep>* trace) {
    for (const auto& [w, c] : x.terms())
        if (w.has_unit_marker())
            throw std::invalid_argument("normal_form: unit marker in " + w.str());

    std::vector<TraceStep> local_trace;
    FreeElt pending = x;
    long long steps = 0;
    while (true) {
        const Word* target = nullptr;
        int pos = 0;
        for (const auto& [w, c] : pending.terms()) {
            pos = find_redex(w, strategy);
            if (pos != 0) {
                target = &w;
                break;
            }
        }
        if (!target) break;
        if (++steps > rs.max_steps) throw GuardExceeded(steps, std::move(local_trace));
        Word w = *target;
        QScalar c = pending.coeff(w);
        pending.add_term(w, -c);
        FreeElt replacement = rewrite_at(rs, w, pos);
        local_trace.push_back({w, pos, replacement});
        pending += c * replacement;
    }
    if (trace) *trace = std::move(local_trace);
    return pending;
}

ConfluenceReport overlap_confluence(const RewriteSystem& rs) {
    const TLieStructure& s = rs.structure;
    ConfluenceReport rep;
    rep.n = s.n;
    rep.mode = rs.mode;
    auto record = [&](const Word& w, FreeElt a, FreeElt b) {
        bool agree = a == b;
        rep.outcomes.push_back({w, std::move(a), std::move(b), agree});
        ++rep.overlap_count;
    };
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            if (!(y < x)) continue;
            for (const Gen& z : s.gens) {
                if (!(z < y)) continue;
                Word w{x, y, z};
                FreeElt via_front = normal_form(rs, rewrite_at(rs, w, 1));
                FreeElt via_back = normal_form(rs, rewrite_at(rs, w, 2));
                record(w, std::move(via_front), std::move(via_back));
            }
            // Repeated-pair overlaps: the strategies diverge after the first
            // step.
            for (const Word& w : {Word{x, y, y}, Word{x, x, y}}) {
                FreeElt left = normal_form(rs, FreeElt(w), Strategy::Leftmost);
                FreeElt right = normal_form(rs, FreeElt(w), Strategy::Rightmost);
                record(w, std::move(left), std::move(right));
            }
        }
    rep.pass = true;
    for (const auto& o : rep.outcomes) rep.pass = rep.pass && o.agree;
    return rep;
}

std::vector<Word> sorted_monomials(const TLieStructure& s, int max_len) {
    std::vector<Word> out;
    Word current;
    // Depth-first over nondecreasing factor sequences.
    auto rec = [&](auto&& self, size_t min_gen_idx) -> void {
        out.push_back(current);
        if (current.size() == static_cast<size_t>(max_len)) return;
        for (size_t k = min_gen_idx; k < s.gens.size(); ++k) {
            current.factors.push_back(s.gens[k]);
            self(self, k);
            current.factors.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

RankReport pbw_independence(const RewriteSystem& rs, int max_len) {
    if (max_len < 1) throw std::invalid_argument("pbw_independence: max_len must be >= 1");
    const TLieStructure& s = rs.structure;

    std::vector<Word> monomials = sorted_monomials(s, max_len);
    std::map<Word, size_t> column;
    for (size_t k = 0; k < monomials.size(); ++k) column[monomials[k]] = k;

    // All words of length <= max_len, shortest first.
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

    QMatrix m(words.size(), monomials.size());
    for (size_t r = 0; r < words.size(); ++r) {
        FreeElt nf = normal_form(rs, FreeElt(words[r]));
        for (const auto& [w, c] : nf.terms()) {
            auto it = column.find(w);
            if (it == column.end())
                throw std::logic_error("pbw_independence: normal form escaped the monomial space: " +
                                       w.str());
            m.at(r, it->second) = c;
        }
    }

    RankReport rep;
    rep.max_len = max_len;
    rep.word_count = static_cast<long long>(words.size());
    rep.monomial_count = static_cast<long long>(monomials.size());
    rep.rank = static_cast<long long>(rank_over_fraction_field(std::move(m)));
    rep.independent = rep.rank == rep.monomial_count;
    return rep;
}

}  // namespace qlie
