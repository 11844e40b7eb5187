#include "qlie/graded.hpp"

#include "qlie/rng.hpp"

namespace qlie {

size_t rank_over_fraction_field(QMatrix m) {
    size_t rank = 0;
    QScalar prev_pivot = QScalar::one();
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t pivot_row = rank;
        while (pivot_row < m.rows && m.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == m.rows) continue;
        if (pivot_row != rank)
            for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(pivot_row, c), m.at(rank, c));
        const QScalar pivot = m.at(rank, col);
        for (size_t r = rank + 1; r < m.rows; ++r) {
            const QScalar lead = m.at(r, col);
            for (size_t c = col + 1; c < m.cols; ++c) {
                QScalar v = pivot * m.at(r, c) - lead * m.at(rank, c);
                m.at(r, c) = v.is_zero() ? QScalar::zero() : exact_div(v, prev_pivot);
            }
            m.at(r, col) = QScalar::zero();
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

int eta_degree(const TLieStructure& s, const Word& w) {
    int total = 0;
    for (const Gen& g : w.factors) total += s.grading(g);
    return total;
}

FiltrationLevel filtration_basis(const TLieStructure& s, int m) {
    FiltrationLevel level;
    level.m = m;
    if (m < 0) return level;
    Word current;
    int degree = 0;
    auto rec = [&](auto&& self, size_t min_gen_idx) -> void {
        level.basis.push_back(current);
        for (size_t k = min_gen_idx; k < s.gens.size(); ++k) {
            const int d = s.grading(s.gens[k]);
            if (degree + d > m) continue;
            current.factors.push_back(s.gens[k]);
            degree += d;
            self(self, k);
            degree -= d;
            current.factors.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(level.basis.begin(), level.basis.end());
    return level;
}

namespace {

void require_certificate(const TLieStructure& s, const ConfluenceCertificate& cert) {
    if (!cert.pass || cert.n != s.n || cert.mode != RewriteMode::Enveloping)
        throw PreconditionUnverified(
            "graded checks need a passing enveloping-mode confluence certificate for n = " +
            std::to_string(s.n));
}

// All tensor words (not necessarily nondecreasing) of gradation degree <= m.
std::vector<Word> words_up_to_degree(const TLieStructure& s, int m) {
    std::vector<Word> out;
    if (m < 0) return out;
    Word current;
    int degree = 0;
    auto rec = [&](auto&& self) -> void {
        out.push_back(current);
        for (const Gen& g : s.gens) {
            const int d = s.grading(g);
            if (degree + d > m) continue;
            current.factors.push_back(g);
            degree += d;
            self(self);
            degree -= d;
            current.factors.pop_back();
        }
    };
    rec(rec);
    return out;
}

// Dimension of the span of the normal forms of all words of degree <= m,
// in coordinates over the nondecreasing words of degree <= m.
long long filtration_dim(const RewriteSystem& rs, int m) {
    const TLieStructure& s = rs.structure;
    if (m < 0) return 0;
    FiltrationLevel level = filtration_basis(s, m);
    std::map<Word, size_t> column;
    for (size_t k = 0; k < level.basis.size(); ++k) column[level.basis[k]] = k;

    std::vector<Word> words = words_up_to_degree(s, m);
    QMatrix mat(words.size(), level.basis.size());
    for (size_t r = 0; r < words.size(); ++r) {
        FreeElt nf = normal_form(rs, FreeElt(words[r]));
        for (const auto& [w, c] : nf.terms()) {
            auto it = column.find(w);
            if (it == column.end())
                throw std::logic_error("filtration_dim: normal form escaped level " +
                                       std::to_string(m) + ": " + w.str());
            mat.at(r, it->second) = c;
        }
    }
    return static_cast<long long>(rank_over_fraction_field(std::move(mat)));
}

}  // namespace

OmegaReport omega_check(const TLieStructure& s, int m, const ConfluenceCertificate& cert) {
    require_certificate(s, cert);
    if (m < 0) throw std::invalid_argument("omega_check: m must be >= 0");
    RewriteSystem rs{s, RewriteMode::Enveloping, 10000};

    FiltrationLevel level_m = filtration_basis(s, m);
    FiltrationLevel level_prev = filtration_basis(s, m - 1);

    OmegaReport rep;
    rep.m = m;
    rep.sorted_count =
        static_cast<long long>(level_m.basis.size()) - static_cast<long long>(level_prev.basis.size());
    rep.dim_filtration = filtration_dim(rs, m);
    const long long dim_prev = filtration_dim(rs, m - 1);
    rep.dim_graded = rep.dim_filtration - dim_prev;

    // Injectivity: the degree-m nondecreasing words stay independent modulo
    // the previous level.
    rep.injective = rep.dim_graded == rep.sorted_count;

    // Surjectivity: the previous level together with the degree-m
    // nondecreasing words spans the whole level.
    std::map<Word, size_t> column;
    for (size_t k = 0; k < level_m.basis.size(); ++k) column[level_m.basis[k]] = k;
    std::vector<Word> rows = words_up_to_degree(s, m - 1);
    size_t extra = 0;
    for (const Word& w : level_m.basis)
        if (eta_degree(s, w) == m) ++extra;
    QMatrix mat(rows.size() + extra, level_m.basis.size());
    size_t r = 0;
    for (; r < rows.size(); ++r) {
        FreeElt nf = normal_form(rs, FreeElt(rows[r]));
        for (const auto& [w, c] : nf.terms()) mat.at(r, column.at(w)) = c;
    }
    for (const Word& w : level_m.basis) {
        if (eta_degree(s, w) != m) continue;
        mat.at(r, column.at(w)) = QScalar::one();
        ++r;
    }
    rep.surjective = static_cast<long long>(rank_over_fraction_field(std::move(mat))) ==
                     rep.dim_filtration;
    return rep;
}

QMatrix omega_matrix(const TLieStructure& s, int m, std::vector<Word>* row_labels,
                     std::vector<Word>* col_labels) {
    RewriteSystem rs{s, RewriteMode::Enveloping, 10000};
    FiltrationLevel level = filtration_basis(s, m);
    std::map<Word, size_t> column;
    for (size_t k = 0; k < level.basis.size(); ++k) column[level.basis[k]] = k;
    std::vector<Word> rows;
    for (const Word& w : level.basis)
        if (eta_degree(s, w) == m) rows.push_back(w);
    QMatrix mat(rows.size(), level.basis.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        FreeElt nf = normal_form(rs, FreeElt(rows[r]));
        for (const auto& [w, c] : nf.terms()) mat.at(r, column.at(w)) = c;
    }
    if (row_labels) *row_labels = std::move(rows);
    if (col_labels) *col_labels = level.basis;
    return mat;
}

MorphismReport omega_morphism_check(const TLieStructure& s, int max_sum,
                                    const ConfluenceCertificate& cert) {
    require_certificate(s, cert);
    RewriteSystem env{s, RewriteMode::Enveloping, 10000};
    RewriteSystem sym{s, RewriteMode::Symmetric, 10000};

    MorphismReport rep;
    rep.max_sum = max_sum;
    std::vector<Word> words = filtration_basis(s, max_sum).basis;
    for (const Word& u : words)
        for (const Word& v : words) {
            const int total = eta_degree(s, u) + eta_degree(s, v);
            if (total > max_sum) continue;
            ++rep.pairs;
            FreeElt product = normal_form(env, FreeElt(u) * FreeElt(v));
            FreeElt top;
            for (const auto& [w, c] : product.terms())
                if (eta_degree(s, w) == total) top.add_term(w, c);
            FreeElt symmetric = normal_form(sym, FreeElt(u) * FreeElt(v));
            if (top != symmetric) {
                ++rep.failures;
                if (!rep.witness)
                    rep.witness = MorphismWitness{u, v, render(top), render(symmetric)};
            }
        }
    rep.pass = rep.failures == 0;
    return rep;
}

ZeroDivisorReport zero_divisor_probe(const TLieStructure& s, int deg, int trials, uint64_t seed) {
    if (deg < 1 || trials < 1)
        throw std::invalid_argument("zero_divisor_probe: deg and trials must be >= 1");
    RewriteSystem rs{s, RewriteMode::Enveloping, 10000};
    SplitMix64 rng(seed);

    auto random_nonzero = [&]() {
        while (true) {
            FreeElt x;
            const int terms = rng.range(1, 3);
            for (int t = 0; t < terms; ++t) {
                const int len = rng.range(1, deg);
                std::vector<Gen> factors;
                for (int k = 0; k < len; ++k)
                    factors.push_back(s.gens[rng.below(s.gens.size())]);
                std::sort(factors.begin(), factors.end());
                int coeff = 0;
                while (coeff == 0) coeff = rng.range(-2, 2);
                x.add_term(Word(std::move(factors)), QScalar::q_pow(rng.range(-1, 1), coeff));
            }
            if (!x.is_zero()) return x;
        }
    };

    ZeroDivisorReport rep;
    rep.max_deg = deg;
    rep.trials = trials;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        FreeElt a = random_nonzero();
        FreeElt b = random_nonzero();
        FreeElt product = normal_form(rs, a * b);
        if (product.is_zero()) {
            ++rep.found;
            if (!rep.witness) rep.witness = Witness{render(a) + " | " + render(b), "0"};
        }
    }
    return rep;
}

}  // namespace qlie
