#pragma once

#include "qlie/scalars.hpp"

#include <compare>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlie {

/// Generator index pair standing for the matrix unit in row i, column j.
/// The pair (0,0) is reserved for the adjoined unit marker used on the
/// extended module; everywhere else 1 <= i < j <= n+1 holds.
struct Gen {
    int i = 0;
    int j = 0;

    static Gen unit_marker() { return Gen{0, 0}; }
    bool is_unit_marker() const { return i == 0 && j == 0; }

    bool valid_for(int n) const { return 1 <= i && i < j && j <= n + 1; }

    // Total order: first by index sum, ties broken by the column index.
    friend std::strong_ordering operator<=>(const Gen& a, const Gen& b) {
        if (auto c = (a.i + a.j) <=> (b.i + b.j); c != 0) return c;
        return a.j <=> b.j;
    }
    friend bool operator==(const Gen& a, const Gen& b) = default;

    std::string str() const;
};

enum class Ordering { LT, EQ, GT };

inline Ordering gen_compare(const Gen& a, const Gen& b) {
    auto c = a <=> b;
    if (c < 0) return Ordering::LT;
    if (c > 0) return Ordering::GT;
    return Ordering::EQ;
}

/// Default gradation: the number of rows the generator spans.
inline int eta_default(const Gen& g) { return g.j - g.i + 1; }

/// Gradation assignment, total on the generator set of a structure.
struct Grading {
    std::map<Gen, int> eta;

    int operator()(const Gen& g) const {
        auto it = eta.find(g);
        if (it == eta.end()) throw std::invalid_argument("grading undefined for " + g.str());
        return it->second;
    }
};

/// Basis word: a finite sequence of generators, possibly containing the unit
/// marker. The empty word is the algebra unit of the tensor algebra.
struct Word {
    std::vector<Gen> factors;

    Word() = default;
    Word(std::initializer_list<Gen> fs) : factors(fs) {}
    explicit Word(std::vector<Gen> fs) : factors(std::move(fs)) {}

    size_t size() const { return factors.size(); }
    bool empty() const { return factors.empty(); }
    const Gen& operator[](size_t k) const { return factors[k]; }

    bool nondecreasing() const {
        for (size_t k = 0; k + 1 < factors.size(); ++k)
            if (factors[k + 1] < factors[k]) return false;
        return true;
    }
    bool has_unit_marker() const {
        for (const auto& g : factors)
            if (g.is_unit_marker()) return true;
        return false;
    }

    Word concat(const Word& o) const {
        Word w = *this;
        w.factors.insert(w.factors.end(), o.factors.begin(), o.factors.end());
        return w;
    }

    // Lexicographic on factors in the generator order, prefixes first.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        size_t m = std::min(a.factors.size(), b.factors.size());
        for (size_t k = 0; k < m; ++k)
            if (auto c = a.factors[k] <=> b.factors[k]; c != 0) return c;
        return a.factors.size() <=> b.factors.size();
    }
    friend bool operator==(const Word& a, const Word& b) = default;

    std::string str() const;
};

/// Finite linear combination of basis words with coefficients in K.
/// Canonical form: no stored coefficient is zero.
template <typename K>
class Elt {
public:
    Elt() = default;
    explicit Elt(const Word& w, K coeff = K(1)) {
        if (!coeff.is_zero()) terms_[w] = std::move(coeff);
    }

    static Elt zero() { return Elt(); }
    static Elt unit() { return Elt(Word{}); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, K>& terms() const { return terms_; }

    K coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K() : it->second;
    }

    void add_term(const Word& w, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Elt& operator+=(const Elt& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Elt& operator-=(const Elt& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend Elt operator+(Elt a, const Elt& b) { return a += b; }
    friend Elt operator-(Elt a, const Elt& b) { return a -= b; }
    Elt operator-() const {
        Elt r;
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }

    friend Elt operator*(const K& s, const Elt& x) {
        Elt r;
        for (const auto& [w, c] : x.terms_) r.add_term(w, s * c);
        return r;
    }

    // Tensor/concatenation product.
    friend Elt operator*(const Elt& a, const Elt& b) {
        Elt r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
        return r;
    }

    friend bool operator==(const Elt& a, const Elt& b) = default;

private:
    std::map<Word, K> terms_;
};

using FreeElt = Elt<QScalar>;
using LFreeElt = Elt<LScalar>;

/// Rule on two adjacent tensor factors, extended linearly by extend_bilinear.
template <typename K>
struct PairRule {
    std::function<Elt<K>(const Gen&, const Gen&)> apply;
    bool handles_unit_markers = false;
};

using QPairRule = PairRule<QScalar>;
using LPairRule = PairRule<LScalar>;

/// Applies the rule to the adjacent factors at (position, position+1) in every
/// word of x, splicing the result in place; positions are 1-based.
template <typename K>
Elt<K> extend_bilinear(const PairRule<K>& rule, int position, const Elt<K>& x) {
    if (position < 1) throw std::invalid_argument("extend_bilinear: position must be >= 1");
    Elt<K> out;
    for (const auto& [w, c] : x.terms()) {
        if (w.size() < static_cast<size_t>(position) + 1)
            throw std::invalid_argument("extend_bilinear: word too short for position " +
                                        std::to_string(position) + ": " + w.str());
        const Gen& a = w[position - 1];
        const Gen& b = w[position];
        if ((a.is_unit_marker() || b.is_unit_marker()) && !rule.handles_unit_markers)
            throw std::invalid_argument("extend_bilinear: unit marker at target position in " + w.str());
        Elt<K> local = rule.apply(a, b);
        for (const auto& [lw, lc] : local.terms()) {
            Word spliced;
            spliced.factors.reserve(w.size() - 2 + lw.size());
            spliced.factors.insert(spliced.factors.end(), w.factors.begin(), w.factors.begin() + (position - 1));
            spliced.factors.insert(spliced.factors.end(), lw.factors.begin(), lw.factors.end());
            spliced.factors.insert(spliced.factors.end(), w.factors.begin() + position + 1, w.factors.end());
            out.add_term(spliced, c * lc);
        }
    }
    return out;
}

/// Deterministic rendering in the element grammar; see parse.hpp for the
/// inverse direction.
std::string render(const FreeElt& x);
std::string render(const LFreeElt& x);

}  // namespace qlie
