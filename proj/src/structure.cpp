#include "qlie/structure.hpp"

#include <algorithm>

namespace qlie {

namespace {

// Sparse matrix over the integers, keyed by (row, col).
using UnitMatrix = std::map<std::pair<int, int>, Int>;

UnitMatrix mat_mul(const UnitMatrix& a, const UnitMatrix& b) {
    UnitMatrix r;
    for (const auto& [rc_a, va] : a)
        for (const auto& [rc_b, vb] : b) {
            if (rc_a.second != rc_b.first) continue;
            auto key = std::make_pair(rc_a.first, rc_b.second);
            Int& slot = r[key];
            slot += va * vb;
            if (slot == 0) r.erase(key);
        }
    return r;
}

UnitMatrix mat_sub(UnitMatrix a, const UnitMatrix& b) {
    for (const auto& [rc, v] : b) {
        Int& slot = a[rc];
        slot -= v;
        if (slot == 0) a.erase(rc);
    }
    return a;
}

UnitMatrix unit(int r, int c) { return {{{r, c}, 1}}; }

UnitMatrix commutator(const UnitMatrix& a, const UnitMatrix& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

}  // namespace

FreeElt ClassicalOracle::bracket(const Gen& a, const Gen& b) const {
    if (!a.valid_for(n) || !b.valid_for(n))
        throw std::invalid_argument("ClassicalOracle::bracket: generator out of range");
    UnitMatrix comm = commutator(unit(a.i, a.j), unit(b.i, b.j));
    FreeElt out;
    for (const auto& [rc, v] : comm) {
        if (rc.first >= rc.second)
            throw std::logic_error("ClassicalOracle::bracket: non-upper-triangular output");
        out.add_term(Word{Gen{rc.first, rc.second}}, QScalar(v));
    }
    return out;
}

int ClassicalOracle::c_const(const Gen& ab, const Gen& ij) const {
    if (!ab.valid_for(n) || !ij.valid_for(n))
        throw std::invalid_argument("ClassicalOracle::c_const: generator out of range");
    UnitMatrix h = mat_sub(unit(ab.i, ab.i), unit(ab.j, ab.j));
    UnitMatrix comm = commutator(h, unit(ij.i, ij.j));
    if (comm.empty()) return 0;
    if (comm.size() != 1 || comm.begin()->first != std::make_pair(ij.i, ij.j))
        throw std::logic_error("ClassicalOracle::c_const: [h,e] is not a multiple of e");
    return static_cast<int>(comm.begin()->second);
}

const TLieStructure::SEntry& TLieStructure::s_entry(const Gen& x, const Gen& y) const {
    auto it = s_table.find({x, y});
    if (it == s_table.end())
        throw std::invalid_argument("pair (" + x.str() + "," + y.str() + ") not in structure");
    return it->second;
}

const FreeElt& TLieStructure::bracket_entry(const Gen& x, const Gen& y) const {
    auto it = bracket_table.find({x, y});
    if (it == bracket_table.end())
        throw std::invalid_argument("pair (" + x.str() + "," + y.str() + ") not in structure");
    return it->second;
}

const FreeElt& TLieStructure::pseudo_entry(const Gen& x, const Gen& y) const {
    auto it = pseudo_table.find({x, y});
    if (it == pseudo_table.end())
        throw std::invalid_argument("pair (" + x.str() + "," + y.str() + ") not in structure");
    return it->second;
}

QPairRule TLieStructure::s_rule() const {
    return {[this](const Gen& a, const Gen& b) {
                const SEntry& e = s_entry(a, b);
                return FreeElt(Word{e.out1, e.out2}, e.scalar);
            },
            false};
}

QPairRule TLieStructure::bracket_rule() const {
    return {[this](const Gen& a, const Gen& b) { return bracket_entry(a, b); }, false};
}

QPairRule TLieStructure::pseudo_rule() const {
    return {[this](const Gen& a, const Gen& b) { return pseudo_entry(a, b); }, false};
}

TLieStructure TLieStructure::with_s_scalar(const Gen& x, const Gen& y, QScalar scalar) const {
    TLieStructure c = *this;
    c.s_table.at({x, y}).scalar = std::move(scalar);
    return c;
}

TLieStructure TLieStructure::with_bracket_entry(const Gen& x, const Gen& y, FreeElt value) const {
    TLieStructure c = *this;
    c.bracket_table.at({x, y}) = std::move(value);
    return c;
}

TLieStructure TLieStructure::with_pseudo_entry(const Gen& x, const Gen& y, FreeElt value) const {
    TLieStructure c = *this;
    c.pseudo_table.at({x, y}) = std::move(value);
    return c;
}

namespace {

FreeElt apply_length2(const TLieStructure& s, const QPairRule& rule, const FreeElt& x,
                      const char* what) {
    for (const auto& [w, c] : x.terms()) {
        if (w.size() != 2)
            throw std::invalid_argument(std::string(what) + ": word of length != 2: " + w.str());
        if (w.has_unit_marker())
            throw std::invalid_argument(std::string(what) + ": unit marker in " + w.str());
    }
    (void)s;
    return extend_bilinear(rule, 1, x);
}

}  // namespace

FreeElt presymmetry(const TLieStructure& s, const FreeElt& x) {
    return apply_length2(s, s.s_rule(), x, "presymmetry");
}

FreeElt bracket(const TLieStructure& s, const FreeElt& x) {
    return apply_length2(s, s.bracket_rule(), x, "bracket");
}

FreeElt pseudobracket(const TLieStructure& s, const FreeElt& x) {
    return apply_length2(s, s.pseudo_rule(), x, "pseudobracket");
}

TLieStructure make_sl_q(int n, std::optional<Grading> eta) {
    if (n < 1) throw std::invalid_argument("make_sl_q: n must be >= 1");
    TLieStructure s;
    s.n = n;
    for (int j = 2; j <= n + 1; ++j)
        for (int i = 1; i < j; ++i) s.gens.push_back(Gen{i, j});
    std::sort(s.gens.begin(), s.gens.end());

    if (eta) {
        s.grading = std::move(*eta);
        for (const Gen& g : s.gens) s.grading(g);  // must be total
    } else {
        for (const Gen& g : s.gens) s.grading.eta[g] = eta_default(g);
    }

    ClassicalOracle oracle{n};
    const QScalar q_minus_qinv = QScalar::q_pow(1) - QScalar::q_pow(-1);

    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            if (x == y) {
                s.s_table[{x, y}] = {QScalar::one(), x, x};
                s.bracket_table[{x, y}] = FreeElt::zero();
                s.pseudo_table[{x, y}] = FreeElt::zero();
            } else if (x < y) {
                const int c = oracle.c_const(x, y);
                s.s_table[{x, y}] = {QScalar::q_pow(c), y, x};
                s.bracket_table[{x, y}] = oracle.bracket(x, y);
                FreeElt pseudo;
                if (x.i < y.i && y.i < x.j && x.j < y.j)
                    pseudo = FreeElt(Word{Gen{y.i, x.j}, Gen{x.i, y.j}}, q_minus_qinv);
                s.pseudo_table[{x, y}] = pseudo;
            }
        }
    // Descending pairs via the antisymmetry extensions and S^2 = 1.
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            if (!(y < x)) continue;
            const QScalar q_xy = s.s_table.at({y, x}).scalar.unit_inverse();
            s.s_table[{x, y}] = {q_xy, y, x};
            s.bracket_table[{x, y}] = (-q_xy) * s.bracket_table.at({y, x});
            s.pseudo_table[{x, y}] = (-q_xy) * s.pseudo_table.at({y, x});
        }
    return s;
}

std::map<TLieStructure::PairKey, TLieStructure::SEntry>
make_sign_presymmetry(const std::vector<Gen>& symbols, const Grading& degrees) {
    std::map<TLieStructure::PairKey, TLieStructure::SEntry> table;
    for (const Gen& x : symbols)
        for (const Gen& y : symbols) {
            const long exponent = static_cast<long>(degrees(x) - 1) * (degrees(y) - 1);
            table[{x, y}] = {QScalar(exponent % 2 == 0 ? 1 : -1), y, x};
        }
    return table;
}

TLieStructure make_sign_structure(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("make_sign_structure: no symbols");
    TLieStructure s;
    s.n = static_cast<int>(degrees.size());
    for (size_t t = 0; t < degrees.size(); ++t) {
        Gen sym{static_cast<int>(t) + 1, static_cast<int>(t) + 2};
        s.gens.push_back(sym);
        s.grading.eta[sym] = degrees[t];
    }
    s.s_table = make_sign_presymmetry(s.gens, s.grading);
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            s.bracket_table[{x, y}] = FreeElt::zero();
            s.pseudo_table[{x, y}] = FreeElt::zero();
        }
    return s;
}

}  // namespace qlie
