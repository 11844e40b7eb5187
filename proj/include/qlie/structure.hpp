#pragma once

#include "qlie/basis.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qlie {

/// Exact bracket arithmetic on matrix units of the classical algebra; ground
/// truth for structure constants.
struct ClassicalOracle {
    int n;

    // [E_ab, E_ij] as a signed combination of matrix-unit generators.
    FreeElt bracket(const Gen& a, const Gen& b) const;

    // The integer c with [h_ab, e_ij] = c * e_ij, h_ab = E_aa - E_bb.
    int c_const(const Gen& ab, const Gen& ij) const;
};

/// The full structure datum: generator set, order, gradation, presymmetry
/// table, bracket table, pseudobracket table. Tables are materialized for
/// every directed generator pair; immutable after construction.
struct TLieStructure {
    struct SEntry {
        QScalar scalar;
        Gen out1, out2;
    };
    using PairKey = std::pair<Gen, Gen>;

    int n = 0;
    std::vector<Gen> gens;  // ascending in the generator order
    Grading grading;
    std::map<PairKey, SEntry> s_table;
    std::map<PairKey, FreeElt> bracket_table;  // words of length <= 1
    std::map<PairKey, FreeElt> pseudo_table;   // words of length 2

    size_t gen_count() const { return gens.size(); }

    const SEntry& s_entry(const Gen& x, const Gen& y) const;
    QScalar swap_scalar(const Gen& x, const Gen& y) const { return s_entry(x, y).scalar; }
    const FreeElt& bracket_entry(const Gen& x, const Gen& y) const;
    const FreeElt& pseudo_entry(const Gen& x, const Gen& y) const;

    QPairRule s_rule() const;
    QPairRule bracket_rule() const;
    QPairRule pseudo_rule() const;

    // Copies with one directed table entry replaced; used to build negative
    // controls for the checkers.
    TLieStructure with_s_scalar(const Gen& x, const Gen& y, QScalar scalar) const;
    TLieStructure with_bracket_entry(const Gen& x, const Gen& y, FreeElt value) const;
    TLieStructure with_pseudo_entry(const Gen& x, const Gen& y, FreeElt value) const;
};

/// Applies the presymmetry table linearly; every word must have length 2.
FreeElt presymmetry(const TLieStructure& s, const FreeElt& x);
/// Applies the bracket table linearly; every word must have length 2.
FreeElt bracket(const TLieStructure& s, const FreeElt& x);
/// Applies the pseudobracket table linearly; every word must have length 2.
FreeElt pseudobracket(const TLieStructure& s, const FreeElt& x);

/// Builds the deformed structure on the strictly upper-triangular generators
/// for rank parameter n >= 1, with the given gradation (default j - i + 1).
TLieStructure make_sl_q(int n, std::optional<Grading> eta = std::nullopt);

/// Sign presymmetry S(x (x) y) = (-1)^((deg x - 1)(deg y - 1)) y (x) x on
/// abstract graded symbols; returned as a structure-table fragment.
std::map<TLieStructure::PairKey, TLieStructure::SEntry>
make_sign_presymmetry(const std::vector<Gen>& symbols, const Grading& degrees);

/// Abelian structure (zero bracket and pseudobracket) carrying the sign
/// presymmetry over `degrees.size()` abstract symbols of the given degrees.
TLieStructure make_sign_structure(const std::vector<int>& degrees);

}  // namespace qlie
