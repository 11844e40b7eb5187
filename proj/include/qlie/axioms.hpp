#pragma once

#include "qlie/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlie {

/// Which triples x (x) y (x) z a check enumerates: strictly ascending,
/// strictly descending, or the full cube of generator triples.
enum class TripleSpace { Ascending, Descending, Full };

enum class FiltrationConvention { Sum, Max };

inline const char* to_string(TripleSpace s) {
    switch (s) {
        case TripleSpace::Ascending: return "ascending";
        case TripleSpace::Descending: return "descending";
        default: return "full";
    }
}
inline const char* to_string(FiltrationConvention c) {
    return c == FiltrationConvention::Sum ? "sum" : "max";
}

struct Witness {
    std::string input;
    std::string residual;
};

/// Per-axiom verdict. `instances` always equals the full enumeration size for
/// the structure; the witness is the first violating input when any.
struct AxiomReport {
    std::string axiom;
    bool pass = true;
    long long instances = 0;
    long long out_of_space = 0;
    std::optional<Witness> witness;
    double elapsed_ms = 0.0;  // reported on stdout only, never serialized
};

// Operator pieces used to spell the identities: the table maps applied to two
// adjacent tensor factors at a 1-based position, extended linearly.
FreeElt op_s(const TLieStructure& s, int pos, const FreeElt& x);
FreeElt op_bracket(const TLieStructure& s, int pos, const FreeElt& x);
FreeElt op_pseudo(const TLieStructure& s, int pos, const FreeElt& x);
/// Bilinear bracket of two combinations of single generators.
FreeElt elt_bracket(const TLieStructure& s, const FreeElt& a, const FreeElt& b);

/// Swap-scalar inverse pairing and involutivity of the presymmetry.
std::vector<AxiomReport> check_scalar_hypotheses(const TLieStructure& s);

/// The three antisymmetry identities: bracket, pseudobracket, and the
/// vanishing of the bracket on every pseudobracket output.
std::vector<AxiomReport> check_antisymmetry(const TLieStructure& s);

/// Braided Jacobi identity on the full cube of generator triples.
AxiomReport check_jacobi(const TLieStructure& s);

/// Second Jacobi identity on strictly descending triples, in operator form
/// and in the equivalent scalar form; both are evaluated independently.
std::vector<AxiomReport> check_second_jacobi(const TLieStructure& s);

/// The four multiplicativity identities relating the presymmetry with the
/// bracket on ascending and descending triples.
std::vector<AxiomReport> check_multiplicativity(const TLieStructure& s, TripleSpace space);

/// Preconditions of the second-Jacobi reduction (the two descending
/// multiplicativity identities and the equal-pair condition) together with
/// the derived left and right Jacobi identities of a balanced structure.
std::vector<AxiomReport> check_prejacobi_conditions(const TLieStructure& s);

/// Gradation strictness for the bracket and the filtration bound for
/// pseudobracket outputs under the chosen convention.
std::vector<AxiomReport> check_stability(const TLieStructure& s, FiltrationConvention convention);

/// Double-bracket vanishing on strictly descending triples, both for the
/// classical bracket and for the deformed one.
std::vector<AxiomReport> check_descending_triples(const TLieStructure& s);

/// The whole suite in canonical order: scalar hypotheses, antisymmetry,
/// Jacobi, second Jacobi, multiplicativity, prejacobi and balanced
/// identities, descending triples, stability per requested convention.
std::vector<AxiomReport> run_axiom_suite(const TLieStructure& s,
                                         const std::vector<FiltrationConvention>& conventions);

}  // namespace qlie
